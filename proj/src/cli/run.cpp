#include "akns/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "akns/errors.hpp"
#include "akns/frobenius.hpp"
#include "akns/gapcheck.hpp"
#include "akns/hierarchy.hpp"
#include "akns/poles.hpp"
#include "akns/series/generators.hpp"
#include "akns/series/io.hpp"

namespace akns::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string format = "json";
  bool timing = false;
  std::optional<int> K;
  int k = 3;
  int m = 2;
  std::string constants;
  std::optional<long> n;
  std::string example_name;
  std::string g2 = "4", g3 = "0", e2 = "1";
  std::optional<std::string> alpha, beta;
};

// A check failed; the report is still printed.
struct CheckFailed {
  Json report;
};

std::string read_input(const Options& o, std::istream& in) {
  std::ostringstream buf;
  if (o.input.empty() || o.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(o.input);
    if (!f) throw Error("cannot open input file " + o.input);
    buf << f.rdbuf();
  }
  return buf.str();
}

std::optional<int> env_default_k() {
  const char* v = std::getenv("AKNS_DEFAULT_K");
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    size_t used = 0;
    const int k = std::stoi(v, &used);
    if (used != std::string(v).size() || k < 1) throw std::invalid_argument("");
    return k;
  } catch (const std::exception&) {
    throw Error(std::string("AKNS_DEFAULT_K must be a positive integer, got \"") + v + "\"");
  }
}

int truncation(const Options& o, int fallback) {
  if (o.K) return *o.K;
  if (auto k = env_default_k()) return *k;
  return fallback;
}

ConstantVector parse_constants(const std::string& text) {
  std::vector<std::optional<GaussRat>> v;
  if (text.empty()) return ConstantVector();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "*")
      v.emplace_back(std::nullopt);
    else
      v.emplace_back(parse_gauss_rat(item));
  }
  return ConstantVector(std::move(v));
}

Json constants_json(const ConstantVector& c) {
  Json a = Json::array();
  for (const auto& v : c.values()) a.push_back(v ? v->str() : std::string("*"));
  return a;
}

GaussRat parse_param(const std::string& name, const std::string& text) {
  try {
    return parse_gauss_rat(text);
  } catch (const ParseError& e) {
    throw ParseError("bad value for --" + name + ": " + e.what(), 1, e.column());
  }
}

std::vector<PoleSeries> read_pole_series(const Json& j, std::string_view raw) {
  std::vector<PoleSeries> out;
  if (j.is_object() && j.contains("poles")) {
    for (const auto& e : j.at("poles")) {
      PoleSeries s;
      s.label = e.contains("label") ? e.at("label").get<std::string>() : "pole";
      s.p = series_from_json(e.at("p"), raw).series;
      s.q = series_from_json(e.at("q"), raw).series;
      out.push_back(std::move(s));
    }
    if (out.empty()) throw ParseError("empty pole list", 1, 1);
    return out;
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    throw ParseError("expected {\"p\", \"q\"} or {\"poles\": [...]}", 1, 1);
  const SeriesFile p = series_from_json(j.at("p"), raw);
  out.push_back(PoleSeries{"x=" + p.center, p.series, series_from_json(j.at("q"), raw).series});
  return out;
}

PoleData read_pole_data(const Json& j, std::string_view raw) {
  if (j.is_object() && j.contains("phi")) return pole_data_from_json(j, raw);
  const auto poles = read_pole_series(j, raw);
  return PoleData::from_series(poles.front().p, poles.front().q);
}

int max_verifiable(const std::vector<PoleSeries>& poles, int m) {
  int depth = INT_MAX;
  for (const auto& s : poles) depth = std::min({depth, s.p.max_order(), s.q.max_order()});
  return depth - m;
}

Json residual_entry_json(const std::optional<ResidualEntry>& e) {
  if (!e) return nullptr;
  Json j;
  j["function"] = e->function;
  j["order"] = e->order;
  j["coefficient"] = e->coefficient.str();
  return j;
}

Json gap_failure_json(const std::optional<GapFailure>& f) {
  if (!f) return nullptr;
  Json j;
  j["stage"] = f->stage;
  j["condition"] = f->condition;
  j["index"] = f->index;
  j["detail"] = f->detail;
  if (!f->pole.empty()) j["pole"] = f->pole;
  return j;
}

Json pole_failure_json(const std::optional<PoleFailure>& f) {
  if (!f) return nullptr;
  Json j;
  j["condition"] = f->condition;
  j["index"] = f->index;
  j["detail"] = f->detail;
  return j;
}

Json opt_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

Json sym_list(const std::vector<SymPoly>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

// Commands ------------------------------------------------------------------

Json cmd_recursion(const Options& o) {
  const HierarchyPair& h = compute_fg(o.k);
  Json r;
  r["k"] = o.k;
  r["f"] = h.f.str();
  r["g"] = h.g.str();
  Json cs = Json::array();
  for (const auto& s : h.constants_used) cs.push_back(s.name());
  r["constants"] = cs;
  return r;
}

Json cmd_stationary(const Options& o, std::string_view raw) {
  const auto poles = read_pole_series(parse_json_text(raw), raw);
  const ConstantVector c = parse_constants(o.constants);
  const int through = truncation(o, max_verifiable(poles, o.m));
  Json r;
  r["m"] = o.m;
  r["constants"] = constants_json(c);
  r["through"] = through;
  bool ok = true;
  Json results = Json::array();
  for (const auto& pole : poles) {
    const StationaryVerdict v = stationary_residual(pole.p, pole.q, o.m, c, through);
    Json e;
    e["label"] = pole.label;
    e["is_zero"] = v.is_zero;
    e["first_nonzero"] = residual_entry_json(v.first_nonzero);
    results.push_back(e);
    ok = ok && v.is_zero;
  }
  r["stationary"] = ok;
  r["poles"] = results;
  if (!ok) throw CheckFailed{r};
  return r;
}

Json cmd_solve_constants(const Options& o, std::string_view raw) {
  const auto poles = read_pole_series(parse_json_text(raw), raw);
  const PoleSeries& pole = poles.front();
  const int through = truncation(o, max_verifiable(poles, o.m));
  const ConstantSolution s = solve_constants(pole.p, pole.q, o.m, through);
  Json r;
  r["m"] = o.m;
  r["through"] = through;
  r["status"] = s.status == SolveStatus::solved       ? "solved"
                : s.status == SolveStatus::infeasible ? "infeasible"
                                                      : "inconclusive";
  r["constants"] = s.status == SolveStatus::solved ? constants_json(s.constants) : Json(nullptr);
  r["detail"] = s.detail;
  if (s.status != SolveStatus::solved) throw CheckFailed{r};
  return r;
}

Json cmd_pole_check(std::string_view raw) {
  const PoleData d = read_pole_data(parse_json_text(raw), raw);
  const PoleReport cls = classify_pole(d);
  Json r;
  r["n"] = opt_long(cls.n);
  r["passes"] = cls.passes;
  r["checked_through"] = cls.checked_through;
  r["first_failure"] = pole_failure_json(cls.first_failure);
  if (cls.passes && d.depth() >= 2 * *cls.n) {
    const ProductReport pr = product_laurent(d);
    Json p;
    p["vanishing"] = pr.vanishing;
    p["first_nonvanishing"] = pr.first_nonvanishing ? Json(*pr.first_nonvanishing) : Json(nullptr);
    p["pq"] = series_to_json(pr.pq);
    r["product"] = p;
  } else {
    r["product"] = nullptr;
  }
  if (!cls.passes) throw CheckFailed{r};
  return r;
}

Json cmd_frobenius(const Options& o, std::string_view raw) {
  const PoleData d = read_pole_data(parse_json_text(raw), raw);
  const int K = truncation(o, d.depth() + 1);
  const MeromorphyVerdict v = meromorphy_verdict(d, K);
  Json r;
  r["K"] = K;
  r["n"] = v.n == 0 ? Json(nullptr) : Json(v.n);
  r["meromorphic"] = v.meromorphic;
  r["obstruction"] = v.obstruction.str();
  r["reason"] = v.reason;
  if (v.meromorphic) {
    Json sols = Json::array();
    for (long sigma : {v.n, -v.n}) {
      const FrobeniusSolution s = local_solution(d, sigma, K);
      Json e;
      e["sigma"] = sigma;
      e["alpha"] = sym_list(s.alpha);
      e["beta"] = sym_list(s.beta);
      e["resonance_step"] = s.resonance_step < 0 ? Json(nullptr) : Json(s.resonance_step);
      e["free_choice"] = s.resonance_free_choice;
      const auto res = residual_check(d, s, K);
      e["residual_first_nonzero"] = res ? Json(*res) : Json(nullptr);
      sols.push_back(e);
    }
    r["solutions"] = sols;
  }
  if (!v.meromorphic) throw CheckFailed{r};
  return r;
}

Json cmd_finite_gap(std::string_view raw) {
  const Json j = parse_json_text(raw);
  const Json& body = j.is_object() && j.contains("u") ? j.at("u") : j;
  const GapReport g = finite_gap_check(PotentialPoleData(series_from_json(body, raw).series));
  Json r;
  r["finite_gap"] = g.finite_gap;
  r["n"] = opt_long(g.n);
  r["checked_through"] = g.checked_through;
  r["first_failure"] = gap_failure_json(g.first_failure);
  if (!g.finite_gap) throw CheckFailed{r};
  return r;
}

Json cmd_pipeline(const Options& o, std::string_view raw) {
  const auto poles = read_pole_series(parse_json_text(raw), raw);
  const ConstantVector c = parse_constants(o.constants);
  const int through = truncation(o, max_verifiable(poles, o.m));
  const GapReport g = theorem4_pipeline(poles, o.m, c, through, o.n);
  Json r;
  r["m"] = o.m;
  r["constants"] = constants_json(c);
  r["through"] = through;
  r["finite_gap"] = g.finite_gap;
  r["n"] = opt_long(g.n);
  r["first_failure"] = gap_failure_json(g.first_failure);
  Json ps = Json::array();
  for (const auto& e : g.poles) {
    Json pj;
    pj["label"] = e.label;
    pj["n"] = opt_long(e.n);
    pj["stationary"] = e.stationary;
    pj["finite_gap"] = e.finite_gap;
    const std::string center = e.label.rfind("x=", 0) == 0 ? e.label.substr(2) : "0";
    if (e.finite_gap) pj["u"] = series_to_json(e.u, "x", center);
    ps.push_back(pj);
  }
  r["poles"] = ps;
  if (!g.finite_gap) throw CheckFailed{r};
  return r;
}

Json pole_json(const std::string& label, const std::string& center, const LaurentData& p, const LaurentData& q) {
  Json e;
  e["label"] = label;
  e["p"] = series_to_json(p, "x", center);
  e["q"] = series_to_json(q, "x", center);
  return e;
}

Json cmd_example(const Options& o) {
  const long n = o.n.value_or(1);
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  const int K = truncation(o, static_cast<int>(2 * n + 10));
  Json r;
  r["name"] = o.example_name;
  Json params;
  params["n"] = n;
  params["K"] = K;
  Json poles = Json::array();
  if (o.example_name == "csc") {
    const LaurentData s = csc_series(GaussRat(n), K);
    poles.push_back(pole_json("x=0", "0", s, s));
  } else {
    const EllipticParams ep(parse_param("g2", o.g2), parse_param("g3", o.g3), parse_param("e2", o.e2));
    params["g2"] = ep.g2().str();
    params["g3"] = ep.g3().str();
    params["e2"] = ep.e2().str();
    if (o.example_name == "wp") {
      r["params"] = params;
      r["u"] = series_to_json(wp_series(ep, K) * GaussRat(n * (n + 1)));
      return r;
    }
    const GaussRat alpha = o.alpha ? parse_param("alpha", *o.alpha) : GaussRat(n);
    const GaussRat beta = o.beta ? parse_param("beta", *o.beta) : GaussRat(n);
    params["alpha"] = alpha.str();
    params["beta"] = beta.str();
    const auto [p, q] = example2_pq(ep, alpha, beta, K);
    poles.push_back(pole_json("x=0", "0", p, q));
    // Z is odd and Z(w2 + t) = Z(-t), so the expansion at w2 is the negation.
    poles.push_back(pole_json("x=w2", "w2", p * GaussRat(-1), q * GaussRat(-1)));
  }
  r["params"] = params;
  r["poles"] = poles;
  return r;
}

// Output --------------------------------------------------------------------

void write_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) write_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && !j.front().is_string()) {
    for (size_t i = 0; i < j.size(); ++i) write_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

void emit(const Options& o, Json report, std::ostream& out) {
  if (o.format == "text")
    write_text(report, "", out);
  else
    out << report.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Stationary AKNS hierarchy, pole classification and finite-gap checks", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", o.timing, "Include wall-clock time in the report");

  auto add_input = [&](CLI::App* s) { s->add_option("--input,-i", o.input, "Input JSON file, - for stdin"); };
  auto add_K = [&](CLI::App* s) {
    s->add_option("--K", o.K, "Truncation or verification order")->check(CLI::PositiveNumber);
  };

  CLI::App* rec = app.add_subcommand("recursion", "Print f_k and g_k");
  rec->add_option("--k", o.k, "Index k")->check(CLI::PositiveNumber);

  CLI::App* sta = app.add_subcommand("stationary", "Residual of f_{m+1}, g_{m+1} on series input");
  CLI::App* sol = app.add_subcommand("solve-constants", "Solve for C1..Cm");
  CLI::App* pol = app.add_subcommand("pole-check", "Classify a simple pole");
  CLI::App* fro = app.add_subcommand("frobenius", "Local Frobenius solutions and meromorphy");
  CLI::App* gap = app.add_subcommand("finite-gap", "Laurent finite-gap criterion for a potential");
  CLI::App* pip = app.add_subcommand("pipeline", "Classification, stationarity and finite-gap check");
  CLI::App* exa = app.add_subcommand("example", "Emit fixture series");
  for (CLI::App* s : {sta, sol, pip}) {
    add_input(s);
    add_K(s);
    s->add_option("--m", o.m, "Stationary order m")->check(CLI::PositiveNumber);
  }
  for (CLI::App* s : {sta, pip}) s->add_option("--constants", o.constants, "Comma separated C1,C2,... (* = symbolic)");
  pip->add_option("--n", o.n, "Expected pole index n");
  for (CLI::App* s : {pol, fro, gap}) add_input(s);
  add_K(fro);
  exa->add_option("name", o.example_name, "csc, elliptic or wp")
      ->required()
      ->check(CLI::IsMember({"csc", "elliptic", "wp"}));
  add_K(exa);
  exa->add_option("--n", o.n, "Pole index n");
  exa->add_option("--g2", o.g2, "Invariant g2");
  exa->add_option("--g3", o.g3, "Invariant g3");
  exa->add_option("--e2", o.e2, "Half-period value e2");
  exa->add_option("--alpha", o.alpha, "Scale of p (elliptic)");
  exa->add_option("--beta", o.beta, "Scale of q (elliptic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json report;
  report["tool"] = kToolName;
  report["version"] = kVersion;
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  Json body;
  try {
    if (rec->parsed()) body = cmd_recursion(o);
    else if (exa->parsed()) body = cmd_example(o);
    else {
      const std::string raw = read_input(o, in);
      if (sta->parsed()) body = cmd_stationary(o, raw);
      else if (sol->parsed()) body = cmd_solve_constants(o, raw);
      else if (pol->parsed()) body = cmd_pole_check(raw);
      else if (fro->parsed()) body = cmd_frobenius(o, raw);
      else if (gap->parsed()) body = cmd_finite_gap(raw);
      else body = cmd_pipeline(o, raw);
    }
  } catch (CheckFailed& failed) {
    body = std::move(failed.report);
    code = kExitCheckFailed;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const DepthError& e) {
    err << "depth error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  for (auto& [k, v] : body.items()) report[k] = v;
  if (o.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timing_ms"] = ms;
  }
  emit(o, std::move(report), out);
  return code;
}

}  // namespace akns::cli
