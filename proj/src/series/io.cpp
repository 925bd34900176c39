#include "akns/series/io.hpp"

#include <utility>

namespace akns {

namespace {

std::pair<int, int> line_column(std::string_view raw, size_t offset) {
  int line = 1;
  int column = 1;
  for (size_t k = 0; k < offset && k < raw.size(); ++k) {
    if (raw[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& msg) { throw ParseError(msg, 1, 1); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) schema_error("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) schema_error(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<GaussRat> coeff_list(const Json& j, const char* name, std::string_view raw) {
  const Json& arr = field(j, name);
  if (!arr.is_array()) schema_error(std::string("field \"") + name + "\" must be an array");
  std::vector<GaussRat> out;
  out.reserve(arr.size());
  for (const auto& e : arr) out.push_back(gauss_rat_from_json(e, raw));
  return out;
}

}  // namespace

Json parse_json_text(std::string_view raw) {
  try {
    return Json::parse(raw.begin(), raw.end());
  } catch (const nlohmann::json::parse_error& e) {
    const size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(raw, offset);
    throw ParseError("malformed JSON", line, column);
  }
}

GaussRat gauss_rat_from_json(const Json& j, std::string_view raw) {
  if (j.is_number_integer()) return GaussRat(j.get<long>());
  if (!j.is_string()) schema_error("coefficient must be a string or an integer");
  const std::string text = j.get<std::string>();
  try {
    return parse_gauss_rat(text);
  } catch (const ParseError& e) {
    const size_t at = raw.find('"' + text + '"');
    if (at == std::string_view::npos) throw;
    const auto [line, column] = line_column(raw, at + 1);
    throw ParseError("malformed coefficient \"" + text + "\"", line, column + e.column() - 1);
  }
}

Json series_to_json(const LaurentData& s, const std::string& var, const std::string& center) {
  Json j;
  j["var"] = var;
  j["center"] = center;
  j["min_order"] = s.min_order();
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);
  // An empty list cannot carry the truncation order on its own.
  if (s.is_zero()) j["max_order"] = s.max_order();
  return j;
}

SeriesFile series_from_json(const Json& j, std::string_view raw) {
  SeriesFile f;
  const Json& min = field(j, "min_order");
  if (!min.is_number_integer()) schema_error("min_order must be an integer");
  const int min_order = min.get<int>();
  std::vector<GaussRat> coeffs = coeff_list(j, "coeffs", raw);
  int max_order = min_order + static_cast<int>(coeffs.size()) - 1;
  if (auto it = j.find("max_order"); it != j.end()) {
    if (!it->is_number_integer()) schema_error("max_order must be an integer");
    max_order = it->get<int>();
    if (max_order < min_order + static_cast<int>(coeffs.size()) - 1)
      schema_error("max_order is below the last listed coefficient");
  }
  f.series = LaurentData(min_order, std::move(coeffs), max_order);
  if (auto it = j.find("var"); it != j.end() && it->is_string()) f.var = it->get<std::string>();
  if (auto it = j.find("center"); it != j.end() && it->is_string()) f.center = it->get<std::string>();
  return f;
}

Json pole_data_to_json(const PoleData& d) {
  Json j;
  Json phi = Json::array();
  Json psi = Json::array();
  for (const auto& c : d.phi()) phi.push_back(c.str());
  for (const auto& c : d.psi()) psi.push_back(c.str());
  j["phi"] = std::move(phi);
  j["psi"] = std::move(psi);
  return j;
}

PoleData pole_data_from_json(const Json& j, std::string_view raw) {
  return PoleData(coeff_list(j, "phi", raw), coeff_list(j, "psi", raw));
}

}  // namespace akns
