#include "akns/hierarchy.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "akns/series/eval.hpp"

namespace akns {

namespace {

class Memo {
 public:
  const HierarchyPair& get(int k) {
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(k);
      if (it != table_.end()) return *it->second;
    }
    auto fresh = std::make_unique<HierarchyPair>(k == 1 ? seed() : step(get(k - 1)));
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.try_emplace(k, std::move(fresh));
    return *it->second;
  }

 private:
  static HierarchyPair seed() {
    HierarchyPair h;
    h.k = 1;
    h.f = DiffPoly::var(Field::q) * SymPoly(-GaussRat::i());
    h.g = DiffPoly::var(Field::p) * SymPoly(GaussRat::i());
    return h;
  }

  static HierarchyPair step(const HierarchyPair& prev) {
    const DiffPoly p = DiffPoly::var(Field::p);
    const DiffPoly q = DiffPoly::var(Field::q);
    const GaussRat i = GaussRat::i();
    const GaussRat half_i = i * GaussRat::rational(1, 2);

    DiffPoly integral;
    try {
      integral = integrate(p * prev.f + q * prev.g);
    } catch (const NotExact& e) {
      throw InvariantViolation("recursion step " + std::to_string(prev.k) + " not integrable: " + e.what());
    }
    const Symbol ck = constant_symbol(prev.k);
    integral += DiffPoly(SymPoly(ck));

    HierarchyPair next;
    next.k = prev.k + 1;
    next.f = derive(prev.f) * SymPoly(half_i) - q * integral * SymPoly(i);
    next.g = derive(prev.g) * SymPoly(-half_i) + p * integral * SymPoly(i);
    next.constants_used = prev.constants_used;
    next.constants_used.push_back(ck);
    return next;
  }

  std::shared_mutex mu_;
  std::map<int, std::unique_ptr<HierarchyPair>> table_;
};

Memo& memo() {
  static Memo m;
  return m;
}

DiffPoly substitute_constants(const DiffPoly& f, const std::map<Symbol, GaussRat>& values) {
  return f.map_coefficients([&](const SymPoly& c) { return c.substitute(values); });
}

std::optional<ResidualEntry> first_nonzero(const SymLaurent& f, const SymLaurent& g, int through) {
  const int start = std::min(f.min_order(), g.min_order());
  for (int e = start; e <= through; ++e) {
    if (SymPoly c = f[e]; !c.is_zero()) return ResidualEntry{"f", e, c};
    if (SymPoly c = g[e]; !c.is_zero()) return ResidualEntry{"g", e, c};
  }
  return std::nullopt;
}

}  // namespace

const HierarchyPair& compute_fg(int k) {
  if (k < 1) throw std::invalid_argument("hierarchy index must be >= 1");
  return memo().get(k);
}

ConstantVector ConstantVector::numeric(const std::vector<GaussRat>& values) {
  std::vector<std::optional<GaussRat>> v(values.begin(), values.end());
  return ConstantVector(std::move(v));
}

bool ConstantVector::all_numeric() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
}

std::map<Symbol, GaussRat> ConstantVector::substitution(int upto) const {
  std::map<Symbol, GaussRat> out;
  for (int k = 1; k <= upto; ++k) {
    const size_t idx = static_cast<size_t>(k - 1);
    if (idx >= values_.size())
      out.emplace(constant_symbol(k), GaussRat());
    else if (values_[idx])
      out.emplace(constant_symbol(k), *values_[idx]);
  }
  return out;
}

int required_depth(int k, int through) { return through + k - 1; }

StationaryVerdict stationary_residual(const LaurentData& p, const LaurentData& q, int m,
                                      const ConstantVector& c, int through) {
  if (m < 1) throw std::invalid_argument("stationary order must be >= 1");
  const HierarchyPair& h = compute_fg(m + 1);
  const auto values = c.substitution(m);
  StationaryVerdict v;
  v.m = m;
  v.checked_through = through;
  v.residual_f = eval_diffpoly(substitute_constants(h.f, values), p, q, through);
  v.residual_g = eval_diffpoly(substitute_constants(h.g, values), p, q, through);
  v.first_nonzero = first_nonzero(v.residual_f, v.residual_g, through);
  v.is_zero = !v.first_nonzero.has_value();
  return v;
}

ConstantSolution solve_constants(const LaurentData& p, const LaurentData& q, int m, int through,
                                 int branch_bound) {
  if (m < 1) throw std::invalid_argument("stationary order must be >= 1");
  const HierarchyPair& h = compute_fg(m + 1);
  const SymLaurent rf = eval_diffpoly(h.f, p, q, through);
  const SymLaurent rg = eval_diffpoly(h.g, p, q, through);

  std::vector<SymPoly> equations;
  for (int e = std::min(rf.min_order(), rg.min_order()); e <= through; ++e) {
    if (SymPoly c = rf[e]; !c.is_zero()) equations.push_back(std::move(c));
    if (SymPoly c = rg[e]; !c.is_zero()) equations.push_back(std::move(c));
  }
  std::vector<Symbol> unknowns;
  for (int k = 1; k <= m; ++k) unknowns.push_back(constant_symbol(k));

  SystemSolution sol = solve_system(equations, unknowns, branch_bound);
  ConstantSolution out;
  out.status = sol.status;
  out.detail = sol.detail;
  if (sol.status == SolveStatus::solved) {
    std::vector<GaussRat> vals;
    for (Symbol u : unknowns) vals.push_back(sol.values.at(u));
    out.constants = ConstantVector::numeric(vals);
  }
  return out;
}

bool propagation_check(const LaurentData& p, const LaurentData& q, int m, const ConstantVector& c,
                       int depth, int through) {
  for (int k = m + 1; k <= m + depth; ++k) {
    const HierarchyPair& h = compute_fg(k);
    const auto values = c.substitution(k - 1);
    const SymLaurent rf = eval_diffpoly(substitute_constants(h.f, values), p, q, through);
    const SymLaurent rg = eval_diffpoly(substitute_constants(h.g, values), p, q, through);
    if (first_nonzero(rf, rg, through)) return false;
  }
  return true;
}

}  // namespace akns
