#include "akns/algebra/solve.hpp"

#include <algorithm>
#include <cstdlib>

namespace akns {

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

void trim(std::vector<GaussRat>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Synthetic division by (x - root); the remainder is assumed zero.
std::vector<GaussRat> deflate(const std::vector<GaussRat>& c, const GaussRat& root) {
  std::vector<GaussRat> out(c.size() - 1);
  GaussRat carry;
  for (size_t k = c.size() - 1; k > 0; --k) {
    carry = c[k] + carry * root;
    out[k - 1] = carry;
  }
  return out;
}

GaussRat evaluate(const std::vector<GaussRat>& c, const GaussRat& x) {
  GaussRat acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  std::vector<mpz_class> small, large;
  n = abs(n);
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Rational roots of a polynomial with rational coefficients (x != 0 roots).
std::optional<std::vector<mpq_class>> rational_roots(const std::vector<GaussRat>& c) {
  mpz_class lcm = 1;
  for (const auto& v : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.re().get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& v : c) {
    mpq_class s = v.re() * lcm;
    z.push_back(s.get_num());
  }
  const mpz_class limit("1000000000000");
  if (abs(z.front()) > limit || abs(z.back()) > limit) return std::nullopt;
  std::vector<mpq_class> roots;
  for (const auto& a : positive_divisors(z.front())) {
    for (const auto& b : positive_divisors(z.back())) {
      for (int sign : {1, -1}) {
        mpq_class r(sign * a, b);
        r.canonicalize();
        if (evaluate(c, GaussRat(r)).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
    }
  }
  return roots;
}

}  // namespace

std::optional<GaussRat> gaussian_rational_sqrt(const GaussRat& a) {
  if (a.is_zero()) return GaussRat();
  if (a.is_real()) {
    if (sgn(a.re()) > 0) {
      if (auto r = rational_sqrt(a.re())) return GaussRat(*r);
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-a.re())) return GaussRat(0, *r);
    return std::nullopt;
  }
  auto modulus = rational_sqrt(a.norm());
  if (!modulus) return std::nullopt;
  auto u = rational_sqrt((a.re() + *modulus) / 2);
  auto v = rational_sqrt((*modulus - a.re()) / 2);
  if (!u || !v) return std::nullopt;
  mpq_class im = sgn(a.im()) < 0 ? mpq_class(-*v) : *v;
  return GaussRat(*u, im);
}

std::optional<std::vector<GaussRat>> gaussian_rational_roots(const std::vector<GaussRat>& coeffs) {
  std::vector<GaussRat> c = coeffs;
  trim(c);
  std::vector<GaussRat> roots;
  if (c.size() <= 1) return roots;
  if (c.front().is_zero()) {
    roots.emplace_back();
    size_t k = 0;
    while (c[k].is_zero()) ++k;
    c.erase(c.begin(), c.begin() + static_cast<long>(k));
  }
  // Normalize to a monic polynomial.
  const GaussRat lead = c.back();
  for (auto& v : c) v /= lead;

  const bool real = std::all_of(c.begin(), c.end(), [](const GaussRat& v) { return v.is_real(); });
  if (c.size() > 3 && real) {
    auto rr = rational_roots(c);
    if (!rr) return std::nullopt;
    for (const auto& r : *rr) {
      roots.emplace_back(r);
      while (c.size() > 1 && evaluate(c, GaussRat(r)).is_zero()) c = deflate(c, GaussRat(r));
    }
  }
  if (c.size() == 2) {
    roots.push_back(-c[0]);
  } else if (c.size() == 3) {
    // x^2 + b x + c0
    const GaussRat disc = c[1] * c[1] - GaussRat(4) * c[0];
    if (auto s = gaussian_rational_sqrt(disc)) {
      const GaussRat half = GaussRat::rational(1, 2);
      roots.push_back((-c[1] + *s) * half);
      roots.push_back((-c[1] - *s) * half);
    }
  } else if (c.size() > 3) {
    return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

struct SearchState {
  int branches = 0;
  int bound = 16;
};

SystemSolution search(std::vector<SymPoly> eqs, std::map<Symbol, SymPoly> bound,
                      const std::vector<Symbol>& unknowns, SearchState& state) {
  for (;;) {
    std::erase_if(eqs, [](const SymPoly& e) { return e.is_zero(); });
    for (const auto& e : eqs) {
      if (e.is_constant()) {
        return {SolveStatus::infeasible, {}, "contradiction: " + e.str() + " = 0"};
      }
    }
    if (eqs.empty()) break;

    // Linear step with a constant pivot.
    std::optional<std::pair<Symbol, SymPoly>> step;
    for (const auto& e : eqs) {
      for (Symbol v : e.symbols()) {
        if (e.degree_in(v) != 1) continue;
        auto parts = e.coefficients_in(v);
        if (!parts[1].is_constant()) continue;
        step.emplace(v, -parts[0] * parts[1].as_constant().inverse());
        break;
      }
      if (step) break;
    }
    if (step) {
      const auto& [v, value] = *step;
      for (auto& e : eqs) e = e.substitute(v, value);
      for (auto& [s, expr] : bound) expr = expr.substitute(v, value);
      bound.emplace(v, value);
      continue;
    }

    // Branch on the roots of the first univariate equation.
    for (const auto& e : eqs) {
      auto syms = e.symbols();
      if (syms.size() != 1) continue;
      const Symbol v = syms.front();
      std::vector<GaussRat> coeffs;
      for (const auto& c : e.coefficients_in(v)) coeffs.push_back(c.constant_term());
      auto roots = gaussian_rational_roots(coeffs);
      if (!roots) return {SolveStatus::inconclusive, {}, "undecided roots of " + e.str()};
      bool undecided = false;
      for (const auto& r : *roots) {
        if (++state.branches > state.bound)
          return {SolveStatus::inconclusive, {}, "branch bound exceeded"};
        std::vector<SymPoly> next;
        for (const auto& x : eqs) next.push_back(x.substitute(v, SymPoly(r)));
        auto next_bound = bound;
        for (auto& [s, expr] : next_bound) expr = expr.substitute(v, SymPoly(r));
        next_bound.emplace(v, SymPoly(r));
        auto sol = search(std::move(next), std::move(next_bound), unknowns, state);
        if (sol.status == SolveStatus::solved) return sol;
        if (sol.status == SolveStatus::inconclusive) {
          if (sol.detail == "branch bound exceeded") return sol;
          undecided = true;
        }
      }
      if (undecided) return {SolveStatus::inconclusive, {}, "undecided branch of " + e.str()};
      return {SolveStatus::infeasible, {}, "no root of " + e.str() + " extends to a solution"};
    }
    return {SolveStatus::inconclusive, {}, "nonlinear system: " + eqs.front().str() + " = 0"};
  }

  SystemSolution out;
  out.status = SolveStatus::solved;
  std::map<Symbol, GaussRat> zeros;
  for (Symbol u : unknowns)
    if (!bound.count(u)) zeros.emplace(u, GaussRat());
  for (Symbol u : unknowns) {
    auto it = bound.find(u);
    out.values.emplace(u, it == bound.end() ? GaussRat() : it->second.substitute(zeros).as_constant());
  }
  return out;
}

}  // namespace

SystemSolution solve_system(const std::vector<SymPoly>& equations,
                            const std::vector<Symbol>& unknowns, int branch_bound) {
  SearchState state;
  state.bound = branch_bound;
  return search(equations, {}, unknowns, state);
}

}  // namespace akns
