#pragma once

#include <algorithm>
#include <climits>
#include <map>

#include "akns/algebra/diff_poly.hpp"
#include "akns/series/laurent.hpp"

namespace akns {

namespace detail {

inline SymLaurent scale_to_symbolic(const LaurentData& s, const SymPoly& c) {
  return s.map([&](const GaussRat& v) { return c * v; });
}

inline SymLaurent scale_to_symbolic(const SymLaurent& s, const SymPoly& c) {
  return s.map([&](const SymPoly& v) { return c * v; });
}

}  // namespace detail

/// Substitutes the series p, q (and their term-wise derivatives) into f and
/// returns the result exactly through x^through.
///
/// Throws DepthError naming the input depth (max order of p and q) that
/// would be required when the inputs are too short.
template <Coefficient R>
SymLaurent eval_diffpoly(const DiffPoly& f, const Laurent<R>& p, const Laurent<R>& q, int through) {
  if (f.is_zero()) return SymLaurent::zero(through);

  std::map<int, Laurent<R>> derivs;
  auto var_series = [&](int idx) -> const Laurent<R>& {
    auto it = derivs.find(idx);
    if (it != derivs.end()) return it->second;
    const int order = DiffMono::order_of(idx);
    Laurent<R> s = DiffMono::field_of(idx) == Field::p ? p : q;
    for (int k = 0; k < order; ++k) s = s.derivative();
    return derivs.emplace(idx, std::move(s)).first->second;
  };

  SymLaurent result;
  bool first = true;
  for (const auto& [m, coeff] : f.terms()) {
    std::vector<const Laurent<R>*> factors;
    const auto& e = m.exps();
    for (size_t k = 0; k < e.size(); ++k)
      for (int r = 0; r < e[k]; ++r) factors.push_back(&var_series(static_cast<int>(k)));

    Laurent<R> prod;
    if (factors.empty()) {
      prod = Laurent<R>::monomial(R(GaussRat(1)), 0, through);
    } else {
      long rest = 0;
      for (size_t k = 1; k < factors.size(); ++k) rest += factors[k]->min_order();
      prod = factors[0]->truncated(static_cast<int>(std::min<long>(INT_MAX, through - rest)));
      for (size_t k = 1; k < factors.size(); ++k) {
        rest -= factors[k]->min_order();
        const long limit = std::min<long>(INT_MAX, through - rest);
        prod = Laurent<R>::multiply(prod, *factors[k], static_cast<int>(limit));
      }
    }
    SymLaurent term = detail::scale_to_symbolic(prod.truncated(through), coeff);
    if (first) {
      result = std::move(term);
      first = false;
    } else {
      result += term;
    }
  }
  if (result.max_order() < through) {
    const int depth = std::min(p.max_order(), q.max_order());
    throw DepthError("series too short to evaluate through x^" + std::to_string(through),
                     depth + (through - result.max_order()));
  }
  return result.truncated(through);
}

}  // namespace akns
