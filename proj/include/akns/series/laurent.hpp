#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "akns/algebra/gauss_rat.hpp"
#include "akns/algebra/sym_poly.hpp"
#include "akns/errors.hpp"

namespace akns {

template <class R>
concept Coefficient = requires(R a, const R& b, const GaussRat& c) {
  { a.is_zero() } -> std::convertible_to<bool>;
  a += b;
  a -= b;
  { b * b } -> std::convertible_to<R>;
  { b * c } -> std::convertible_to<R>;
  { b.str() } -> std::convertible_to<std::string>;
};

/// Truncated Laurent series  sum_{e=min..max} c_e x^e + O(x^{max+1}).
///
/// min_order is a lower bound on the valuation: leading zeros are stripped
/// after every operation. A series known to be zero through max_order has
/// no stored coefficients and min_order == max_order + 1.
template <Coefficient R>
class Laurent {
 public:
  Laurent() = default;
  Laurent(int min_order, std::vector<R> coeffs)
      : min_(min_order), max_(min_order + static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {
    normalize();
  }
  Laurent(int min_order, std::vector<R> coeffs, int max_order)
      : min_(min_order), max_(max_order), c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(std::max(0, max_ - min_ + 1)));
    normalize();
  }
  // Zero known through max_order.
  static Laurent zero(int max_order) { return Laurent(max_order + 1, {}, max_order); }
  // Exactly c * x^e, known through max_order.
  static Laurent monomial(R c, int e, int max_order) {
    if (max_order < e) return zero(max_order);
    std::vector<R> v(static_cast<size_t>(max_order - e + 1));
    v[0] = std::move(c);
    return Laurent(e, std::move(v), max_order);
  }

  int min_order() const { return min_; }
  int max_order() const { return max_; }
  const std::vector<R>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of x^e; zero below min_order. Throws DepthError past max_order.
  R operator[](int e) const {
    if (e > max_) throw DepthError("coefficient of x^" + std::to_string(e) + " is beyond the truncation", e);
    if (e < min_) return R();
    return c_[static_cast<size_t>(e - min_)];
  }

  Laurent truncated(int max_order) const {
    if (max_order >= max_) return *this;
    std::vector<R> v;
    for (int e = min_; e <= max_order; ++e) v.push_back(c_[static_cast<size_t>(e - min_)]);
    return Laurent(std::min(min_, max_order + 1), std::move(v), max_order);
  }

  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Laurent<S>(min_, std::move(v), max_);
  }

  Laurent& operator+=(const Laurent& o) { return *this = combine(*this, o, 1); }
  Laurent& operator-=(const Laurent& o) { return *this = combine(*this, o, -1); }
  friend Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, 1); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, -1); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) { return multiply(a, b, INT_MAX); }
  friend Laurent operator*(const Laurent& a, const GaussRat& s) {
    if (s.is_zero()) return zero(a.max_);
    return a.map([&](const R& c) -> R { return c * s; });
  }
  friend Laurent operator*(const GaussRat& s, const Laurent& a) { return a * s; }

  /// Product truncated at `limit` (never beyond the naturally known order).
  static Laurent multiply(const Laurent& a, const Laurent& b, int limit) {
    const int min = a.min_ + b.min_;
    const int max = std::min({a.min_ + b.max_, b.min_ + a.max_, limit});
    if (a.is_zero() || b.is_zero() || max < min) return zero(max);
    std::vector<R> v(static_cast<size_t>(max - min + 1));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      const int ei = a.min_ + static_cast<int>(i);
      for (size_t j = 0; j < b.c_.size(); ++j) {
        const int e = ei + b.min_ + static_cast<int>(j);
        if (e > max) break;
        if (b.c_[j].is_zero()) continue;
        v[static_cast<size_t>(e - min)] += a.c_[i] * b.c_[j];
      }
    }
    return Laurent(min, std::move(v), max);
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Term-wise derivative.
  Laurent derivative() const {
    std::vector<R> v;
    v.reserve(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) {
      const int e = min_ + static_cast<int>(k);
      v.push_back(c_[k] * GaussRat(e));
    }
    return Laurent(min_ - 1, std::move(v), max_ - 1);
  }

  /// Term-wise antiderivative with zero constant term. Throws LogObstruction
  /// on a nonzero x^-1 coefficient and DepthError if that coefficient is
  /// unknown.
  Laurent integral() const {
    if (max_ < -1) throw DepthError("residue unknown; cannot integrate", -1);
    if (!(*this)[-1].is_zero()) throw LogObstruction();
    std::vector<R> v;
    v.reserve(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) {
      const int e = min_ + static_cast<int>(k);
      v.push_back(e == -1 ? R() : c_[k] * GaussRat::rational(1, e + 1));
    }
    return Laurent(min_ + 1, std::move(v), max_ + 1);
  }

  // First exponent with a nonzero coefficient, or max_order + 1.
  int valuation() const { return min_; }

 private:
  static Laurent combine(const Laurent& a, const Laurent& b, int sign) {
    const int max = std::min(a.max_, b.max_);
    const int min = std::min(a.min_, b.min_);
    if (max < min) return zero(max);
    std::vector<R> v(static_cast<size_t>(max - min + 1));
    for (int e = min; e <= max; ++e) {
      R& slot = v[static_cast<size_t>(e - min)];
      if (e >= a.min_ && e <= a.max_) slot += a.c_[static_cast<size_t>(e - a.min_)];
      if (e >= b.min_ && e <= b.max_) {
        if (sign > 0)
          slot += b.c_[static_cast<size_t>(e - b.min_)];
        else
          slot -= b.c_[static_cast<size_t>(e - b.min_)];
      }
    }
    return Laurent(min, std::move(v), max);
  }

  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      min_ += static_cast<int>(lead);
    }
    if (c_.empty()) min_ = max_ + 1;
  }

  int min_ = 1;
  int max_ = 0;
  std::vector<R> c_;
};

using LaurentData = Laurent<GaussRat>;
using SymLaurent = Laurent<SymPoly>;

inline SymLaurent to_symbolic(const LaurentData& a) {
  return a.map([](const GaussRat& c) { return SymPoly(c); });
}

}  // namespace akns
