#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace akns {

/// Exact complex rational re + im*i.
///
/// Both parts are kept in lowest terms with positive denominators, so
/// equality is structural.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT: implicit from integers is intended
  GaussRat(mpq_class re) : re_(std::move(re)) {}  // NOLINT
  GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(0, 1); }
  static GaussRat rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  // |a|^2 as a real rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Arbitrary total order (re first, then im); used only for containers.
  friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);

  /// Canonical text "a/b+c/d*i": "0", "3/2", "-i", "1/2*i", "3/2-1/2*i".
  std::string str() const;
  /// True when str() contains a binary +/- and needs parentheses as a factor.
  bool needs_parens() const { return sgn(re_) != 0 && sgn(im_) != 0; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& a);

GaussRat pow(GaussRat base, int exp);

/// Parses the canonical text form (and any sum of rational and rational*i
/// terms). Throws ParseError with column on malformed input.
GaussRat parse_gauss_rat(std::string_view text);

/// Positive integer n with n*n == a, or 0 when a is not such a square.
long exact_isqrt(const GaussRat& a);

}  // namespace akns
