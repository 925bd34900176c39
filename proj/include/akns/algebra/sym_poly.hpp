#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "akns/algebra/gauss_rat.hpp"

namespace akns {

/// Interned name of a constant symbol (C1, z, phi, ...).
///
/// Symbols order naturally: alphabetic prefix first, then numeric suffix,
/// so C2 < C10.
class Symbol {
 public:
  explicit Symbol(std::string_view name);
  const std::string& name() const { return *name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b);

 private:
  const std::string* name_;
};

/// The k-th integration constant of the hierarchy recursion, "C<k>".
Symbol constant_symbol(int k);

/// Monomial in constant symbols. Exponents may be negative (Laurent
/// monomials); zero exponents are never stored.
class SymMono {
 public:
  SymMono() = default;
  SymMono(Symbol s, int e = 1);

  const std::vector<std::pair<Symbol, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int degree_in(Symbol s) const;
  SymMono without(Symbol s) const;

  friend SymMono operator*(const SymMono& a, const SymMono& b);
  friend bool operator==(const SymMono&, const SymMono&) = default;
  // Graded: total degree first, then lexicographic on factors.
  friend std::strong_ordering operator<=>(const SymMono& a, const SymMono& b);

  std::string str() const;

 private:
  std::vector<std::pair<Symbol, int>> factors_;
};

/// Polynomial in constant symbols with GaussRat coefficients.
class SymPoly {
 public:
  using Terms = std::map<SymMono, GaussRat>;

  SymPoly() = default;
  SymPoly(GaussRat c);  // NOLINT: constants embed implicitly
  SymPoly(long c) : SymPoly(GaussRat(c)) {}  // NOLINT
  SymPoly(Symbol s) : SymPoly(SymMono(s)) {}  // NOLINT
  SymPoly(SymMono m, GaussRat c = GaussRat(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the unit monomial.
  GaussRat constant_term() const;
  // Throws InvariantViolation if not constant.
  GaussRat as_constant() const;
  int degree() const;
  int degree_in(Symbol s) const;
  std::vector<Symbol> symbols() const;

  /// Coefficients of s^0, s^1, ..., s^deg, as polynomials in the remaining
  /// symbols. Requires nonnegative exponents of s.
  std::vector<SymPoly> coefficients_in(Symbol s) const;

  SymPoly substitute(Symbol s, const SymPoly& value) const;
  SymPoly substitute(const std::map<Symbol, GaussRat>& values) const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);
  SymPoly& operator*=(const GaussRat& c);
  // Adds c*o in place.
  void add_scaled(const SymPoly& o, const GaussRat& c);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(SymPoly a, const GaussRat& c) { return a *= c; }
  friend SymPoly operator*(const GaussRat& c, SymPoly a) { return a *= c; }
  SymPoly operator-() const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  std::string str() const;
  // True when str() must be parenthesized to serve as a factor.
  bool needs_parens() const;

 private:
  void add_term(const SymMono& m, const GaussRat& c);
  Terms terms_;
};

SymPoly pow(const SymPoly& base, int exp);

}  // namespace akns
