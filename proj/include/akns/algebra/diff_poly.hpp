#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "akns/algebra/sym_poly.hpp"

namespace akns {

enum class Field { p = 0, q = 1 };

/// Monomial in p, q and their x-derivatives p^(j), q^(j).
///
/// Variables are indexed 2j (p^(j)) and 2j+1 (q^(j)); exponents are stored
/// densely with trailing zeros trimmed.
class DiffMono {
 public:
  DiffMono() = default;
  static DiffMono var(Field f, int order, int exp = 1);

  static int index(Field f, int order) { return 2 * order + static_cast<int>(f); }
  static Field field_of(int index) { return static_cast<Field>(index % 2); }
  static int order_of(int index) { return index / 2; }

  const std::vector<int>& exps() const { return exps_; }
  int exp(int index) const;
  bool is_one() const { return exps_.empty(); }
  int degree() const;
  // Sum of (j+1)*exponent over factors p^(j), q^(j).
  int weight() const;
  int max_order() const;  // -1 for the unit monomial
  int degree_in(Field f) const;

  DiffMono with_exp_delta(int index, int delta) const;

  friend DiffMono operator*(const DiffMono& a, const DiffMono& b);
  friend bool operator==(const DiffMono&, const DiffMono&) = default;
  // Graded lexicographic with p < q and lower derivative order first.
  friend std::strong_ordering operator<=>(const DiffMono& a, const DiffMono& b);

  std::string str() const;

 private:
  void trim();
  std::vector<int> exps_;
};

/// Differential polynomial in p, q with SymPoly coefficients.
class DiffPoly {
 public:
  using Terms = std::map<DiffMono, SymPoly>;

  DiffPoly() = default;
  DiffPoly(SymPoly c);  // NOLINT: constants embed implicitly
  DiffPoly(DiffMono m, SymPoly c = SymPoly(1));
  static DiffPoly var(Field f, int order = 0) { return DiffPoly(DiffMono::var(f, order)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  SymPoly coefficient(const DiffMono& m) const;
  SymPoly constant_term() const { return coefficient(DiffMono()); }
  int max_order() const;
  int max_weight() const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const SymPoly& c);
  void add_term(const DiffMono& m, const SymPoly& c);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const SymPoly& c) { return a *= c; }
  friend DiffPoly operator*(const SymPoly& c, DiffPoly a) { return a *= c; }
  DiffPoly operator-() const;

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  /// Applies f to every coefficient, dropping terms that become zero.
  template <class F>
  DiffPoly map_coefficients(F&& f) const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  std::string str() const;

 private:
  Terms terms_;
};

/// Total x-derivative (Leibniz rule); constant symbols have derivative zero.
DiffPoly derive(const DiffPoly& f);

/// Antiderivative H with derive(H) == h and zero constant term.
///
/// Exactness is decided per (degree, weight) component by an exact linear
/// solve over all monomials of one lower weight. Throws NotExact with a
/// witness monomial when h is not a total derivative.
DiffPoly integrate(const DiffPoly& h);

/// All monomials of the given degree and weight, ascending.
std::vector<DiffMono> monomials_of(int degree, int weight);

}  // namespace akns
