#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "akns/algebra/diff_poly.hpp"
#include "akns/algebra/solve.hpp"
#include "akns/series/laurent.hpp"

namespace akns {

/// f_k, g_k of the stationary AKNS recursion
///
///   f_{k+1} =  (i/2) f_k' - i q (int(p f_k + q g_k) dx + C_k)
///   g_{k+1} = -(i/2) g_k' + i p (int(p f_k + q g_k) dx + C_k)
///
/// seeded with f_1 = -i q, g_1 = i p. The integration constants stay
/// symbolic as C1, ..., C_{k-1}.
struct HierarchyPair {
  int k = 0;
  DiffPoly f;
  DiffPoly g;
  std::vector<Symbol> constants_used;
};

/// Memoized; safe to call from several threads. Throws std::invalid_argument
/// for k < 1 and InvariantViolation if a recursion step is not integrable.
const HierarchyPair& compute_fg(int k);

/// Values for the integration constants C1, C2, ...; nullopt keeps C_k
/// symbolic. Constants past the end of the list are zero.
class ConstantVector {
 public:
  ConstantVector() = default;
  explicit ConstantVector(std::vector<std::optional<GaussRat>> values) : values_(std::move(values)) {}
  static ConstantVector numeric(const std::vector<GaussRat>& values);

  size_t size() const { return values_.size(); }
  const std::optional<GaussRat>& operator[](size_t k) const { return values_[k]; }
  const std::vector<std::optional<GaussRat>>& values() const { return values_; }
  bool all_numeric() const;

  /// Substitution map for C1..C_{upto}, with zeros past the end.
  std::map<Symbol, GaussRat> substitution(int upto) const;

  friend bool operator==(const ConstantVector&, const ConstantVector&) = default;

 private:
  std::vector<std::optional<GaussRat>> values_;
};

struct ResidualEntry {
  std::string function;  // "f" or "g"
  int order = 0;
  SymPoly coefficient;
};

struct StationaryVerdict {
  int m = 0;
  int checked_through = 0;
  SymLaurent residual_f;
  SymLaurent residual_g;
  bool is_zero = false;
  std::optional<ResidualEntry> first_nonzero;
};

/// Input depth (max order of p and q, simple poles) needed to know f_k and g_k
/// through x^through.
int required_depth(int k, int through);

/// Evaluates f_{m+1}, g_{m+1} on the series with the constants substituted
/// and reports whether every coefficient through x^through vanishes.
StationaryVerdict stationary_residual(const LaurentData& p, const LaurentData& q, int m,
                                      const ConstantVector& c, int through);

struct ConstantSolution {
  SolveStatus status = SolveStatus::infeasible;
  ConstantVector constants;
  std::string detail;
};

/// Finds exact C1..Cm with f_{m+1} = g_{m+1} = 0 through x^through, taking
/// the coefficient equations lowest order first (f before g at each order).
ConstantSolution solve_constants(const LaurentData& p, const LaurentData& q, int m, int through,
                                 int branch_bound = 16);

/// Checks f_k = g_k = 0 through x^through for m+1 <= k <= m+depth, with the
/// constants not supplied in c set to zero.
bool propagation_check(const LaurentData& p, const LaurentData& q, int m, const ConstantVector& c,
                       int depth, int through);

}  // namespace akns
