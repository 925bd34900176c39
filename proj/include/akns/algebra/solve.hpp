#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "akns/algebra/sym_poly.hpp"

namespace akns {

enum class SolveStatus { solved, infeasible, inconclusive };

struct SystemSolution {
  SolveStatus status = SolveStatus::infeasible;
  // Values for every unknown; unknowns left free by the system are zero.
  std::map<Symbol, GaussRat> values;
  std::string detail;
};

/// Finds one exact GaussRat solution of a polynomial system.
///
/// Equations are consumed in the given order. An equation that is linear in
/// some unknown with a constant coefficient eliminates that unknown (the
/// first such unknown in symbol order). When no such equation remains, the
/// first univariate equation is split into its roots over Q(i) and each root
/// is tried in turn; every split counts against branch_bound. Any other
/// nonlinear residue makes the result inconclusive.
SystemSolution solve_system(const std::vector<SymPoly>& equations,
                            const std::vector<Symbol>& unknowns, int branch_bound = 16);

/// Roots in Q(i) of a univariate polynomial given by ascending coefficients,
/// without multiplicity and in a deterministic order. Returns nullopt when
/// the roots could not be decided (degree >= 3 with non-real coefficients).
std::optional<std::vector<GaussRat>> gaussian_rational_roots(const std::vector<GaussRat>& coeffs);

/// Square root in Q(i), if one exists. Of the two roots, returns the one with
/// positive real part (or positive imaginary part when the real part is 0).
std::optional<GaussRat> gaussian_rational_sqrt(const GaussRat& a);

}  // namespace akns
