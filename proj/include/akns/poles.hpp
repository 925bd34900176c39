#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akns/algebra/gauss_rat.hpp"
#include "akns/algebra/sym_poly.hpp"
#include "akns/hierarchy.hpp"
#include "akns/series/laurent.hpp"

namespace akns {

/// Laurent coefficients of p and q at a simple pole, index -1 first:
/// phi = (phi_{-1}, phi_0, ..., phi_K), psi likewise.
class PoleData {
 public:
  // Throws Error("simple pole required ...") unless both lists are nonempty
  // and start with a nonzero residue.
  PoleData(std::vector<GaussRat> phi, std::vector<GaussRat> psi);
  static PoleData from_series(const LaurentData& p, const LaurentData& q);

  const std::vector<GaussRat>& phi() const { return phi_; }
  const std::vector<GaussRat>& psi() const { return psi_; }
  const GaussRat& phi_at(int k) const { return phi_.at(static_cast<size_t>(k + 1)); }
  const GaussRat& psi_at(int k) const { return psi_.at(static_cast<size_t>(k + 1)); }
  // Highest index k for which both phi_k and psi_k are known.
  int depth() const { return static_cast<int>(std::min(phi_.size(), psi_.size())) - 2; }

  LaurentData p_series() const;
  LaurentData q_series() const;

 private:
  std::vector<GaussRat> phi_;
  std::vector<GaussRat> psi_;
};

struct PoleFailure {
  std::string condition;
  int index = 0;
  std::string detail;
};

struct PoleReport {
  std::optional<long> n;
  bool passes = false;
  std::optional<PoleFailure> first_failure;
  int checked_through = -1;
};

// Failure condition codes.
inline constexpr const char* kLeadingNotInteger = "leading_product_not_integer";
inline constexpr const char* kLeadingNotSquare = "leading_product_not_square";
inline constexpr const char* kCoefficientRelation = "coefficient_relation";

/// Checks phi_{-1} psi_{-1} = n^2 and
///   phi_k = (-1)^{k+1} psi_k phi_{-1}^2 / n^2   for 0 <= k <= 2n-1.
/// Throws DepthError when the data stop before index 2n-1.
PoleReport classify_pole(const PoleData& d);

struct ProductReport {
  long n = 0;
  LaurentData pq;
  bool vanishing = false;
  // First odd index in -1..2n-1 with a nonzero coefficient (or -2 when the
  // leading coefficient differs from n^2).
  std::optional<int> first_nonvanishing;
};

/// The pq series at the pole and a check of h_{-2} = n^2 and
/// h_{-1} = h_1 = ... = h_{2n-1} = 0. h_{2n-1} involves phi_{2n} and psi_{2n},
/// so the data must reach index 2n. Throws Error if classification fails.
ProductReport product_laurent(const PoleData& d);

struct ProbeResult {
  int k = 0;
  // Coefficients of x^{-k} and x^{-k+1} in f_k (A) and g_k (B).
  SymPoly a_lead, b_lead;
  SymPoly a_next, b_next;
  // Lowest exponent with a nonzero coefficient in f_k or g_k (>= -k).
  int order = 0;
};

/// Leading Laurent coefficients of f_k, g_k evaluated on the pole data.
/// Constants not given in c are zero.
ProbeResult fg_pole_probe(int k, const PoleData& d, const ConstantVector& c = {});

/// The same probe with symbolic pole data p = phi/x + phi0, q = psi/x + psi0
/// (symbols phi, psi, phi0, psi0) and all constants zero.
ProbeResult fg_pole_probe_symbolic(int k);

}  // namespace akns
