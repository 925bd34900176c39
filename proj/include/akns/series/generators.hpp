#pragma once

#include <utility>

#include "akns/series/laurent.hpp"

namespace akns {

/// Weierstrass invariants with a rational root e2 of 4e^3 - g2 e - g3, i.e.
/// the value of wp at the half period used as the second pole.
class EllipticParams {
 public:
  // Throws Error unless 4*e2^3 - g2*e2 - g3 == 0 exactly.
  EllipticParams(GaussRat g2, GaussRat g3, GaussRat e2);

  const GaussRat& g2() const { return g2_; }
  const GaussRat& g3() const { return g3_; }
  const GaussRat& e2() const { return e2_; }

 private:
  GaussRat g2_, g3_, e2_;
};

/// sin(x) through x^max_order.
LaurentData sin_series(int max_order);

/// scale / sin(x) at 0 through x^max_order, by exact inversion of sin(x)/x.
LaurentData csc_series(const GaussRat& scale, int max_order);

/// wp(x) = x^-2 + sum_{k>=2} c_k x^{2k-2} through x^max_order.
LaurentData wp_series(const EllipticParams& params, int max_order);

/// Taylor series of wp around a half period, from wp = e2, wp' = 0 and
/// wp'' = 6 wp^2 - g2/2.
LaurentData wp_taylor_at_halfperiod(const EllipticParams& params, int max_order);

/// Laurent series at 0 of zeta(x) - zeta(x - w2) - zeta(w2) through x^max_order.
LaurentData zeta_difference_series(const EllipticParams& params, int max_order);

/// (alpha * Z, beta * Z) with Z = zeta_difference_series. Throws Error unless
/// alpha*beta is the square of a positive integer.
std::pair<LaurentData, LaurentData> example2_pq(const EllipticParams& params, const GaussRat& alpha,
                                                const GaussRat& beta, int max_order);

}  // namespace akns
