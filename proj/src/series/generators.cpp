#include "akns/series/generators.hpp"

#include <string>

namespace akns {

EllipticParams::EllipticParams(GaussRat g2, GaussRat g3, GaussRat e2)
    : g2_(std::move(g2)), g3_(std::move(g3)), e2_(std::move(e2)) {
  const GaussRat cubic = GaussRat(4) * e2_ * e2_ * e2_ - g2_ * e2_ - g3_;
  if (!cubic.is_zero())
    throw Error("e2 = " + e2_.str() + " is not a root of 4e^3 - g2 e - g3 (residual " + cubic.str() + ")");
}

LaurentData sin_series(int max_order) {
  std::vector<GaussRat> c;
  mpz_class fact = 1;
  for (int e = 0; e <= max_order; ++e) {
    if (e > 0) fact *= e;
    if (e % 2 == 0) {
      c.emplace_back();
    } else {
      mpq_class v(1, fact);
      v.canonicalize();
      c.emplace_back((e % 4 == 1) ? v : mpq_class(-v));
    }
  }
  return LaurentData(0, std::move(c), max_order);
}

LaurentData csc_series(const GaussRat& scale, int max_order) {
  // sin(x)/x = sum s_j x^j; invert term by term: sum_{j} s_j r_{k-j} = [k == 0].
  const int n = max_order + 2;
  std::vector<mpq_class> s(static_cast<size_t>(n));
  mpz_class fact = 1;
  for (int j = 0; j < n; ++j) {
    fact *= (j + 1);
    if (j % 2 == 0) {
      mpq_class v(1, fact);
      v.canonicalize();
      s[static_cast<size_t>(j)] = (j % 4 == 0) ? v : mpq_class(-v);
    }
  }
  std::vector<mpq_class> r(static_cast<size_t>(n));
  r[0] = 1;
  for (int k = 1; k < n; ++k) {
    mpq_class acc = 0;
    for (int j = 1; j <= k; ++j) acc += s[static_cast<size_t>(j)] * r[static_cast<size_t>(k - j)];
    r[static_cast<size_t>(k)] = -acc;
  }
  std::vector<GaussRat> c;
  for (const auto& v : r) c.push_back(scale * GaussRat(v));
  return LaurentData(-1, std::move(c), max_order);
}

namespace {

// Coefficients c_k of x^{2k-2}, k >= 2, up to k_max.
std::vector<GaussRat> wp_coefficients(const EllipticParams& params, int k_max) {
  std::vector<GaussRat> c(static_cast<size_t>(std::max(k_max, 3)) + 1);
  c[2] = params.g2() / GaussRat(20);
  c[3] = params.g3() / GaussRat(28);
  for (int k = 4; k <= k_max; ++k) {
    GaussRat acc;
    for (int m = 2; m <= k - 2; ++m) acc += c[static_cast<size_t>(m)] * c[static_cast<size_t>(k - m)];
    c[static_cast<size_t>(k)] = acc * GaussRat::rational(3, (2 * k + 1) * (k - 3));
  }
  return c;
}

}  // namespace

LaurentData wp_series(const EllipticParams& params, int max_order) {
  if (max_order < -2) return LaurentData::zero(max_order);
  std::vector<GaussRat> v(static_cast<size_t>(max_order + 3));
  v[0] = GaussRat(1);
  const int k_max = (max_order + 2) / 2;
  auto c = wp_coefficients(params, k_max);
  for (int k = 2; k <= k_max; ++k) {
    const int e = 2 * k - 2;
    if (e <= max_order) v[static_cast<size_t>(e + 2)] = c[static_cast<size_t>(k)];
  }
  return LaurentData(-2, std::move(v), max_order);
}

LaurentData wp_taylor_at_halfperiod(const EllipticParams& params, int max_order) {
  if (max_order < 0) return LaurentData::zero(max_order);
  std::vector<GaussRat> b(static_cast<size_t>(max_order) + 1);
  b[0] = params.e2();
  const GaussRat half_g2 = params.g2() * GaussRat::rational(1, 2);
  for (int k = 0; k + 2 <= max_order; ++k) {
    GaussRat sq;
    for (int j = 0; j <= k; ++j) sq += b[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
    GaussRat rhs = GaussRat(6) * sq;
    if (k == 0) rhs -= half_g2;
    b[static_cast<size_t>(k + 2)] = rhs * GaussRat::rational(1, (k + 2) * (k + 1));
  }
  return LaurentData(0, std::move(b), max_order);
}

LaurentData zeta_difference_series(const EllipticParams& params, int max_order) {
  // Z' = -(wp(x) - x^-2) + wp(x - w2) - x^-2 and wp(x - w2) = wp(w2 - x) is the
  // (even) half-period Taylor series. The constant of integration vanishes
  // because zeta is odd: -zeta(-w2) - zeta(w2) = 0.
  const int inner = max_order - 1;
  LaurentData regular = wp_series(params, inner) - LaurentData::monomial(GaussRat(1), -2, inner);
  LaurentData shifted = wp_taylor_at_halfperiod(params, inner);
  LaurentData z = (shifted - regular).integral();
  return z + LaurentData::monomial(GaussRat(1), -1, max_order);
}

std::pair<LaurentData, LaurentData> example2_pq(const EllipticParams& params, const GaussRat& alpha,
                                                const GaussRat& beta, int max_order) {
  if (exact_isqrt(alpha * beta) == 0)
    throw Error("alpha*beta = " + (alpha * beta).str() + " is not the square of a positive integer");
  LaurentData z = zeta_difference_series(params, max_order);
  return {z * alpha, z * beta};
}

}  // namespace akns
