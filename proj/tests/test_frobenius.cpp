#include <gtest/gtest.h>

#include "akns/errors.hpp"
#include "akns/frobenius.hpp"
#include "akns/series/generators.hpp"
#include "support.hpp"

using namespace akns;
using akns::testing::Rng;

namespace {

PoleData csc_pole(long scale, int K) {
  const LaurentData s = csc_series(GaussRat(scale), K);
  return PoleData::from_series(s, s);
}

}  // namespace

TEST(Indicial, Exponents) {
  EXPECT_EQ(indicial_exponents(PoleData({GaussRat(1)}, {GaussRat(1)})), std::make_pair(1L, -1L));
  EXPECT_EQ(indicial_exponents(PoleData({GaussRat(4)}, {GaussRat(1)})), std::make_pair(2L, -2L));
  try {
    indicial_exponents(PoleData({GaussRat(1)}, {GaussRat(2)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("non-integer exponents"), std::string::npos);
  }
}

TEST(LocalSolution, CscBothBranches) {
  const PoleData d = csc_pole(1, 12);
  const FrobeniusSolution minus = local_solution(d, -1, 12);
  EXPECT_EQ(minus.resonance_step, 2);
  EXPECT_FALSE(residual_check(d, minus, 12).has_value());
  // n beta_k + (-1)^k phi_{-1} alpha_k = 0 for k <= 2n-1.
  for (int k = 0; k <= 1; ++k)
    EXPECT_TRUE((minus.beta[static_cast<size_t>(k)] + minus.alpha[static_cast<size_t>(k)] * GaussRat(k % 2 == 0 ? 1 : -1))
                    .is_zero());
  const FrobeniusSolution plus = local_solution(d, 1, 12);
  EXPECT_EQ(plus.resonance_step, -1);
  EXPECT_FALSE(residual_check(d, plus, 12).has_value());
  EXPECT_THROW(local_solution(d, 2, 12), Error);
  EXPECT_THROW(local_solution(d, -1, 1), DepthError);
}

TEST(LocalSolution, IndicialInvariantAndDegreeBound) {
  Rng rng(71);
  const Symbol z = spectral_symbol();
  for (long n = 1; n <= 3; ++n) {
    const PoleData d = akns::testing::random_pattern_pole(rng, n, static_cast<int>(2 * n + 2), static_cast<int>(2 * n));
    for (long sigma : {n, -n}) {
      const FrobeniusSolution s = local_solution(d, sigma, static_cast<int>(2 * n + 3));
      EXPECT_TRUE((s.alpha[0] * GaussRat(sigma) - s.beta[0] * d.psi_at(-1)).is_zero());
      EXPECT_TRUE((s.alpha[0] * d.phi_at(-1) - s.beta[0] * GaussRat(sigma)).is_zero());
      for (size_t k = 0; k < s.alpha.size(); ++k) {
        EXPECT_LE(s.alpha[k].degree_in(z), static_cast<int>(k));
        EXPECT_LE(s.beta[k].degree_in(z), static_cast<int>(k));
      }
      EXPECT_FALSE(residual_check(d, s, static_cast<int>(2 * n + 3)).has_value());
    }
  }
}

TEST(LocalSolution, NegativeBranchFollowsPattern) {
  Rng rng(72);
  for (long n = 1; n <= 3; ++n) {
    for (int t = 0; t < 20; ++t) {
      const PoleData d = akns::testing::random_pattern_pole(rng, n, static_cast<int>(2 * n), static_cast<int>(2 * n - 1));
      const FrobeniusSolution s = local_solution(d, -n, static_cast<int>(2 * n));
      for (int k = 0; k <= 2 * n - 1; ++k) {
        const GaussRat sign(k % 2 == 0 ? 1 : -1);
        EXPECT_TRUE((s.beta[static_cast<size_t>(k)] * GaussRat(n) + s.alpha[static_cast<size_t>(k)] * (sign * d.phi_at(-1))).is_zero())
            << "n = " << n << ", k = " << k;
      }
    }
  }
}

TEST(LocalSolution, BrokenPatternHasObstruction) {
  const LaurentData s = csc_series(GaussRat(1), 6);
  std::vector<GaussRat> psi;
  for (int e = -1; e <= 6; ++e) psi.push_back(s[e]);
  psi[1] = GaussRat(1);
  const PoleData d(PoleData::from_series(s, s).phi(), psi);
  try {
    local_solution(d, -1, 4);
    FAIL();
  } catch (const ResonanceObstruction& e) {
    EXPECT_EQ(e.step(), 2);
    EXPECT_FALSE(e.obstruction().is_zero());
    EXPECT_GE(e.obstruction().degree_in(spectral_symbol()), 1);
  }
  const MeromorphyVerdict v = meromorphy_verdict(d, 4);
  EXPECT_FALSE(v.meromorphic);
  EXPECT_FALSE(v.obstruction.is_zero());
}

TEST(Meromorphy, Verdicts) {
  const MeromorphyVerdict ok = meromorphy_verdict(csc_pole(1, 12), 12);
  EXPECT_TRUE(ok.meromorphic);
  EXPECT_TRUE(ok.obstruction.is_zero());
  EXPECT_EQ(ok.n, 1);
  const MeromorphyVerdict branch = meromorphy_verdict(PoleData({GaussRat(1), GaussRat(0)}, {GaussRat(2), GaussRat(0)}), 4);
  EXPECT_FALSE(branch.meromorphic);
  EXPECT_TRUE(branch.obstruction.is_zero());
  EXPECT_NE(branch.reason.find("non-integer exponents"), std::string::npos);
}

TEST(Meromorphy, AgreesWithClassification) {
  Rng rng(73);
  for (long n = 1; n <= 3; ++n) {
    const int K = static_cast<int>(2 * n);
    for (int t = 0; t < 100; ++t) {
      const PoleData d = akns::testing::random_pattern_pole(rng, n, K, K);
      ASSERT_TRUE(classify_pole(d).passes);
      const MeromorphyVerdict v = meromorphy_verdict(d, K);
      ASSERT_TRUE(v.meromorphic) << v.reason;
      ASSERT_TRUE(v.obstruction.is_zero());
      const int j = static_cast<int>(akns::testing::uniform(rng, 0, 2 * n - 1));
      std::vector<GaussRat> phi = d.phi();
      phi[static_cast<size_t>(j + 1)] += akns::testing::random_nonzero(rng);
      const PoleData broken(phi, d.psi());
      ASSERT_FALSE(classify_pole(broken).passes);
      const MeromorphyVerdict w = meromorphy_verdict(broken, K);
      EXPECT_FALSE(w.meromorphic) << "n = " << n << ", j = " << j;
      EXPECT_FALSE(w.obstruction.is_zero());
    }
  }
}

TEST(Residual, CorruptedCoefficient) {
  const PoleData d = csc_pole(1, 12);
  FrobeniusSolution s = local_solution(d, -1, 8);
  s.alpha[3] += SymPoly(1);
  EXPECT_EQ(residual_check(d, s, 8), -1 + 2);
  FrobeniusSolution zero = s;
  zero.alpha[0] = SymPoly();
  zero.beta[0] = SymPoly();
  EXPECT_THROW(residual_check(d, zero, 8), Error);
}
