#include <gtest/gtest.h>

#include "akns/errors.hpp"
#include "akns/poles.hpp"
#include "akns/series/generators.hpp"
#include "support.hpp"

using namespace akns;
using akns::testing::Rng;

namespace {

PoleData csc_pole(long scale, int K) {
  const LaurentData s = csc_series(GaussRat(scale), K);
  return PoleData::from_series(s, s);
}

PoleData with_phi(const PoleData& d, int k, const GaussRat& v) {
  std::vector<GaussRat> phi = d.phi();
  phi[static_cast<size_t>(k + 1)] = v;
  return PoleData(phi, d.psi());
}

const Symbol kPhi("phi"), kPsi("psi");

}  // namespace

TEST(PoleData, RequiresSimplePole) {
  EXPECT_THROW(PoleData({}, {GaussRat(1)}), Error);
  EXPECT_THROW(PoleData({GaussRat(0)}, {GaussRat(1)}), Error);
  const LaurentData double_pole(-2, {GaussRat(1)}, 3);
  EXPECT_THROW(PoleData::from_series(double_pole, double_pole), Error);
}

TEST(ClassifyPole, CscPasses) {
  const PoleReport r = classify_pole(csc_pole(1, 10));
  EXPECT_TRUE(r.passes);
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.checked_through, 1);
  const PoleReport r2 = classify_pole(csc_pole(2, 10));
  EXPECT_TRUE(r2.passes);
  EXPECT_EQ(r2.n, 2);
  EXPECT_EQ(r2.checked_through, 3);
}

TEST(ClassifyPole, LeadingProductFailures) {
  const PoleReport r = classify_pole(PoleData({GaussRat(1)}, {GaussRat(2)}));
  EXPECT_FALSE(r.passes);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(r.first_failure->condition, kLeadingNotSquare);
  EXPECT_EQ(r.first_failure->detail, "leading product 2 not a perfect square");
  const PoleReport half = classify_pole(PoleData({GaussRat::rational(1, 2)}, {GaussRat(1)}));
  EXPECT_EQ(half.first_failure->condition, kLeadingNotInteger);
  const PoleReport complex = classify_pole(PoleData({GaussRat::i()}, {GaussRat::i()}));
  EXPECT_EQ(complex.first_failure->condition, kLeadingNotSquare);
}

TEST(ClassifyPole, CoefficientFailure) {
  const PoleData d = csc_pole(1, 6);
  const PoleReport r = classify_pole(with_phi(d, 1, GaussRat::rational(1, 6) + GaussRat(1)));
  EXPECT_FALSE(r.passes);
  EXPECT_EQ(r.first_failure->condition, kCoefficientRelation);
  EXPECT_EQ(r.first_failure->index, 1);
  EXPECT_EQ(r.checked_through, 0);
}

TEST(ClassifyPole, DepthError) {
  const PoleData d({GaussRat(4), GaussRat(0)}, {GaussRat(1), GaussRat(0)});
  try {
    classify_pole(d);
    FAIL();
  } catch (const DepthError& e) {
    EXPECT_EQ(e.required(), 3);
  }
}

TEST(ClassifyPole, ScaleCovariance) {
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    const long n = akns::testing::uniform(rng, 1, 3);
    const PoleData d = akns::testing::random_pattern_pole(rng, n, static_cast<int>(2 * n + 1), t % 2 == 0 ? 2 * n : 0);
    const GaussRat lambda = akns::testing::random_nonzero(rng);
    std::vector<GaussRat> phi = d.phi(), psi = d.psi();
    for (auto& v : phi) v *= lambda;
    for (auto& v : psi) v /= lambda;
    const PoleReport a = classify_pole(d);
    const PoleReport b = classify_pole(PoleData(phi, psi));
    EXPECT_EQ(a.passes, b.passes);
    EXPECT_EQ(a.n, b.n);
  }
}

TEST(ProductLaurent, Csc) {
  const ProductReport r = product_laurent(csc_pole(1, 8));
  EXPECT_TRUE(r.vanishing);
  EXPECT_EQ(r.pq[-2], GaussRat(1));
  EXPECT_EQ(r.pq[0], GaussRat::rational(1, 3));
  EXPECT_EQ(r.pq[2], GaussRat::rational(1, 15));
  const ProductReport r2 = product_laurent(csc_pole(2, 8));
  EXPECT_EQ(r2.pq[-2], GaussRat(4));
  EXPECT_TRUE(r2.vanishing);
  EXPECT_THROW(product_laurent(PoleData({GaussRat(1)}, {GaussRat(2)})), Error);
}

TEST(ProductLaurent, RandomCorpusVanishes) {
  Rng rng(62);
  for (long n = 1; n <= 3; ++n) {
    for (int t = 0; t < 100; ++t) {
      const PoleData d = akns::testing::random_pattern_pole(rng, n, static_cast<int>(2 * n + 2), static_cast<int>(2 * n));
      ASSERT_TRUE(classify_pole(d).passes);
      const ProductReport r = product_laurent(d);
      ASSERT_TRUE(r.vanishing) << "n = " << n << " index " << *r.first_nonvanishing;
      EXPECT_EQ(r.pq[-2], GaussRat(n * n));
    }
  }
}

// h_{2n-1} contains phi_{-1} psi_{2n} + phi_{2n} psi_{-1}, so the relation
// through index 2n-1 alone does not make it vanish.
TEST(ProductLaurent, LastOddCoefficientNeedsIndexTwoN) {
  Rng rng(63);
  for (long n = 1; n <= 3; ++n) {
    const PoleData d = akns::testing::random_pattern_pole(rng, n, static_cast<int>(2 * n + 2), static_cast<int>(2 * n - 1));
    ASSERT_TRUE(classify_pole(d).passes);
    const ProductReport r = product_laurent(d);
    const int last = static_cast<int>(2 * n - 1);
    const GaussRat expected = d.phi_at(-1) * d.psi_at(last + 1) + d.phi_at(last + 1) * d.psi_at(-1);
    EXPECT_EQ(r.pq[last], expected);
    for (int e = -1; e < last; e += 2) EXPECT_TRUE(r.pq[e].is_zero());
  }
}

TEST(Probe, SymbolicLeadingCoefficients) {
  const SymPoly phi(kPhi), psi(kPsi);
  const SymPoly i(GaussRat::i());
  const ProbeResult p2 = fg_pole_probe_symbolic(2);
  EXPECT_EQ(p2.a_lead, psi * GaussRat::rational(-1, 2));
  EXPECT_EQ(p2.b_lead, phi * GaussRat::rational(-1, 2));
  const ProbeResult p3 = fg_pole_probe_symbolic(3);
  EXPECT_EQ(p3.a_lead, i * psi * (phi * psi - SymPoly(1)) * GaussRat::rational(-1, 2));
  EXPECT_EQ(p3.b_lead, i * phi * (phi * psi - SymPoly(1)) * GaussRat::rational(1, 2));
}

TEST(Probe, SignLaw) {
  const SymPoly phi(kPhi), psi(kPsi);
  for (int k = 1; k <= 7; ++k) {
    const ProbeResult r = fg_pole_probe_symbolic(k);
    const GaussRat sign(k % 2 == 0 ? 1 : -1);
    EXPECT_EQ(r.b_lead * psi, r.a_lead * phi * sign) << "k = " << k;
    EXPECT_GE(r.order, -k);
  }
}

// A^{2j+2} = -(i/2)(2j+1) A^{2j+1} and A^{2j+3} = i A^{2j+2} (phi psi - (j+1)^2) / (j+1).
TEST(Probe, LeadingRecursion) {
  const SymPoly phi(kPhi), psi(kPsi);
  const GaussRat i = GaussRat::i();
  for (int j = 0; 2 * j + 3 <= 7; ++j) {
    const SymPoly a1 = fg_pole_probe_symbolic(2 * j + 1).a_lead;
    const SymPoly a2 = fg_pole_probe_symbolic(2 * j + 2).a_lead;
    const SymPoly a3 = fg_pole_probe_symbolic(2 * j + 3).a_lead;
    EXPECT_EQ(a2, a1 * (-i * GaussRat::rational(2 * j + 1, 2)));
    EXPECT_EQ(a3, a2 * (phi * psi - SymPoly((j + 1) * (j + 1))) * (i * GaussRat::rational(1, j + 1)));
  }
}

TEST(Probe, LeadingTermDropsAtTwoNPlusOne) {
  Rng rng(64);
  for (long n = 1; n <= 3; ++n) {
    const PoleData d = akns::testing::random_pattern_pole(rng, n, 0, 0);
    const ProbeResult r = fg_pole_probe(static_cast<int>(2 * n + 1), d);
    EXPECT_TRUE(r.a_lead.is_zero());
    EXPECT_TRUE(r.b_lead.is_zero());
    EXPECT_GT(r.order, -static_cast<int>(2 * n + 1));
  }
}

TEST(Probe, ConstantCombinationFactorizes) {
  Rng rng(65);
  for (int t = 0; t < 20; ++t) {
    const long n = akns::testing::uniform(rng, 1, 3);
    const PoleData good = akns::testing::random_pattern_pole(rng, n, 0, 0);
    const PoleData bad = with_phi(good, 0, good.phi_at(0) + akns::testing::random_nonzero(rng));
    const PoleData bad2 = with_phi(good, 0, good.phi_at(0) + akns::testing::random_nonzero(rng));
    auto excess = [](const PoleData& d) { return d.psi_at(-1) * d.phi_at(0) + d.phi_at(-1) * d.psi_at(0); };
    std::vector<std::optional<GaussRat>> cs;
    for (int j = 0; j < 7; ++j) cs.emplace_back(akns::testing::random_gauss_rat(rng));
    const ConstantVector constants(cs);
    for (int k = 1; k <= 7; ++k) {
      auto combination = [&](const PoleData& d, const ConstantVector& c) {
        const ProbeResult r = fg_pole_probe(k, d, c);
        const GaussRat sign(k % 2 == 0 ? 1 : -1);
        return r.a_next.as_constant() / d.psi_at(-1) + sign * r.b_next.as_constant() / d.phi_at(-1);
      };
      EXPECT_TRUE(combination(good, {}).is_zero()) << "k = " << k;
      EXPECT_TRUE(combination(good, constants).is_zero()) << "k = " << k;
      // alpha_k: the same ratio for every phi_0, psi_0 and any constants.
      const GaussRat alpha = combination(bad, {}) / excess(bad);
      EXPECT_EQ(combination(bad2, {}) / excess(bad2), alpha);
      EXPECT_EQ(combination(bad, constants) / excess(bad), alpha);
    }
  }
}
