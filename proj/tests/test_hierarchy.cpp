#include <gtest/gtest.h>

#include <thread>

#include "akns/algebra/parse.hpp"
#include "akns/errors.hpp"
#include "akns/hierarchy.hpp"
#include "akns/series/generators.hpp"

using namespace akns;

TEST(Hierarchy, Seed) {
  EXPECT_EQ(compute_fg(1).f, parse_diff_poly("-i*q"));
  EXPECT_EQ(compute_fg(1).g, parse_diff_poly("i*p"));
  EXPECT_EQ(compute_fg(2).f, parse_diff_poly("1/2*q^(1) - i*C1*q"));
  EXPECT_EQ(compute_fg(2).g, parse_diff_poly("1/2*p^(1) + i*C1*p"));
  EXPECT_THROW(compute_fg(0), std::invalid_argument);
}

TEST(Hierarchy, PrintedThirdMember) {
  const HierarchyPair& h = compute_fg(3);
  EXPECT_EQ(h.f, parse_diff_poly("i/4*q^(2) - i/2*p*q^2 + C1/2*q^(1) - i*C2*q"));
  EXPECT_EQ(h.g, parse_diff_poly("-i/4*p^(2) + i/2*p^2*q + C1/2*p^(1) + i*C2*p"));
  ASSERT_EQ(h.constants_used.size(), 2u);
  EXPECT_EQ(h.constants_used[1], constant_symbol(2));
}

TEST(Hierarchy, ConservedDensityIsExact) {
  for (int k = 1; k <= 8; ++k) {
    const HierarchyPair& h = compute_fg(k);
    const DiffPoly density = DiffPoly::var(Field::p) * h.f + DiffPoly::var(Field::q) * h.g;
    EXPECT_NO_THROW(integrate(density)) << "k = " << k;
  }
}

// Assigning weight j to C_j, every term of f_k and g_k has total weight k.
TEST(Hierarchy, WeightHomogeneity) {
  for (int k = 1; k <= 8; ++k) {
    const HierarchyPair& h = compute_fg(k);
    for (const DiffPoly* f : {&h.f, &h.g}) {
      for (const auto& [m, c] : f->terms()) {
        for (const auto& [sm, v] : c.terms()) {
          int w = m.weight();
          for (const auto& [s, e] : sm.factors()) w += e * std::stoi(s.name().substr(1));
          EXPECT_EQ(w, k) << m.str();
        }
      }
    }
  }
}

// p -> lambda p, q -> q / lambda maps f_k to f_k / lambda and g_k to lambda g_k.
TEST(Hierarchy, ScalingSymmetry) {
  const SymPoly lambda(Symbol("lambda"));
  for (int k = 1; k <= 8; ++k) {
    const HierarchyPair& h = compute_fg(k);
    auto scaled = [&](const DiffPoly& f) {
      DiffPoly out;
      for (const auto& [m, c] : f.terms())
        out.add_term(m, c * pow(lambda, m.degree_in(Field::p) - m.degree_in(Field::q)));
      return out;
    };
    EXPECT_EQ(scaled(h.f), h.f * pow(lambda, -1));
    EXPECT_EQ(scaled(h.g), h.g * lambda);
  }
}

TEST(Hierarchy, ConcurrentAccessIsConsistent) {
  std::vector<const HierarchyPair*> seen(16);
  std::vector<std::thread> threads;
  for (int t = 0; t < 16; ++t)
    threads.emplace_back([&, t] { seen[static_cast<size_t>(t)] = &compute_fg(5 + t % 4); });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 16; ++t) {
    EXPECT_EQ(seen[static_cast<size_t>(t)], &compute_fg(5 + t % 4));
    EXPECT_EQ(seen[static_cast<size_t>(t)]->k, 5 + t % 4);
  }
}

TEST(ConstantVector, Substitution) {
  const ConstantVector c({GaussRat(1), std::nullopt});
  const auto s = c.substitution(4);
  EXPECT_EQ(s.at(constant_symbol(1)), GaussRat(1));
  EXPECT_FALSE(s.contains(constant_symbol(2)));
  EXPECT_EQ(s.at(constant_symbol(4)), GaussRat(0));
  EXPECT_FALSE(c.all_numeric());
}

TEST(Stationary, CscSolvesThirdMember) {
  const LaurentData csc = csc_series(GaussRat(1), 30);
  const ConstantSolution s = solve_constants(csc, csc, 2, 28);
  ASSERT_EQ(s.status, SolveStatus::solved);
  EXPECT_EQ(s.constants, ConstantVector::numeric({GaussRat(0), GaussRat::rational(-1, 4)}));
  const StationaryVerdict v = stationary_residual(csc, csc, 2, s.constants, 28);
  EXPECT_TRUE(v.is_zero);
  EXPECT_TRUE(propagation_check(csc, csc, 2, s.constants, 3, 26));
}

TEST(Stationary, WrongConstantsReportLowestOrder) {
  const LaurentData csc = csc_series(GaussRat(1), 20);
  const StationaryVerdict v =
      stationary_residual(csc, csc, 2, ConstantVector::numeric({GaussRat(0), GaussRat(0)}), 18);
  ASSERT_FALSE(v.is_zero);
  // f_3 = (i/4)q'' - (i/2)q^3 with q = 1/x + x/6 + ...: the x^-3 terms cancel,
  // so the first residue is at x^-1.
  EXPECT_EQ(v.first_nonzero->order, -1);
  EXPECT_EQ(v.first_nonzero->function, "f");
}

TEST(Stationary, DepthIsEnforced) {
  const LaurentData csc = csc_series(GaussRat(1), 10);
  EXPECT_EQ(required_depth(3, 10), 12);
  try {
    stationary_residual(csc, csc, 2, ConstantVector::numeric({GaussRat(0), GaussRat::rational(-1, 4)}), 10);
    FAIL();
  } catch (const DepthError& e) {
    EXPECT_EQ(e.required(), 12);
  }
}
