#pragma once

#include <random>
#include <vector>

#include "akns/algebra/diff_poly.hpp"
#include "akns/algebra/gauss_rat.hpp"
#include "akns/algebra/sym_poly.hpp"
#include "akns/poles.hpp"
#include "akns/series/laurent.hpp"

namespace akns::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Small Gaussian rational, real with probability 1/2.
inline GaussRat random_gauss_rat(Rng& rng, long range = 6) {
  const mpq_class re(uniform(rng, -range, range), uniform(rng, 1, range));
  mpq_class im(0);
  if (uniform(rng, 0, 1) == 1) im = mpq_class(uniform(rng, -range, range), uniform(rng, 1, range));
  mpq_class r = re, i = im;
  r.canonicalize();
  i.canonicalize();
  return GaussRat(r, i);
}

inline GaussRat random_nonzero(Rng& rng, long range = 6) {
  for (;;) {
    GaussRat g = random_gauss_rat(rng, range);
    if (!g.is_zero()) return g;
  }
}

inline SymPoly random_sym_poly(Rng& rng, const std::vector<Symbol>& symbols, int terms = 4, int max_exp = 2) {
  SymPoly r;
  for (int t = 0; t < terms; ++t) {
    SymMono m;
    for (const Symbol& s : symbols) {
      const int e = static_cast<int>(uniform(rng, 0, max_exp));
      if (e > 0) m = m * SymMono(s, e);
    }
    r += SymPoly(m, random_gauss_rat(rng, 4));
  }
  return r;
}

// Random differential polynomial in p, q and derivatives up to max_order,
// without a constant term.
inline DiffPoly random_diff_poly(Rng& rng, int terms = 4, int max_degree = 3, int max_order = 3) {
  DiffPoly r;
  for (int t = 0; t < terms; ++t) {
    const int degree = static_cast<int>(uniform(rng, 1, max_degree));
    DiffMono m;
    for (int f = 0; f < degree; ++f) {
      const Field field = uniform(rng, 0, 1) == 0 ? Field::p : Field::q;
      m = m * DiffMono::var(field, static_cast<int>(uniform(rng, 0, max_order)));
    }
    r.add_term(m, SymPoly(random_gauss_rat(rng, 4)));
  }
  return r;
}

inline LaurentData random_laurent(Rng& rng, int min_order, int max_order) {
  std::vector<GaussRat> c;
  for (int e = min_order; e <= max_order; ++e) c.push_back(random_gauss_rat(rng, 5));
  return LaurentData(min_order, std::move(c), max_order);
}

// Pole data satisfying phi_{-1} psi_{-1} = n^2 and
// phi_k = (-1)^{k+1} psi_k phi_{-1} / psi_{-1} for 0 <= k <= pattern_through,
// with independent random coefficients beyond.
inline PoleData random_pattern_pole(Rng& rng, long n, int depth, int pattern_through) {
  const GaussRat psi_lead = random_nonzero(rng, 5);
  const GaussRat phi_lead = GaussRat(n * n) / psi_lead;
  const GaussRat ratio = phi_lead / psi_lead;
  std::vector<GaussRat> phi{phi_lead};
  std::vector<GaussRat> psi{psi_lead};
  for (int k = 0; k <= depth; ++k) {
    const GaussRat s = random_gauss_rat(rng, 5);
    psi.push_back(s);
    if (k <= pattern_through)
      phi.push_back(k % 2 == 0 ? -ratio * s : ratio * s);
    else
      phi.push_back(random_gauss_rat(rng, 5));
  }
  return PoleData(std::move(phi), std::move(psi));
}

}  // namespace akns::testing
