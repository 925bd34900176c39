#include "akns/frobenius.hpp"

#include <algorithm>

namespace akns {

Symbol spectral_symbol() { return Symbol("z"); }

std::pair<long, long> indicial_exponents(const PoleData& d) {
  const long n = exact_isqrt(d.phi_at(-1) * d.psi_at(-1));
  if (n == 0) throw Error("non-integer exponents: phi_{-1} psi_{-1} = " + (d.phi_at(-1) * d.psi_at(-1)).str());
  return {n, -n};
}

namespace {

// Right-hand sides of the step-k system
//   (sigma+k) a_k - psi_{-1} b_k = R1,   phi_{-1} a_k - (sigma+k) b_k = R2.
std::pair<SymPoly, SymPoly> step_rhs(const PoleData& d, const FrobeniusSolution& s, int k) {
  const SymPoly minus_iz = SymPoly(spectral_symbol()) * -GaussRat::i();
  SymPoly r1 = minus_iz * s.alpha[static_cast<size_t>(k - 1)];
  SymPoly r2 = minus_iz * s.beta[static_cast<size_t>(k - 1)];
  for (int j = 0; j <= k - 1; ++j) {
    r1.add_scaled(s.beta[static_cast<size_t>(k - 1 - j)], d.psi_at(j));
    r2.add_scaled(s.alpha[static_cast<size_t>(k - 1 - j)], -d.phi_at(j));
  }
  return {r1, r2};
}

}  // namespace

FrobeniusSolution local_solution(const PoleData& d, long sigma, int K) {
  const auto [n, minus_n] = indicial_exponents(d);
  if (sigma != n && sigma != minus_n) throw Error("sigma = " + std::to_string(sigma) + " is not an indicial exponent");
  if (K < 0) throw std::invalid_argument("K must be >= 0");
  if (sigma < 0 && K < 2 * n) throw DepthError("the resonance step 2n must be computed", static_cast<int>(2 * n));
  if (d.depth() < K - 1) throw DepthError("pole data too short for " + std::to_string(K) + " Frobenius steps", K - 1);

  const GaussRat phi = d.phi_at(-1);
  const GaussRat psi = d.psi_at(-1);
  FrobeniusSolution s;
  s.sigma = sigma;
  s.n = n;
  s.alpha.push_back(SymPoly(psi));
  s.beta.push_back(SymPoly(sigma));

  for (int k = 1; k <= K; ++k) {
    auto [r1, r2] = step_rhs(d, s, k);
    const GaussRat shift(sigma + k);
    const GaussRat det = phi * psi - shift * shift;
    if (!det.is_zero()) {
      const GaussRat inv = det.inverse();
      s.alpha.push_back((r1 * -shift + r2 * psi) * inv);
      s.beta.push_back((r2 * shift - r1 * phi) * inv);
      continue;
    }
    // Rank-one step: (phi, -shift) annihilates the matrix from the left.
    SymPoly obstruction = r1 * phi - r2 * shift;
    if (!obstruction.is_zero()) throw ResonanceObstruction(k, std::move(obstruction));
    s.alpha.push_back(SymPoly());
    s.beta.push_back(r1 * -psi.inverse());
    s.resonance_step = k;
    s.resonance_free_choice = "alpha_" + std::to_string(k) + " = 0";
  }
  return s;
}

MeromorphyVerdict meromorphy_verdict(const PoleData& d, int K) {
  MeromorphyVerdict v;
  long n = 0;
  try {
    n = indicial_exponents(d).first;
  } catch (const DepthError&) {
    throw;
  } catch (const Error& e) {
    v.reason = e.what();
    return v;
  }
  v.n = n;
  try {
    local_solution(d, n, K);
    local_solution(d, -n, K);
  } catch (const ResonanceObstruction& e) {
    v.obstruction = e.obstruction();
    v.reason = e.what();
    return v;
  }
  v.meromorphic = true;
  return v;
}

std::optional<int> residual_check(const PoleData& d, const FrobeniusSolution& sol, int K) {
  if (sol.alpha.empty() || (sol.alpha[0].is_zero() && sol.beta[0].is_zero()))
    throw Error("zero solution: (alpha_0, beta_0) must be nonzero");
  K = std::min<int>(K, static_cast<int>(std::min(sol.alpha.size(), sol.beta.size())) - 1);
  if (d.depth() < K - 1) throw DepthError("pole data too short for the residual", K - 1);
  const GaussRat i = GaussRat::i();
  const SymPoly z(spectral_symbol());
  for (int k = 0; k <= K; ++k) {
    const GaussRat shift(sol.sigma + k);
    // i*y1' - i*q*y2 - z*y1 and -i*y2' + i*p*y1 - z*y2 at x^{sigma+k-1}.
    SymPoly e1 = sol.alpha[static_cast<size_t>(k)] * (i * shift);
    SymPoly e2 = sol.beta[static_cast<size_t>(k)] * (-i * shift);
    for (int j = -1; j <= k - 1; ++j) {
      e1.add_scaled(sol.beta[static_cast<size_t>(k - 1 - j)], -i * d.psi_at(j));
      e2.add_scaled(sol.alpha[static_cast<size_t>(k - 1 - j)], i * d.phi_at(j));
    }
    if (k > 0) {
      e1 -= z * sol.alpha[static_cast<size_t>(k - 1)];
      e2 -= z * sol.beta[static_cast<size_t>(k - 1)];
    }
    if (!e1.is_zero() || !e2.is_zero()) return static_cast<int>(sol.sigma) + k - 1;
  }
  return std::nullopt;
}

}  // namespace akns
