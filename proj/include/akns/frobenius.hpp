#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akns/algebra/sym_poly.hpp"
#include "akns/errors.hpp"
#include "akns/poles.hpp"

namespace akns {

// Local Frobenius solutions at a simple pole of the spectral system
//
//   i y1' - i q y2 = z y1,     -i y2' + i p y1 = z y2,
//
// y1 = sum alpha_k x^{sigma+k}, y2 = sum beta_k x^{sigma+k}. The spectral
// parameter z stays symbolic, so every coefficient is a polynomial in z.

/// The spectral parameter symbol "z".
Symbol spectral_symbol();

/// The resonance step cannot be solved: the formal solution needs a log term.
class ResonanceObstruction : public Error {
 public:
  ResonanceObstruction(int step, SymPoly obstruction)
      : Error("resonance obstruction at step " + std::to_string(step) + ": " + obstruction.str()),
        step_(step),
        obstruction_(std::move(obstruction)) {}
  int step() const { return step_; }
  const SymPoly& obstruction() const { return obstruction_; }

 private:
  int step_;
  SymPoly obstruction_;
};

struct FrobeniusSolution {
  long sigma = 0;
  long n = 0;
  std::vector<SymPoly> alpha;
  std::vector<SymPoly> beta;
  // Step at which the free coefficient was fixed, or -1 without resonance.
  int resonance_step = -1;
  std::string resonance_free_choice;
};

struct MeromorphyVerdict {
  bool meromorphic = false;
  SymPoly obstruction;
  long n = 0;
  std::string reason;
};

/// (+n, -n) with n^2 = phi_{-1} psi_{-1}. Throws Error("non-integer exponents")
/// when the leading product is not the square of a positive integer.
std::pair<long, long> indicial_exponents(const PoleData& d);

/// Coefficients alpha_0..alpha_K, beta_0..beta_K with alpha_0 = psi_{-1},
/// beta_0 = sigma. At the resonance k = 2n of sigma = -n the free
/// coefficient is fixed by alpha_{2n} = 0. Needs pole data through index
/// K-1; throws ResonanceObstruction when the resonance is not solvable.
FrobeniusSolution local_solution(const PoleData& d, long sigma, int K);

/// Runs both exponents with symbolic z; meromorphic iff both succeed.
MeromorphyVerdict meromorphy_verdict(const PoleData& d, int K);

/// Exponent of the first nonzero residual coefficient after substituting the
/// solution into the system, or nullopt when clean through step K.
std::optional<int> residual_check(const PoleData& d, const FrobeniusSolution& sol, int K);

}  // namespace akns
