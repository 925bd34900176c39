#include "akns/gapcheck.hpp"

#include "akns/poles.hpp"

namespace akns {

PotentialPoleData::PotentialPoleData(LaurentData u) : u_(std::move(u)) {
  if (u_.max_order() < -2) throw DepthError("potential must reach a_{-2}", -2);
  if (u_.min_order() < -2) throw Error("pole of u has order " + std::to_string(-u_.min_order()) + ", expected 2");
  if (u_[-2].is_zero()) throw Error("a_{-2} must be nonzero");
}

LaurentData build_potential(const LaurentData& p, const LaurentData& q, long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p.max_order() != q.max_order())
    throw DepthError("p and q truncated at different orders", std::max(p.max_order(), q.max_order()));
  return (p * q) * GaussRat::rational(n + 1, n);
}

GapReport finite_gap_check(const PotentialPoleData& u) {
  GapReport r;
  const GaussRat lead = u.at(-2);
  // n(n+1) = a  <=>  (2n+1)^2 = 4a + 1
  const long root = exact_isqrt(GaussRat(4) * lead + GaussRat(1));
  if (root < 3 || root % 2 == 0) {
    r.first_failure =
        GapFailure{"finite_gap", kLeadingNotTriangular, -2, "a_{-2} = " + lead.str() + " is not n(n+1)", ""};
    return r;
  }
  const long n = (root - 1) / 2;
  r.n = n;
  const int last = static_cast<int>(2 * n - 1);
  if (u.depth() < last) throw DepthError("potential too short for n = " + std::to_string(n), last);
  for (int k = -1; k <= last; k += 2) {
    if (!u.at(k).is_zero()) {
      r.first_failure =
          GapFailure{"finite_gap", kOddCoefficient, k, "a_" + std::to_string(k) + " = " + u.at(k).str(), ""};
      r.checked_through = k - 1;
      return r;
    }
  }
  r.finite_gap = true;
  r.checked_through = last;
  return r;
}

GapReport theorem4_pipeline(const std::vector<PoleSeries>& poles, int m, const ConstantVector& c, int through,
                            std::optional<long> expected_n, std::vector<std::string> attestations) {
  if (poles.empty()) throw std::invalid_argument("pipeline needs at least one pole");
  GapReport r;
  r.m = m;
  r.checked_through = through;
  r.attestations = std::move(attestations);
  auto fail = [&](GapFailure f) {
    r.first_failure = std::move(f);
    return r;
  };

  std::optional<long> common = expected_n;
  for (const auto& pole : poles) {
    PoleGapEntry entry;
    entry.label = pole.label;
    const PoleReport cls = classify_pole(PoleData::from_series(pole.p, pole.q));
    entry.n = cls.n;
    r.poles.push_back(entry);
    if (!cls.passes) {
      const PoleFailure& pf = *cls.first_failure;
      return fail({"classification", pf.condition, pf.index, pf.detail, pole.label});
    }
    if (common && *common != *cls.n)
      return fail({"classification", kIndexMismatch, -1,
                   "n = " + std::to_string(*cls.n) + " differs from " + std::to_string(*common), pole.label});
    common = cls.n;
  }
  r.n = common;

  for (size_t i = 0; i < poles.size(); ++i) {
    const StationaryVerdict v = stationary_residual(poles[i].p, poles[i].q, m, c, through);
    r.poles[i].stationary = v.is_zero;
    if (!v.is_zero) {
      const ResidualEntry& e = *v.first_nonzero;
      return fail({"stationarity", kStationaryResidual, e.order,
                   e.function + "_" + std::to_string(m + 1) + " has coefficient " + e.coefficient.str() +
                       " at x^" + std::to_string(e.order),
                   poles[i].label});
    }
  }

  for (size_t i = 0; i < poles.size(); ++i) {
    LaurentData u = build_potential(poles[i].p, poles[i].q, *common);
    const GapReport g = finite_gap_check(PotentialPoleData(u));
    r.poles[i].u = std::move(u);
    r.poles[i].finite_gap = g.finite_gap;
    if (g.finite_gap && *g.n != *common)
      return fail({"finite_gap", kIndexMismatch, -2,
                   "potential index " + std::to_string(*g.n) + " differs from " + std::to_string(*common),
                   poles[i].label});
    if (!g.finite_gap) {
      GapFailure f = *g.first_failure;
      f.pole = poles[i].label;
      return fail(std::move(f));
    }
  }
  r.finite_gap = true;
  return r;
}

GapReport theorem4_pipeline(const LaurentData& p, const LaurentData& q, int m, const ConstantVector& c,
                            int through) {
  return theorem4_pipeline({PoleSeries{"x=0", p, q}}, m, c, through);
}

}  // namespace akns
