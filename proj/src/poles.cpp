#include "akns/poles.hpp"

#include <algorithm>

#include "akns/series/eval.hpp"

namespace akns {

PoleData::PoleData(std::vector<GaussRat> phi, std::vector<GaussRat> psi)
    : phi_(std::move(phi)), psi_(std::move(psi)) {
  if (phi_.empty() || psi_.empty()) throw Error("simple pole required: empty coefficient list");
  if (phi_[0].is_zero() || psi_[0].is_zero())
    throw Error("simple pole required: phi_{-1} and psi_{-1} must be nonzero");
}

PoleData PoleData::from_series(const LaurentData& p, const LaurentData& q) {
  auto coeffs = [](const LaurentData& s) {
    if (s.min_order() < -1) throw Error("simple pole required: pole of order " + std::to_string(-s.min_order()));
    std::vector<GaussRat> v;
    for (int e = -1; e <= s.max_order(); ++e) v.push_back(s[e]);
    return v;
  };
  return PoleData(coeffs(p), coeffs(q));
}

LaurentData PoleData::p_series() const { return LaurentData(-1, phi_); }
LaurentData PoleData::q_series() const { return LaurentData(-1, psi_); }

PoleReport classify_pole(const PoleData& d) {
  PoleReport r;
  const GaussRat lead = d.phi_at(-1) * d.psi_at(-1);
  if (!lead.is_real() || lead.re().get_den() != 1) {
    r.first_failure = PoleFailure{kLeadingNotInteger, -1, "leading product " + lead.str() + " not an integer"};
    return r;
  }
  const long n = exact_isqrt(lead);
  if (n == 0) {
    r.first_failure = PoleFailure{kLeadingNotSquare, -1, "leading product " + lead.str() + " not a perfect square"};
    return r;
  }
  r.n = n;
  const int last = static_cast<int>(2 * n - 1);
  if (d.depth() < last) throw DepthError("pole data too short for n = " + std::to_string(n), last);

  // phi_{-1}^2 / n^2 == phi_{-1} / psi_{-1}
  const GaussRat ratio = d.phi_at(-1) / d.psi_at(-1);
  for (int k = 0; k <= last; ++k) {
    const GaussRat expected = (k % 2 == 0 ? -ratio : ratio) * d.psi_at(k);
    if (d.phi_at(k) != expected) {
      r.first_failure = PoleFailure{kCoefficientRelation, k,
                                    "phi_" + std::to_string(k) + " = " + d.phi_at(k).str() + ", expected " +
                                        expected.str()};
      r.checked_through = k - 1;
      return r;
    }
  }
  r.passes = true;
  r.checked_through = last;
  return r;
}

ProductReport product_laurent(const PoleData& d) {
  const PoleReport cls = classify_pole(d);
  if (!cls.passes) throw Error("pole classification failed: " + cls.first_failure->detail);
  ProductReport out;
  out.n = *cls.n;
  const int last = static_cast<int>(2 * out.n - 1);
  if (d.depth() < last + 1) throw DepthError("h_{2n-1} needs coefficients through index 2n", last + 1);
  out.pq = d.p_series() * d.q_series();
  if (out.pq[-2] != GaussRat(out.n * out.n)) {
    out.first_nonvanishing = -2;
  } else {
    for (int e = -1; e <= last; e += 2) {
      if (!out.pq[e].is_zero()) {
        out.first_nonvanishing = e;
        break;
      }
    }
  }
  out.vanishing = !out.first_nonvanishing.has_value();
  return out;
}

namespace {

template <Coefficient R>
ProbeResult probe(int k, const Laurent<R>& p, const Laurent<R>& q, const std::map<Symbol, GaussRat>& constants) {
  const HierarchyPair& h = compute_fg(k);
  auto sub = [&](const DiffPoly& f) {
    return f.map_coefficients([&](const SymPoly& c) { return c.substitute(constants); });
  };
  const SymLaurent f = eval_diffpoly(sub(h.f), p, q, -k + 1);
  const SymLaurent g = eval_diffpoly(sub(h.g), p, q, -k + 1);
  ProbeResult r;
  r.k = k;
  r.a_lead = f[-k];
  r.b_lead = g[-k];
  r.a_next = f[-k + 1];
  r.b_next = g[-k + 1];
  r.order = std::min(f.min_order(), g.min_order());
  return r;
}

}  // namespace

ProbeResult fg_pole_probe(int k, const PoleData& d, const ConstantVector& c) {
  if (k < 1) throw std::invalid_argument("probe index must be >= 1");
  if (d.depth() < 0) throw DepthError("probe needs phi_0 and psi_0", 0);
  return probe(k, d.p_series(), d.q_series(), c.substitution(k - 1));
}

ProbeResult fg_pole_probe_symbolic(int k) {
  if (k < 1) throw std::invalid_argument("probe index must be >= 1");
  const SymLaurent p(-1, {SymPoly(Symbol("phi")), SymPoly(Symbol("phi0"))});
  const SymLaurent q(-1, {SymPoly(Symbol("psi")), SymPoly(Symbol("psi0"))});
  return probe(k, p, q, ConstantVector().substitution(k - 1));
}

}  // namespace akns
