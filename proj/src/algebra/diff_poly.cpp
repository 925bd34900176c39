#include "akns/algebra/diff_poly.hpp"

#include <algorithm>
#include <set>

#include "akns/errors.hpp"

namespace akns {

DiffMono DiffMono::var(Field f, int order, int exp) {
  DiffMono m;
  if (exp == 0) return m;
  m.exps_.assign(static_cast<size_t>(index(f, order)) + 1, 0);
  m.exps_.back() = exp;
  return m;
}

int DiffMono::exp(int idx) const {
  return idx < static_cast<int>(exps_.size()) ? exps_[static_cast<size_t>(idx)] : 0;
}

int DiffMono::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

int DiffMono::weight() const {
  int w = 0;
  for (size_t k = 0; k < exps_.size(); ++k) w += exps_[k] * (order_of(static_cast<int>(k)) + 1);
  return w;
}

int DiffMono::max_order() const {
  return exps_.empty() ? -1 : order_of(static_cast<int>(exps_.size()) - 1);
}

int DiffMono::degree_in(Field f) const {
  int d = 0;
  for (size_t k = static_cast<size_t>(f); k < exps_.size(); k += 2) d += exps_[k];
  return d;
}

DiffMono DiffMono::with_exp_delta(int idx, int delta) const {
  DiffMono m = *this;
  if (static_cast<int>(m.exps_.size()) <= idx) m.exps_.resize(static_cast<size_t>(idx) + 1, 0);
  m.exps_[static_cast<size_t>(idx)] += delta;
  if (m.exps_[static_cast<size_t>(idx)] < 0) throw InvariantViolation("negative exponent in DiffMono");
  m.trim();
  return m;
}

void DiffMono::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

DiffMono operator*(const DiffMono& a, const DiffMono& b) {
  DiffMono r;
  r.exps_.assign(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (size_t k = 0; k < a.exps_.size(); ++k) r.exps_[k] += a.exps_[k];
  for (size_t k = 0; k < b.exps_.size(); ++k) r.exps_[k] += b.exps_[k];
  return r;
}

std::strong_ordering operator<=>(const DiffMono& a, const DiffMono& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (size_t k = 0; k < n; ++k) {
    int ea = a.exp(static_cast<int>(k));
    int eb = b.exp(static_cast<int>(k));
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

std::string DiffMono::str() const {
  std::string out;
  for (size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += '*';
    const int idx = static_cast<int>(k);
    out += field_of(idx) == Field::p ? 'p' : 'q';
    if (order_of(idx) > 0) out += "^(" + std::to_string(order_of(idx)) + ")";
    if (exps_[k] != 1) out += "^" + std::to_string(exps_[k]);
  }
  return out;
}

DiffPoly::DiffPoly(SymPoly c) {
  if (!c.is_zero()) terms_.emplace(DiffMono(), std::move(c));
}

DiffPoly::DiffPoly(DiffMono m, SymPoly c) {
  if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

SymPoly DiffPoly::coefficient(const DiffMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? SymPoly() : it->second;
}

int DiffPoly::max_order() const {
  int o = -1;
  for (const auto& [m, c] : terms_) o = std::max(o, m.max_order());
  return o;
}

int DiffPoly::max_weight() const {
  int w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

void DiffPoly::add_term(const DiffMono& m, const SymPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const SymPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  Terms out;
  for (auto& [m, v] : terms_) {
    SymPoly prod = v * c;
    if (!prod.is_zero()) out.emplace(m, std::move(prod));
  }
  terms_ = std::move(out);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string term;
    if (m.is_one()) {
      term = c.str();
    } else if (c == SymPoly(1)) {
      term = m.str();
    } else if (c == SymPoly(-1)) {
      term = "-" + m.str();
    } else {
      term = (c.needs_parens() ? "(" + c.str() + ")" : c.str()) + "*" + m.str();
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

namespace {

DiffPoly derive_mono(const DiffMono& m) {
  DiffPoly r;
  const auto& e = m.exps();
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    const int idx = static_cast<int>(k);
    DiffMono next = m.with_exp_delta(idx, -1).with_exp_delta(idx + 2, 1);
    r.add_term(next, SymPoly(static_cast<long>(e[k])));
  }
  return r;
}

void enumerate(int idx, int degree, int weight, DiffMono current, std::vector<DiffMono>& out) {
  if (degree == 0) {
    if (weight == 0) out.push_back(current);
    return;
  }
  const int w = DiffMono::order_of(idx) + 1;
  // Remaining factors all have weight >= w.
  if (weight < degree * w) return;
  for (int e = degree; e >= 0; --e) {
    if (e * w > weight) continue;
    DiffMono next = e > 0 ? current.with_exp_delta(idx, e) : current;
    enumerate(idx + 1, degree - e, weight - e * w, next, out);
  }
}

}  // namespace

DiffPoly derive(const DiffPoly& f) {
  DiffPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.is_one()) continue;
    const DiffPoly d = derive_mono(m);
    for (const auto& [dm, dc] : d.terms()) r.add_term(dm, dc * c);
  }
  return r;
}

std::vector<DiffMono> monomials_of(int degree, int weight) {
  std::vector<DiffMono> out;
  if (degree < 0 || weight < degree) return out;
  if (degree == 0) {
    if (weight == 0) out.emplace_back();
    return out;
  }
  enumerate(0, degree, weight, DiffMono(), out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Solves derive(sum x_c * candidate_c) == component over the rationals, with
// SymPoly right-hand sides. The derivation matrix has integer entries.
DiffPoly integrate_component(int degree, int weight, const DiffPoly& component) {
  const std::vector<DiffMono> candidates = monomials_of(degree, weight - 1);
  const std::vector<DiffMono> targets = monomials_of(degree, weight);
  std::map<DiffMono, size_t> row_of;
  for (size_t r = 0; r < targets.size(); ++r) row_of.emplace(targets[r], r);

  const size_t rows = targets.size();
  const size_t cols = candidates.size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  std::vector<SymPoly> rhs(rows);
  std::vector<size_t> origin(rows);
  for (size_t r = 0; r < rows; ++r) origin[r] = r;

  for (size_t c = 0; c < cols; ++c) {
    const DiffPoly d = derive_mono(candidates[c]);
    for (const auto& [m, v] : d.terms()) a[row_of.at(m)][c] = v.as_constant().re();
  }
  for (const auto& [m, v] : component.terms()) rhs[row_of.at(m)] = v;

  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    std::swap(origin[piv], origin[r]);
    const mpq_class inv = 1 / a[r][c];
    for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
    rhs[r] *= GaussRat(inv);
    for (size_t o = 0; o < rows; ++o) {
      if (o == r || sgn(a[o][c]) == 0) continue;
      const mpq_class f = a[o][c];
      for (size_t k = c; k < cols; ++k) a[o][k] -= f * a[r][k];
      rhs[o].add_scaled(rhs[r], GaussRat(mpq_class(-f)));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t o = r; o < rows; ++o)
    if (!rhs[o].is_zero()) throw NotExact(targets[origin[o]].str());

  DiffPoly result;
  for (size_t k = 0; k < pivot_col.size(); ++k) result.add_term(candidates[pivot_col[k]], rhs[k]);
  return result;
}

}  // namespace

DiffPoly integrate(const DiffPoly& h) {
  std::map<std::pair<int, int>, DiffPoly> components;
  for (const auto& [m, c] : h.terms()) {
    if (m.is_one()) throw NotExact("1");
    components[{m.degree(), m.weight()}].add_term(m, c);
  }
  DiffPoly result;
  for (const auto& [key, component] : components) {
    if (key.second <= key.first) {
      // Weight equals degree only for underived monomials, which are never
      // derivatives of anything.
      throw NotExact(component.terms().begin()->first.str());
    }
    result += integrate_component(key.first, key.second, component);
  }
  return result;
}

}  // namespace akns
