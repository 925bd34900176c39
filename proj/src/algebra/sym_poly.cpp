#include "akns/algebra/sym_poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>

#include "akns/errors.hpp"

namespace akns {

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mu;
  static std::set<std::string, std::less<>> table;
  std::lock_guard lock(mu);
  auto it = table.find(name);
  if (it == table.end()) it = table.emplace(name).first;
  return &*it;
}

std::pair<std::string_view, std::string_view> split_suffix(std::string_view s) {
  size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  return {s.substr(0, k), s.substr(k)};
}

}  // namespace

Symbol::Symbol(std::string_view name) : name_(intern(name)) {}

std::strong_ordering operator<=>(Symbol a, Symbol b) {
  if (a.name_ == b.name_) return std::strong_ordering::equal;
  auto [pa, sa] = split_suffix(*a.name_);
  auto [pb, sb] = split_suffix(*b.name_);
  if (auto c = pa <=> pb; c != 0) return c;
  // Natural order on the numeric suffix; leading zeros are unusual enough
  // that a length-then-text comparison is fine.
  if (auto c = sa.size() <=> sb.size(); c != 0) return c;
  return sa <=> sb;
}

Symbol constant_symbol(int k) { return Symbol("C" + std::to_string(k)); }

SymMono::SymMono(Symbol s, int e) {
  if (e != 0) factors_.emplace_back(s, e);
}

int SymMono::degree() const {
  int d = 0;
  for (const auto& [s, e] : factors_) d += e;
  return d;
}

int SymMono::degree_in(Symbol s) const {
  for (const auto& [t, e] : factors_)
    if (t == s) return e;
  return 0;
}

SymMono SymMono::without(Symbol s) const {
  SymMono r;
  for (const auto& f : factors_)
    if (f.first != s) r.factors_.push_back(f);
  return r;
}

SymMono operator*(const SymMono& a, const SymMono& b) {
  SymMono r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) r.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

std::strong_ordering operator<=>(const SymMono& a, const SymMono& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (size_t k = 0; k < n; ++k) {
    const auto& [sa, ea] = a.factors_[k];
    const auto& [sb, eb] = b.factors_[k];
    // Earlier symbol with a positive exponent sorts later (lex, x > y).
    if (sa != sb) return sb <=> sa;
    if (ea != eb) return ea <=> eb;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::string SymMono::str() const {
  std::string out;
  for (const auto& [s, e] : factors_) {
    if (!out.empty()) out += '*';
    out += s.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

SymPoly::SymPoly(GaussRat c) {
  if (!c.is_zero()) terms_.emplace(SymMono(), std::move(c));
}

SymPoly::SymPoly(SymMono m, GaussRat c) {
  if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

bool SymPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussRat SymPoly::constant_term() const {
  auto it = terms_.find(SymMono());
  return it == terms_.end() ? GaussRat() : it->second;
}

GaussRat SymPoly::as_constant() const {
  if (!is_constant()) throw InvariantViolation("expected a constant, got " + str());
  return constant_term();
}

int SymPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int SymPoly::degree_in(Symbol s) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(s));
  return d;
}

std::vector<Symbol> SymPoly::symbols() const {
  std::set<Symbol> seen;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m.factors()) seen.insert(s);
  return {seen.begin(), seen.end()};
}

std::vector<SymPoly> SymPoly::coefficients_in(Symbol s) const {
  std::vector<SymPoly> out(static_cast<size_t>(degree_in(s)) + 1);
  for (const auto& [m, c] : terms_) {
    int e = m.degree_in(s);
    if (e < 0) throw InvariantViolation("negative exponent of " + s.name());
    out[static_cast<size_t>(e)].add_term(m.without(s), c);
  }
  return out;
}

SymPoly SymPoly::substitute(Symbol s, const SymPoly& value) const {
  SymPoly out;
  std::map<int, SymPoly> powers;
  for (const auto& [m, c] : terms_) {
    int e = m.degree_in(s);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, pow(value, e)).first;
    out += SymPoly(m.without(s), c) * it->second;
  }
  return out;
}

SymPoly SymPoly::substitute(const std::map<Symbol, GaussRat>& values) const {
  SymPoly out;
  for (const auto& [m, c] : terms_) {
    SymMono rest;
    GaussRat scale = c;
    for (const auto& [s, e] : m.factors()) {
      auto it = values.find(s);
      if (it == values.end())
        rest = rest * SymMono(s, e);
      else
        scale *= pow(it->second, e);
    }
    out.add_term(rest, scale);
  }
  return out;
}

void SymPoly::add_term(const SymMono& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void SymPoly::add_scaled(const SymPoly& o, const GaussRat& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : o.terms_) add_term(m, v * c);
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) { return *this = *this * o; }

SymPoly& SymPoly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

SymPoly pow(const SymPoly& base, int exp) {
  if (exp < 0) {
    if (base.terms().size() != 1) throw InvariantViolation("negative power of a non-monomial");
    const auto& [m, c] = *base.terms().begin();
    SymMono inv;
    for (const auto& [s, e] : m.factors()) inv = inv * SymMono(s, -e);
    return pow(SymPoly(inv, c.inverse()), -exp);
  }
  SymPoly result(1);
  SymPoly b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

namespace {

// Joins signed term strings with " + " / " - ".
void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (!term.empty() && term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string term;
    if (m.is_one()) {
      term = c.str();
    } else if (c.is_one()) {
      term = m.str();
    } else if (c == GaussRat(-1)) {
      term = "-" + m.str();
    } else {
      term = (c.needs_parens() ? "(" + c.str() + ")" : c.str()) + "*" + m.str();
    }
    append_term(out, term);
  }
  return out;
}

bool SymPoly::needs_parens() const {
  if (terms_.size() > 1) return true;
  if (terms_.empty()) return false;
  const auto& [m, c] = *terms_.begin();
  return m.is_one() && c.needs_parens();
}

}  // namespace akns
