#include "akns/algebra/parse.hpp"

#include <cctype>
#include <string>

#include "akns/errors.hpp"

namespace akns {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  DiffPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    DiffPoly r = sum();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return r;
  }

  bool saw_field() const { return saw_field_; }

 private:
  DiffPoly sum() {
    skip_ws();
    DiffPoly total;
    bool negate = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++pos_;
    }
    DiffPoly t = product();
    total = negate ? -t : t;
    for (;;) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      const bool minus = peek() == '-';
      ++pos_;
      DiffPoly next = product();
      if (minus)
        total -= next;
      else
        total += next;
    }
    return total;
  }

  DiffPoly product() {
    DiffPoly r = factor();
    for (;;) {
      skip_ws();
      if (at_end() || (peek() != '*' && peek() != '/')) break;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer divisor");
        const mpq_class den = integer();
        if (sgn(den) == 0) fail("zero denominator");
        r *= SymPoly(GaussRat(mpq_class(1 / den)));
        continue;
      }
      ++pos_;
      r = r * factor();
    }
    return r;
  }

  DiffPoly factor() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      DiffPoly inner = sum();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return power_of(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v = integer();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        mpq_class den = integer();
        if (sgn(den) == 0) fail("zero denominator");
        v /= den;
      }
      return power_of(DiffPoly(SymPoly(GaussRat(v))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if (name == "i") return power_of(DiffPoly(SymPoly(GaussRat::i())));
      if (name == "p" || name == "q") {
        saw_field_ = true;
        const Field f = name == "p" ? Field::p : Field::q;
        int order = 0;
        if (pos_ + 1 < s_.size() && peek() == '^' && s_[pos_ + 1] == '(') {
          pos_ += 2;
          skip_ws();
          order = small_int();
          skip_ws();
          if (at_end() || peek() != ')') fail("expected ')' after derivative order");
          ++pos_;
        }
        int e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = small_int();
          if (e < 0) fail("negative power of a field variable");
        }
        return DiffPoly(DiffMono::var(f, order, e));
      }
      return power_of(DiffPoly(SymPoly(Symbol(name))));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  DiffPoly power_of(const DiffPoly& base) {
    if (at_end() || peek() != '^') return base;
    ++pos_;
    const int e = small_int();
    if (e < 0) {
      // Laurent powers are only meaningful for a single coefficient monomial.
      if (base.terms().size() != 1 || !base.terms().begin()->first.is_one())
        fail("negative power of a non-constant");
      return DiffPoly(pow(base.terms().begin()->second, e));
    }
    DiffPoly r(SymPoly(1));
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
  }

  mpq_class integer() {
    const size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digit");
    mpq_class v;
    v.get_num().set_str(std::string(s_.substr(start, pos_ - start)), 10);
    v.get_den() = 1;
    return v;
  }

  int small_int() {
    skip_ws();
    bool neg = false;
    if (!at_end() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    const size_t start = pos_;
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return static_cast<int>(neg ? -v : v);
  }

  std::string identifier() {
    const size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("malformed expression '" + std::string(s_) + "': " + msg, 1,
                     static_cast<int>(pos_) + 1);
  }

  std::string_view s_;
  size_t pos_ = 0;
  bool saw_field_ = false;
};

}  // namespace

DiffPoly parse_diff_poly(std::string_view text) { return ExprParser(text).parse(); }

SymPoly parse_sym_poly(std::string_view text) {
  ExprParser parser(text);
  DiffPoly r = parser.parse();
  if (parser.saw_field()) throw ParseError("field variable in constant expression '" + std::string(text) + "'", 1, 1);
  return r.constant_term();
}

}  // namespace akns
