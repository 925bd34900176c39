#include "akns/algebra/gauss_rat.hpp"

#include <cctype>
#include <ostream>

#include "akns/errors.hpp"

namespace akns {

GaussRat GaussRat::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const mpq_class n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.im_, b.im_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string GaussRat::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  mpq_class mag = abs(im_);
  if (mag == 1)
    imag = "i";
  else
    imag = mag.get_str() + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& a) { return os << a.str(); }

GaussRat pow(GaussRat base, int exp) {
  if (exp < 0) {
    base = base.inverse();
    exp = -exp;
  }
  GaussRat result(1);
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

namespace {

class RatScanner {
 public:
  explicit RatScanner(std::string_view s) : s_(s) {}

  GaussRat parse() {
    skip_ws();
    if (at_end()) fail("empty number");
    GaussRat total;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += sign * term();
      first = false;
      skip_ws();
    }
    return total;
  }

 private:
  GaussRat term() {
    if (peek() == 'i') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        const mpq_class den = number();
        if (sgn(den) == 0) fail("zero denominator");
        return GaussRat(0, mpq_class(1 / den));
      }
      return GaussRat::i();
    }
    if (peek() == '(') {
      ++pos_;
      size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced '('");
      GaussRat inner = RatScanner(s_.substr(pos_, close - pos_)).parse();
      pos_ = close + 1;
      return maybe_times_i(inner);
    }
    mpq_class value = number();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      mpq_class den = number();
      if (sgn(den) == 0) fail("zero denominator");
      value /= den;
    }
    return maybe_times_i(GaussRat(value));
  }

  GaussRat maybe_times_i(GaussRat v) {
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'i') fail("expected 'i' after '*'");
      ++pos_;
      return v * GaussRat::i();
    }
    return v;
  }

  mpq_class number() {
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digit");
    mpq_class v;
    v.get_num().set_str(std::string(s_.substr(start, pos_ - start)), 10);
    v.get_den() = 1;
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("malformed Gaussian rational '" + std::string(s_) + "': " + msg, 1,
                     static_cast<int>(pos_) + 1);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

GaussRat parse_gauss_rat(std::string_view text) { return RatScanner(text).parse(); }

long exact_isqrt(const GaussRat& a) {
  if (!a.is_real() || a.re().get_den() != 1 || sgn(a.re()) <= 0) return 0;
  mpz_class root;
  const mpz_class& v = a.re().get_num();
  if (!mpz_perfect_square_p(v.get_mpz_t())) return 0;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  if (!root.fits_slong_p()) return 0;
  return root.get_si();
}

}  // namespace akns
