#include "coxh/golden.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include <mpfr.h>

#include "coxh/error.hpp"

namespace coxh {

namespace {

constexpr mpfr_prec_t kFloatPrec = 256;

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i)
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Sign of s + r*sqrt(5).
int sign_plus_root5(const mpq_class& s, const mpq_class& r) {
  int ss = sgn(s), sr = sgn(r);
  if (ss >= 0 && sr >= 0)
    return (ss > 0 || sr > 0) ? 1 : 0;
  if (ss <= 0 && sr <= 0)
    return -1;
  // opposite signs: compare s^2 with 5 r^2 (never equal, sqrt 5 is irrational)
  mpq_class s2 = s * s, r2 = 5 * r * r;
  if (ss > 0)
    return s2 > r2 ? 1 : -1;
  return r2 > s2 ? 1 : -1;
}

class ParserState {
public:
  explicit ParserState(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  mpq_class rational(bool signed_allowed) {
    std::string num;
    if (signed_allowed && peek() == '-') {
      num += '-';
      advance();
    }
    std::string digits = digit_run();
    if (digits.empty())
      fail("expected an integer");
    num += digits;
    mpq_class value;
    if (peek() == '/') {
      advance();
      std::string den = digit_run();
      if (den.empty())
        fail("expected a denominator");
      mpz_class d(den);
      if (d == 0)
        fail("zero denominator");
      value = mpq_class(mpz_class(num), d);
      value.canonicalize();
    } else {
      value = mpq_class(mpz_class(num));
    }
    return value;
  }

  [[noreturn]] void fail(const char* what) const {
    throw ParseError("invalid golden number '" + std::string(text_) + "': " + what);
  }

private:
  std::string digit_run() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::size_t hash_mpq(const mpq_class& q) {
  std::size_t a = hash_mpz(q.get_num_mpz_t());
  std::size_t b = hash_mpz(q.get_den_mpz_t());
  return a ^ (b * 0xff51afd7ed558ccdULL + (a << 7));
}

GoldenNumber::GoldenNumber(mpq_class rat, mpq_class tau)
    : rat_(std::move(rat)), tau_(std::move(tau)) {
  rat_.canonicalize();
  tau_.canonicalize();
}

bool GoldenNumber::is_ztau() const {
  return rat_.get_den() == 1 && tau_.get_den() == 1;
}

int GoldenNumber::sign() const {
  // q + r*tau = (2q + r + r*sqrt 5) / 2
  return sign_plus_root5(2 * rat_ + tau_, tau_);
}

GoldenNumber GoldenNumber::conjugate() const {
  return {rat_ + tau_, -tau_};
}

mpq_class GoldenNumber::field_norm() const {
  // (q + r tau)(q + r - r tau) = q^2 + q r - r^2
  return mpq_class(rat_ * rat_ + rat_ * tau_ - tau_ * tau_);
}

GoldenNumber GoldenNumber::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  mpq_class n = field_norm();
  GoldenNumber c = conjugate();
  return {c.rat_ / n, c.tau_ / n};
}

GoldenNumber GoldenNumber::pow(unsigned exponent) const {
  GoldenNumber result(1), base = *this;
  while (exponent) {
    if (exponent & 1U)
      result *= base;
    exponent >>= 1;
    if (exponent)
      base *= base;
  }
  return result;
}

double GoldenNumber::to_double() const {
  if (is_zero())
    return 0.0;
  mpfr_t root5, tau_f, x, y;
  mpfr_inits2(kFloatPrec, root5, tau_f, x, y, static_cast<mpfr_ptr>(nullptr));
  mpfr_sqrt_ui(root5, 5, MPFR_RNDN);
  mpfr_add_ui(tau_f, root5, 1, MPFR_RNDN);
  mpfr_div_2ui(tau_f, tau_f, 1, MPFR_RNDN);
  if (sgn(rat_) * sgn(tau_) < 0) {
    // q and r*tau cancel; the conjugate does not, and x = N(x) / conj(x).
    GoldenNumber c = conjugate();
    mpfr_mul_q(x, tau_f, c.tau_.get_mpq_t(), MPFR_RNDN);
    mpfr_add_q(x, x, c.rat_.get_mpq_t(), MPFR_RNDN);
    mpq_class n = field_norm();
    mpfr_set_q(y, n.get_mpq_t(), MPFR_RNDN);
    mpfr_div(x, y, x, MPFR_RNDN);
  } else {
    mpfr_mul_q(x, tau_f, tau_.get_mpq_t(), MPFR_RNDN);
    mpfr_add_q(x, x, rat_.get_mpq_t(), MPFR_RNDN);
  }
  double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clears(root5, tau_f, x, y, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string GoldenNumber::str() const {
  if (sgn(tau_) == 0)
    return rat_.get_str();
  if (sgn(rat_) == 0)
    return tau_.get_str() + "t";
  if (sgn(tau_) > 0)
    return rat_.get_str() + "+" + tau_.get_str() + "t";
  return rat_.get_str() + "-" + mpq_class(-tau_).get_str() + "t";
}

GoldenNumber GoldenNumber::parse(std::string_view text) {
  ParserState p(text);
  mpq_class first = p.rational(true);
  if (p.done())
    return {first, mpq_class(0)};
  if (p.peek() == 't') {
    p.advance();
    if (!p.done())
      p.fail("trailing characters");
    return {mpq_class(0), first};
  }
  char op = p.peek();
  if (op != '+' && op != '-')
    p.fail("expected '+', '-' or 't'");
  p.advance();
  mpq_class second = p.rational(false);
  if (p.peek() != 't')
    p.fail("expected 't' after the tau coefficient");
  p.advance();
  if (!p.done())
    p.fail("trailing characters");
  if (op == '-')
    second = -second;
  return {first, second};
}

std::size_t GoldenNumber::hash() const {
  std::size_t a = hash_mpq(rat_);
  return a ^ (hash_mpq(tau_) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  rat_ += o.rat_;
  tau_ += o.tau_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  rat_ -= o.rat_;
  tau_ -= o.tau_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  // (q1 + r1 t)(q2 + r2 t) = (q1 q2 + r1 r2) + (q1 r2 + r1 q2 + r1 r2) t
  mpq_class rr = tau_ * o.tau_;
  mpq_class q = rat_ * o.rat_ + rr;
  mpq_class r = rat_ * o.tau_ + tau_ * o.rat_ + rr;
  rat_ = std::move(q);
  tau_ = std::move(r);
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o) {
  return *this *= o.inverse();
}

GoldenNumber GoldenNumber::operator-() const {
  return {-rat_, -tau_};
}

std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b) {
  int s = (a - b).sign();
  if (s < 0)
    return std::strong_ordering::less;
  if (s > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int golden_sign(long long a, long long b) {
  // a + b tau has the sign of s + b sqrt 5 with s = 2a + b.
  long long s = 2 * a + b;
  if (s >= 0 && b >= 0)
    return (s > 0 || b > 0) ? 1 : 0;
  if (s <= 0 && b <= 0)
    return -1;
  __int128 s2 = static_cast<__int128>(s) * s;
  __int128 b2 = static_cast<__int128>(b) * b * 5;
  if (s > 0)
    return s2 > b2 ? 1 : -1;
  return b2 > s2 ? 1 : -1;
}

} // namespace coxh
