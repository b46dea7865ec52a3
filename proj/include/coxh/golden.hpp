#pragma once

// Exact arithmetic in the golden field Q(tau), tau = (1+sqrt 5)/2.
//
// Every element is stored as q + r*tau with q, r arbitrary-precision
// rationals. Since tau^2 = tau + 1 this representation is closed under the
// field operations and unique, so equality is plain componentwise equality.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coxh {

class GoldenNumber {
public:
  GoldenNumber() = default;
  GoldenNumber(long value) : rat_(value) {}  // NOLINT: implicit on purpose
  GoldenNumber(mpq_class rat, mpq_class tau);

  static GoldenNumber tau() { return {mpq_class(0), mpq_class(1)}; }
  // tau' = 1 - tau, the Galois conjugate of tau.
  static GoldenNumber tau_conjugate() { return {mpq_class(1), mpq_class(-1)}; }

  const mpq_class& rat_part() const { return rat_; }
  const mpq_class& tau_part() const { return tau_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(tau_) == 0; }
  bool is_rational() const { return sgn(tau_) == 0; }
  // Both parts integral, i.e. the value lies in Z[tau].
  bool is_ztau() const;

  // -1, 0 or +1; exact, no floating point involved.
  int sign() const;

  // (q + r) - r*tau
  GoldenNumber conjugate() const;
  // x * conjugate(x), always rational.
  mpq_class field_norm() const;
  // Throws DivisionByZero for 0.
  GoldenNumber inverse() const;
  GoldenNumber pow(unsigned exponent) const;

  // Nearest double to q + r*tau.
  double to_double() const;

  // Text grammar: R | R't' | R'+'R't' | R'-'R't', R = INT | INT'/'POSINT.
  std::string str() const;
  static GoldenNumber parse(std::string_view text);

  std::size_t hash() const;

  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);
  GoldenNumber& operator/=(const GoldenNumber& o);

  friend GoldenNumber operator+(GoldenNumber a, const GoldenNumber& b) { return a += b; }
  friend GoldenNumber operator-(GoldenNumber a, const GoldenNumber& b) { return a -= b; }
  friend GoldenNumber operator*(GoldenNumber a, const GoldenNumber& b) { return a *= b; }
  friend GoldenNumber operator/(GoldenNumber a, const GoldenNumber& b) { return a /= b; }
  GoldenNumber operator-() const;

  friend bool operator==(const GoldenNumber& a, const GoldenNumber& b) {
    return a.rat_ == b.rat_ && a.tau_ == b.tau_;
  }
  // Order of the real embedding.
  friend std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b);

private:
  mpq_class rat_{0};
  mpq_class tau_{0};
};

inline std::strong_ordering compare(const GoldenNumber& a, const GoldenNumber& b) {
  return a <=> b;
}

// Sign of a + b*tau for machine integers; used by the streaming product tally.
// Requires |a|, |b| < 2^61.
int golden_sign(long long a, long long b);

std::size_t hash_mpq(const mpq_class& q);

struct GoldenHash {
  std::size_t operator()(const GoldenNumber& x) const { return x.hash(); }
};

// Real-embedded tau as a double.
inline constexpr double kTau = 1.6180339887498948482;

} // namespace coxh
