#pragma once

// Shared helpers for the test programs: literals, seeded random weights and
// reference computations written independently of the library internals.

#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxh/group.hpp"

namespace testing {

using coxh::GoldenNumber;
using coxh::GroupType;
using coxh::Weight;

inline mpq_class rat(long num, long den = 1) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}
inline GoldenNumber G(long q, long r) { return {rat(q), rat(r)}; }
inline GoldenNumber Q(long num, long den, long tnum = 0, long tden = 1) {
  return {rat(num, den), rat(tnum, tden)};
}
inline Weight W(GroupType g, const std::string& text) { return coxh::parse_weight(g, text); }

// Cartan matrices typed out by hand, (q, r) pairs for q + r tau.
inline std::vector<std::vector<GoldenNumber>> cartan_literal(GroupType g) {
  const GoldenNumber mt = G(0, -1);
  switch (g) {
    case GroupType::A1: return {{2}};
    case GroupType::A2: return {{2, -1}, {-1, 2}};
    case GroupType::H2: return {{2, mt}, {mt, 2}};
    case GroupType::H3: return {{2, -1, 0}, {-1, 2, mt}, {0, mt, 2}};
    case GroupType::H4:
      return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, mt}, {0, 0, mt, 2}};
  }
  return {};
}

// Closed quadratic forms <x,x> with the denominators written out.
inline GoldenNumber quadratic_form(GroupType g, const Weight& x) {
  const GoldenNumber t = GoldenNumber::tau();
  if (g == GroupType::H2) {
    const auto &a = x[0], &b = x[1];
    return GoldenNumber(2) * (a * a + t * a * b + b * b) / (GoldenNumber(3) - t);
  }
  if (g == GroupType::H3) {
    const auto &a = x[0], &b = x[1], &c = x[2];
    GoldenNumber s = (GoldenNumber(3) - t) * a * a + GoldenNumber(4) * b * b +
                     GoldenNumber(3) * c * c + GoldenNumber(4) * a * b +
                     GoldenNumber(2) * t * a * c + GoldenNumber(4) * t * b * c;
    return s / (GoldenNumber(4) - GoldenNumber(2) * t);
  }
  const auto &a = x[0], &b = x[1], &c = x[2], &d = x[3];
  GoldenNumber s = (GoldenNumber(2) - t) * a * a + (GoldenNumber(3) - t) * b * b +
                   GoldenNumber(3) * c * c + GoldenNumber(2) * d * d +
                   (GoldenNumber(3) - t) * a * b + GoldenNumber(2) * a * c + t * a * d +
                   GoldenNumber(4) * b * c + GoldenNumber(2) * t * b * d +
                   GoldenNumber(3) * t * c * d;
  return GoldenNumber(2) * s / (GoldenNumber(5) - GoldenNumber(3) * t);
}

// Orbit by breadth-first search with reflections built from the literal
// Cartan matrix.
inline std::vector<Weight> reference_orbit(GroupType g, const Weight& seed) {
  auto c = cartan_literal(g);
  std::vector<Weight> out{seed};
  std::unordered_set<Weight, coxh::WeightHash> seen{seed};
  std::deque<Weight> queue{seed};
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (x[i].is_zero()) continue;
      Weight y = x;
      for (std::size_t j = 0; j < c.size(); ++j) y[j] -= x[i] * c[i][j];
      if (seen.insert(y).second) {
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  // a + b tau with a, b >= 0 not both zero.
  GoldenNumber positive_ztau(long max) {
    for (;;) {
      long a = integer(0, max), b = integer(0, max);
      if (a || b) return G(a, b);
    }
  }
  GoldenNumber ztau(long max) { return G(integer(-max, max), integer(-max, max)); }
  GoldenNumber rational_golden(long max) {
    return {rat(integer(-max, max), integer(1, max)), rat(integer(-max, max), integer(1, max))};
  }
  Weight dominant(GroupType g, long max, bool allow_zero_coords = true) {
    std::vector<GoldenNumber> c;
    for (std::size_t i = 0; i < coxh::rank_of(g); ++i)
      c.push_back(allow_zero_coords && integer(0, 3) == 0 ? GoldenNumber(0) : positive_ztau(max));
    return {g, c};
  }
  Weight any(GroupType g, long max) {
    std::vector<GoldenNumber> c;
    for (std::size_t i = 0; i < coxh::rank_of(g); ++i) c.push_back(ztau(max));
    return {g, c};
  }
};

} // namespace testing
