#include <algorithm>

#include "coxh/error.hpp"
#include "coxh/weight_system.hpp"

namespace coxh {

namespace {

long floor_div(long n, long d) {
  long q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0)))
    --q;
  return q;
}

// q + r tau
GoldenNumber T(long q, long r) { return {mpq_class(q), mpq_class(r)}; }

Weight W(const GoldenNumber& x, const GoldenNumber& y, const GoldenNumber& z) {
  return Weight(GroupType::H3, {x, y, z});
}

// Rows of the closed-form tables, keyed by seed family. [x] is the integer part.
std::vector<Weight> rows(SeedFamily family, long a) {
  const GoldenNumber t = GoldenNumber::tau();
  const bool even = a % 2 == 0;
  const long f = floor_div(a, 2);            // [a/2]
  const long c = floor_div(a + 2, 2);        // [(a+2)/2] = [a/2 + 1]
  const long h = a / 2;                      // a/2, even a only
  std::vector<Weight> out;
  switch (family) {
  case SeedFamily::A00:
    for (long k = 0; k <= f; ++k)
      out.push_back(W(a - 2 * k, k, 0));
    if (even)
      out.push_back(W(0, T(-h, h), 0));
    if (!even && a > 3)
      out.push_back(W(0, T(-c, f), t));
    break;

  case SeedFamily::ZAZ:
    for (long k = 0; k <= f; ++k)
      out.push_back(W(k, a - 2 * k, T(0, k)));
    if (even) {
      out.push_back(W(0, 0, 0));
      out.push_back(W(T(-h, h), 0, h));
      out.push_back(W(a, T(-h, h), 0));
    }
    if (!even && a > 3) {
      out.push_back(W(T(-c, f), T(1, 1), T(f, -1)));
      out.push_back(W(a, T(-c, f), t));
    }
    break;

  case SeedFamily::ZZA:
    for (long k = 0; k <= f; ++k)
      out.push_back(W(0, T(0, k), a - 2 * k));
    if (even) {
      out.push_back(W(0, T(-h, h), 0));
      out.push_back(W(T(0, h), 0, T(-h, h)));
    }
    if (!even && a > 3) {
      out.push_back(W(T(0, f), t, T(-c, f)));
      out.push_back(W(T(1, 1), T(-c, f), 0));
    }
    break;

  case SeedFamily::AA0:
    out.push_back(W(a, a, 0));
    out.push_back(W(0, 0, T(0, a)));
    out.push_back(W(a, T(-a, a), 0));
    if (a > 1)
      for (long k = 1; k <= f; ++k) {
        out.push_back(W(a - 2 * k, a + k, 0));
        out.push_back(W(a + k, a - 2 * k, T(0, k)));
      }
    if (even) {
      out.push_back(W(T(-h, 2 * h), 0, T(2 * h, -h)));
      out.push_back(W(0, T(-h, h), 0));
      out.push_back(W(4 * h, T(-h, h), 0));
      out.push_back(W(0, T(2 * h, -h), h * a));
    }
    if (a > 4)
      out.push_back(W(a, T(-(a + 1), a - 1), T(0, 2)));
    if (!even && a > 3) {
      out.push_back(W(2 * a, T(-c, f), t));
      out.push_back(W(0, T(-c, f), t));
    }
    if (a > 8)
      out.push_back(W(a, T(-(a + 2), a - 2), T(0, 4)));
    break;

  case SeedFamily::A0A:
    out.push_back(W(a, 0, a));
    out.push_back(W(T(0, a), 0, 0));
    if (a > 1) {
      for (long k = 1; k <= f; ++k) {
        out.push_back(W(a - 2 * k, k, a));
        out.push_back(W(a, T(0, k), a - 2 * k));
      }
      for (long k = 0; k <= floor_div(a - 2, 4); ++k)
        out.push_back(W(0, T(-floor_div(a + 2 * k + 2, 2), a - 2 * k - 1), T(2 * k + 1, 2 * k + 1)));
    }
    if (even) {
      out.push_back(W(0, h, 0));
      out.push_back(W(T(2 * h, h), 0, T(-h, h)));
      out.push_back(W(h, 0, T(2 * h, -h)));
      out.push_back(W(T(-h, h), 0, T(-h, 2 * h)));
      for (long k = 0; k <= floor_div(a, 4); ++k)
        out.push_back(W(0, T(-(h + k), a - 2 * k), T(2 * k, 2 * k)));
    }
    if (!even && a > 1)
      out.push_back(W(T(2, 1), T(-1, f), 0));
    if (!even && a > 3) {
      out.push_back(W(T(a, f), t, T(-c, f)));
      out.push_back(W(T(-c, f), T(1, 1), T(-c, a - 1)));
    }
    if (even && a > 4)
      out.push_back(W(T(4, 2), T(-2, h - 1), 0));
    if (!even && a > 5)
      out.push_back(W(T(6, 3), T(-3, floor_div(a - 2, 2)), 0));
    break;

  case SeedFamily::ZAA:
    out.push_back(W(0, a, a));
    out.push_back(W(T(a, a), 0, 0));
    if (a > 1)
      for (long k = 1; k <= f; ++k) {
        out.push_back(W(k, a - 2 * k, T(a, k)));
        out.push_back(W(0, T(a, k), a - 2 * k));
      }
    if (even) {
      out.push_back(W(0, 0, a));
      out.push_back(W(T(-h, 2 * h), 0, T(0, h)));
      out.push_back(W(0, T(-h, h), 0));
      for (long k = 0; k <= floor_div(a, 4); ++k) {
        out.push_back(W(T(h - k, h - k), T(2 * k, 2 * k), T(-floor_div(a + 2 * k, 2), a - 2 * k)));
        out.push_back(W(a, T(-(h + k), a - 2 * k), T(2 * k, 2 * k)));
      }
    }
    if (!even && a > 1)
      for (long k = 0; k <= floor_div(a - 3, 4); ++k) {
        long m = floor_div(a - 2 * k, 2);
        long n = floor_div(a + 2 * k + 2, 2);
        out.push_back(W(T(m, m), T(2 * k + 1, 2 * k + 1), T(-n, a - 2 * k - 1)));
        out.push_back(W(a, T(-n, a - 2 * k - 1), T(2 * k + 1, 2 * k + 1)));
      }
    if (!even && a > 3)
      out.push_back(W(T(-c, a - 1), T(1, 2), T(-1, floor_div(a - 2, 2))));
    break;
  }
  return out;
}

bool contains(const std::vector<Weight>& v, const Weight& w) {
  return std::find(v.begin(), v.end(), w) != v.end();
}

} // namespace

std::string_view family_name(SeedFamily f) {
  switch (f) {
  case SeedFamily::A00: return "(a,0,0)";
  case SeedFamily::ZAZ: return "(0,a,0)";
  case SeedFamily::ZZA: return "(0,0,a)";
  case SeedFamily::AA0: return "(a,a,0)";
  case SeedFamily::A0A: return "(a,0,a)";
  case SeedFamily::ZAA: return "(0,a,a)";
  }
  return "?";
}

std::optional<SeedFamily> parse_family(std::string_view name) {
  for (SeedFamily f : {SeedFamily::A00, SeedFamily::ZAZ, SeedFamily::ZZA, SeedFamily::AA0,
                       SeedFamily::A0A, SeedFamily::ZAA}) {
    std::string_view full = family_name(f);
    if (name == full || name == full.substr(1, full.size() - 2))
      return f;
  }
  return std::nullopt;
}

Weight family_seed(SeedFamily f, int a) {
  switch (f) {
  case SeedFamily::A00: return W(a, 0, 0);
  case SeedFamily::ZAZ: return W(0, a, 0);
  case SeedFamily::ZZA: return W(0, 0, a);
  case SeedFamily::AA0: return W(a, a, 0);
  case SeedFamily::A0A: return W(a, 0, a);
  case SeedFamily::ZAA: return W(0, a, a);
  }
  throw DomainError("unknown seed family");
}

std::vector<Weight> table3_oracle(SeedFamily f, int a) {
  if (a < 1 || a > 9)
    throw DomainError("table rows are defined for 1 <= a <= 9, got " + std::to_string(a));
  std::vector<Weight> out;
  for (auto& w : rows(f, a))
    if (!contains(out, w))
      out.push_back(std::move(w));
  return out;
}

ConformanceRow table3_conformance(SeedFamily f, int a, TreeOptions options) {
  ConformanceRow row{f, a, table3_oracle(f, a), {}, {}, {}};
  try {
    for (const auto& [w, n] : lower_dominants(GroupData::get(GroupType::H3), family_seed(f, a), options))
      row.computed.push_back(w);
  } catch (const SizeLimitExceeded&) {
    row.guard_exceeded = true;
    return row;
  }
  for (const auto& w : row.table)
    if (!contains(row.computed, w))
      row.missing.push_back(w);
  for (const auto& w : row.computed)
    if (!contains(row.table, w))
      row.extra.push_back(w);
  return row;
}

} // namespace coxh
