#include "coxh/orbit.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <thread>

#include "coxh/error.hpp"

namespace coxh {

namespace {

void check_same_group(std::span<const Orbit> orbits) {
  for (const auto& o : orbits)
    if (o.group != orbits.front().group)
      throw DomainError("group mismatch: orbits of " + std::string(name_of(orbits.front().group)) +
                        " and " + std::string(name_of(o.group)));
}

// Orbit coordinates scaled by a common denominator into machine integers.
// Each coordinate q + r tau becomes the pair (q*D, r*D).
struct ScaledOrbits {
  mpz_class denominator = 1;
  std::vector<std::vector<long long>> points;  // per orbit: size * rank * 2
};

constexpr std::size_t kMaxRank = 4;
using ScaledKey = std::array<long long, 2 * kMaxRank>;

struct ScaledKeyHash {
  std::size_t operator()(const ScaledKey& k) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (long long v : k) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }
};

using ScaledTally = std::unordered_map<ScaledKey, std::uint64_t, ScaledKeyHash>;

std::optional<ScaledOrbits> scale_orbits(const Orbit& a, const Orbit& b) {
  ScaledOrbits out;
  for (const Orbit* o : {&a, &b})
    for (const auto& w : o->elements)
      for (const auto& c : w.coords) {
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
                c.rat_part().get_den_mpz_t());
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
                c.tau_part().get_den_mpz_t());
      }
  // Sums of two points must stay below 2^61 for golden_sign.
  const mpz_class limit = mpz_class(1) << 59;
  for (const Orbit* o : {&a, &b}) {
    std::vector<long long> flat;
    flat.reserve(o->size() * o->dominant.rank() * 2);
    for (const auto& w : o->elements)
      for (const auto& c : w.coords) {
        for (const mpq_class* part : {&c.rat_part(), &c.tau_part()}) {
          mpz_class v = part->get_num() * (out.denominator / part->get_den());
          if (abs(v) >= limit)
            return std::nullopt;
          flat.push_back(v.get_si());
        }
      }
    out.points.push_back(std::move(flat));
  }
  return out;
}

void tally_rows(const std::vector<long long>& outer, const std::vector<long long>& inner,
                std::size_t rank, std::size_t begin, std::size_t end, ScaledTally& tally) {
  const std::size_t stride = 2 * rank;
  const std::size_t n_inner = inner.size() / stride;
  ScaledKey key{};
  for (std::size_t i = begin; i < end; ++i) {
    const long long* p = outer.data() + i * stride;
    for (std::size_t j = 0; j < n_inner; ++j) {
      const long long* q = inner.data() + j * stride;
      bool dominant = true;
      for (std::size_t c = 0; c < rank; ++c) {
        long long a = p[2 * c] + q[2 * c];
        long long b = p[2 * c + 1] + q[2 * c + 1];
        if (golden_sign(a, b) < 0) {
          dominant = false;
          break;
        }
        key[2 * c] = a;
        key[2 * c + 1] = b;
      }
      if (dominant)
        ++tally[key];
    }
  }
}

Decomposition finish(const GroupData& g, std::vector<std::pair<Weight, std::uint64_t>> parts,
                     std::uint64_t total) {
  std::uint64_t covered = 0;
  for (const auto& [w, m] : parts)
    covered += m * g.orbit_size(w);
  if (covered != total)
    throw DomainError("multiset is not a union of whole orbits: dominant points account for " +
                      std::to_string(covered) + " of " + std::to_string(total) + " points");
  sort_canonical(g, parts);
  return Decomposition{g.id(), std::move(parts), total};
}

Decomposition decompose_pair_scaled(const GroupData& g, const Orbit& a, const Orbit& b,
                                    const ScaledOrbits& scaled, unsigned threads) {
  const std::size_t rank = g.rank();
  const std::size_t n_outer = a.size();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n_outer)));
  std::vector<ScaledTally> tallies(threads);
  if (threads == 1) {
    tally_rows(scaled.points[0], scaled.points[1], rank, 0, n_outer, tallies[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = n_outer * t / threads, end = n_outer * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] {
        tally_rows(scaled.points[0], scaled.points[1], rank, begin, end, tallies[t]);
      });
    }
    for (auto& w : workers)
      w.join();
  }
  for (unsigned t = 1; t < threads; ++t)
    for (const auto& [k, c] : tallies[t])
      tallies[0][k] += c;

  std::vector<std::pair<Weight, std::uint64_t>> parts;
  parts.reserve(tallies[0].size());
  for (const auto& [k, c] : tallies[0]) {
    std::vector<GoldenNumber> coords;
    for (std::size_t i = 0; i < rank; ++i)
      coords.emplace_back(mpq_class(mpz_class(static_cast<long>(k[2 * i])), scaled.denominator),
                          mpq_class(mpz_class(static_cast<long>(k[2 * i + 1])), scaled.denominator));
    parts.emplace_back(Weight(g.id(), std::move(coords)), c);
  }
  return finish(g, std::move(parts), static_cast<std::uint64_t>(a.size()) * b.size());
}

Decomposition decompose_pair_exact(const GroupData& g, const Orbit& a, const Orbit& b) {
  std::unordered_map<Weight, std::uint64_t, WeightHash> tally;
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) {
      Weight s = x + y;
      if (s.is_dominant())
        ++tally[s];
    }
  std::vector<std::pair<Weight, std::uint64_t>> parts(tally.begin(), tally.end());
  return finish(g, std::move(parts), static_cast<std::uint64_t>(a.size()) * b.size());
}

Decomposition decompose_pair(const GroupData& g, const Orbit& a, const Orbit& b, unsigned threads) {
  if (auto scaled = scale_orbits(a, b))
    return decompose_pair_scaled(g, a, b, *scaled, threads);
  return decompose_pair_exact(g, a, b);
}

} // namespace

Orbit generate_orbit(const GroupData& g, const Weight& dominant) {
  g.check_member(dominant);
  if (!dominant.is_dominant())
    throw DomainError("orbit seed " + dominant.paren_str() + " is not dominant");
  Orbit orbit{g.id(), dominant, {dominant}};
  std::unordered_map<Weight, std::size_t, WeightHash> seen;
  seen.emplace(dominant, 0);
  for (std::size_t k = 0; k < orbit.elements.size(); ++k) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (orbit.elements[k][i].is_zero())
        continue;
      Weight next = g.reflect(i, orbit.elements[k]);
      if (seen.emplace(next, orbit.elements.size()).second)
        orbit.elements.push_back(std::move(next));
    }
  }
  return orbit;
}

void WeightMultiset::add(const Weight& w, std::uint64_t count) {
  if (w.group != group_)
    throw DomainError("group mismatch in multiset");
  if (count == 0)
    return;
  auto [it, inserted] = index_.emplace(w, entries_.size());
  if (inserted)
    entries_.emplace_back(w, count);
  else
    entries_[it->second].second += count;
  total_ += count;
}

std::uint64_t WeightMultiset::count(const Weight& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? 0 : entries_[it->second].second;
}

bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.group_ != b.group_ || a.total_ != b.total_ || a.entries_.size() != b.entries_.size())
    return false;
  return std::all_of(a.entries_.begin(), a.entries_.end(),
                     [&](const auto& e) { return b.count(e.first) == e.second; });
}

std::uint64_t Decomposition::multiplicity(const Weight& w) const {
  for (const auto& [d, m] : parts)
    if (d == w)
      return m;
  return 0;
}

WeightMultiset orbit_sum(std::span<const Orbit> orbits) {
  if (orbits.empty())
    throw DomainError("orbit sum of no orbits");
  check_same_group(orbits);
  WeightMultiset m(orbits.front().group);
  for (const auto& o : orbits)
    for (const auto& w : o.elements)
      m.add(w);
  return m;
}

std::vector<Weight> product_points(std::span<const Orbit> orbits) {
  if (orbits.size() < 2)
    throw DomainError("an orbit product needs at least two orbits");
  check_same_group(orbits);
  std::vector<Weight> current = orbits.front().elements;
  for (std::size_t k = 1; k < orbits.size(); ++k) {
    std::vector<Weight> next;
    next.reserve(current.size() * orbits[k].size());
    for (const auto& x : current)
      for (const auto& y : orbits[k].elements)
        next.push_back(x + y);
    current = std::move(next);
  }
  return current;
}

WeightMultiset orbit_product(std::span<const Orbit> orbits) {
  WeightMultiset m(orbits.empty() ? GroupType::H2 : orbits.front().group);
  for (const auto& w : product_points(orbits))
    m.add(w);
  return m;
}

Decomposition decompose(const WeightMultiset& m) {
  const GroupData& g = GroupData::get(m.group());
  std::vector<std::pair<Weight, std::uint64_t>> parts;
  for (const auto& [w, c] : m.entries())
    if (w.is_dominant())
      parts.emplace_back(w, c);
  return finish(g, std::move(parts), m.total());
}

Decomposition decompose_product(std::span<const Orbit> orbits, ProductOptions options) {
  if (orbits.size() < 2)
    throw DomainError("an orbit product needs at least two orbits");
  check_same_group(orbits);
  const GroupData& g = GroupData::get(orbits.front().group);
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());

  Decomposition acc = decompose_pair(g, orbits[0], orbits[1], threads);
  for (std::size_t k = 2; k < orbits.size(); ++k) {
    std::unordered_map<Weight, std::uint64_t, WeightHash> tally;
    for (const auto& [mu, mult] : acc.parts) {
      Decomposition step = decompose_pair(g, generate_orbit(g, mu), orbits[k], threads);
      for (const auto& [nu, c] : step.parts)
        tally[nu] += mult * c;
    }
    std::vector<std::pair<Weight, std::uint64_t>> parts(tally.begin(), tally.end());
    acc = finish(g, std::move(parts), acc.total * orbits[k].size());
  }
  return acc;
}

void sort_canonical(const GroupData& g, std::vector<std::pair<Weight, std::uint64_t>>& parts) {
  std::vector<std::pair<GoldenNumber, std::size_t>> keyed;
  keyed.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    keyed.emplace_back(g.norm(parts[i].first), i);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    auto c = x.first <=> y.first;
    if (c != 0)
      return c > 0;
    return lex_less(parts[x.second].first, parts[y.second].first);
  });
  std::vector<std::pair<Weight, std::uint64_t>> sorted;
  sorted.reserve(parts.size());
  for (const auto& [n, i] : keyed)
    sorted.push_back(std::move(parts[i]));
  parts = std::move(sorted);
}

} // namespace coxh
