#pragma once

// Orbits of a finite reflection group, direct sums and products of orbits,
// and decomposition of a union of orbits back into orbits.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxh/group.hpp"

namespace coxh {

struct Orbit {
  GroupType group = GroupType::H2;
  Weight dominant;
  // Breadth-first discovery order from the dominant point.
  std::vector<Weight> elements;

  std::size_t size() const { return elements.size(); }
};

// Closure of {dominant} under the simple reflections. Throws DomainError when
// the seed is not dominant.
Orbit generate_orbit(const GroupData& g, const Weight& dominant);

// Multiset of weights, iterated in first-insertion order.
class WeightMultiset {
public:
  explicit WeightMultiset(GroupType g) : group_(g) {}

  GroupType group() const { return group_; }
  void add(const Weight& w, std::uint64_t count = 1);
  std::uint64_t count(const Weight& w) const;
  std::uint64_t total() const { return total_; }
  std::size_t distinct() const { return entries_.size(); }
  const std::vector<std::pair<Weight, std::uint64_t>>& entries() const { return entries_; }

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b);

private:
  GroupType group_;
  std::vector<std::pair<Weight, std::uint64_t>> entries_;
  std::unordered_map<Weight, std::size_t, WeightHash> index_;
  std::uint64_t total_ = 0;
};

// Dominant weight -> multiplicity, in canonical order: descending norm, then
// ascending lexicographic exact coordinates.
struct Decomposition {
  GroupType group = GroupType::H2;
  std::vector<std::pair<Weight, std::uint64_t>> parts;
  // Number of points of the decomposed multiset.
  std::uint64_t total = 0;

  std::uint64_t multiplicity(const Weight& w) const;
  friend bool operator==(const Decomposition& a, const Decomposition& b) = default;
};

// O_1 (+) ... (+) O_k, count = sum of sizes.
WeightMultiset orbit_sum(std::span<const Orbit> orbits);

// Every sum mu_1 + ... + mu_k in nested-loop order (first orbit outermost).
// Requires k >= 2. Materializes prod |O_i| points; meant for small cases.
std::vector<Weight> product_points(std::span<const Orbit> orbits);
WeightMultiset orbit_product(std::span<const Orbit> orbits);

// Multiplicity of dominant mu = number of occurrences of mu in the multiset.
// Verifies sum m_mu |O_mu| == total and throws DomainError otherwise.
Decomposition decompose(const WeightMultiset& m);

struct ProductOptions {
  // 0 = hardware concurrency.
  unsigned threads = 0;
};

// Streaming decomposition of O_1 (x) ... (x) O_k: sums are formed, tested for
// dominance and only dominant ones are tallied. Products of more than two
// orbits are reduced left to right through intermediate decompositions.
Decomposition decompose_product(std::span<const Orbit> orbits, ProductOptions options = {});

// Canonical ordering used by Decomposition.
void sort_canonical(const GroupData& g, std::vector<std::pair<Weight, std::uint64_t>>& parts);

} // namespace coxh
