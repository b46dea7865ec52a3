#pragma once

// Orbit invariants: even-degree indices, product-index identities, anomaly
// numbers along a direction, branching to subgroups and the embedding index.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coxh/orbit.hpp"

namespace coxh {

struct IndexValue {
  GoldenNumber value;
  int degree = 0;
};

// I^{2p}_lambda = |O_lambda| <lambda,lambda>^p.
IndexValue even_index(const GroupData& g, const Weight& lambda, unsigned p);

// Sum of <mu,mu>^p over every point of the multiset.
IndexValue multiset_even_index(const WeightMultiset& m, unsigned p);

// I^2 and I^4 of O_1 (x) ... (x) O_k from the single-orbit indices:
//   I^2 = sum_j I^2_j prod_{i!=j} I^0_i
//   I^4 = sum_j I^4_j prod_{i!=j} I^0_i
//         + 2(r+2)/r sum_{j<l} I^2_j I^2_l prod_{i!=j,l} I^0_i
// with r the rank. p = 0 gives prod I^0_i. Throws DomainError for p > 2.
IndexValue product_even_index(const GroupData& g, std::span<const Weight> lambdas, unsigned p);

// Product of orbits of G_1 x ... x G_k: prod |O_i| * sum_j <lambda_j,lambda_j>^p.
IndexValue direct_product_index(std::span<const std::pair<const GroupData*, Weight>> factors,
                                unsigned p);

struct Direction {
  GroupType group = GroupType::H2;
  Weight v;
};

// Default U(1) directions: H2 -> (-tau, tau), every other group -> omega_1.
Direction default_direction(GroupType g);

// Sum over O_lambda of <mu, v>^degree for odd degree, v not normalized.
IndexValue anomaly(const GroupData& g, const Weight& lambda, const Direction& v, int degree);
// Same sum divided by |v|^degree, in floating point.
double anomaly_normalized(const GroupData& g, const Weight& lambda, const Direction& v, int degree);

struct BranchingRule {
  GroupType parent = GroupType::H3;
  GroupType child = GroupType::H2;
  // child-rank x parent-rank
  GoldenMatrix projection;
};

// H2 -> A1 (tau tau), H3 -> H2 (drop first coordinate),
// H3 -> A2 (drop last coordinate). nullopt for other pairs.
std::optional<BranchingRule> builtin_rule(GroupType parent, GroupType child);

// Project every element of O_lambda and decompose the result into child orbits.
Decomposition branch(const GroupData& g, const BranchingRule& rule, const Weight& lambda);

struct PancakeLayer {
  GoldenNumber height;
  Weight child_dominant;
  std::uint64_t count = 0;
};

// Layers of O_lambda orthogonal to v, each split into child orbits; sorted by
// descending height, then by the child ordering used for decompositions.
std::vector<PancakeLayer> pancake(const GroupData& g, const BranchingRule& rule,
                                  const Weight& lambda, const Direction& v);

// gamma = I^2_lambda(G) / sum over branched child orbits of I^2(G').
GoldenNumber embedding_index(const GroupData& g, const BranchingRule& rule, const Weight& lambda);

// rank G / rank G'.
mpq_class embedding_index_by_rank(GroupType g, std::size_t subgroup_rank);

// Rank of a subgroup written like "A1xA1xA1", "H3xA1", "A4", "D4".
std::size_t parse_subgroup_rank(std::string_view name);

} // namespace coxh
