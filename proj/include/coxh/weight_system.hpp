#pragma once

// Weight systems below a seed point by repeated subtraction of simple roots.
//
// From a weight lambda every coordinate l_i = a_i + b_i tau that is positive
// spawns subtractions lambda - m alpha_i:
//   b_i = 0            m = j,            j = 1..a_i
//   a_i = 0            m = k tau,        k = 1..b_i
//   otherwise          m = k l_i / g,    k = 1..g,  g = gcd(|a_i|, |b_i|)
// Children are generated once per distinct weight; later arrivals at a known
// weight are recorded as revisits. A weight without positive coordinates is
// terminal.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coxh/orbit.hpp"

namespace coxh {

struct SubtractionNode {
  Weight weight;
  bool first_visit = true;
};

struct SubtractionEdge {
  Weight from;
  Weight to;
  GoldenNumber multiple;
  std::size_t root_index = 0;  // 1-based
};

struct SubtractionTree {
  Weight seed;
  // Arrival order; a weight appears once with first_visit and then once per revisit.
  std::vector<SubtractionNode> nodes;
  std::vector<SubtractionEdge> edges;
  // Dominant weights in discovery order with their number of arrivals.
  std::vector<std::pair<Weight, std::uint64_t>> lower_dominants;

  std::vector<Weight> distinct_weights() const;
  // Weights without outgoing edges.
  std::vector<Weight> terminals() const;
};

struct TreeOptions {
  std::size_t max_nodes = 1'000'000;
};

std::vector<SubtractionEdge> subtraction_children(const GroupData& g, const Weight& lambda);

// Throws DomainError for a non-dominant, zero or non-Z[tau] seed and
// SizeLimitExceeded when more than max_nodes distinct weights appear.
SubtractionTree build_tree(const GroupData& g, const Weight& seed, TreeOptions options = {});

// lower_dominants of build_tree without materializing nodes and edges.
std::vector<std::pair<Weight, std::uint64_t>> lower_dominants(const GroupData& g, const Weight& seed,
                                                              TreeOptions options = {});

void write_dot(std::ostream& out, const SubtractionTree& tree);
std::string tree_json(const SubtractionTree& tree);

// Closed-form lower-orbit tables for H3 seeds (a,0,0), (0,a,0), (0,0,a),
// (a,a,0), (a,0,a), (0,a,a), 1 <= a <= 9.
enum class SeedFamily { A00, ZAZ, ZZA, AA0, A0A, ZAA };

std::string_view family_name(SeedFamily f);
std::optional<SeedFamily> parse_family(std::string_view name);
Weight family_seed(SeedFamily f, int a);
std::vector<Weight> table3_oracle(SeedFamily f, int a);

struct ConformanceRow {
  SeedFamily family;
  int a = 0;
  std::vector<Weight> table;       // from the closed forms
  std::vector<Weight> computed;    // lower dominants of build_tree
  std::vector<Weight> missing;     // in table, not computed
  std::vector<Weight> extra;       // computed, not in table
  // The subtraction closure hit the size guard; nothing was compared.
  bool guard_exceeded = false;
  bool table_contained() const { return !guard_exceeded && missing.empty(); }
  bool exact() const { return table_contained() && extra.empty(); }
};

ConformanceRow table3_conformance(SeedFamily f, int a, TreeOptions options = {});

} // namespace coxh
