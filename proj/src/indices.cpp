#include "coxh/indices.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_map>

#include "coxh/error.hpp"

namespace coxh {

namespace {

void require_dominant(const GroupData& g, const Weight& lambda) {
  g.check_member(lambda);
  if (!lambda.is_dominant())
    throw DomainError("weight " + lambda.paren_str() + " is not dominant");
}

// Gram * v, so that <mu, v> is a plain dot product with mu.
std::vector<GoldenNumber> dual_of(const GroupData& g, const Weight& v) {
  return g.gram().apply(v.coords);
}

GoldenNumber dot(const Weight& mu, const std::vector<GoldenNumber>& dual) {
  GoldenNumber sum;
  for (std::size_t i = 0; i < dual.size(); ++i)
    if (!mu[i].is_zero() && !dual[i].is_zero())
      sum += mu[i] * dual[i];
  return sum;
}

Weight project(const BranchingRule& rule, const Weight& mu) {
  return Weight(rule.child, rule.projection.apply(mu.coords));
}

void check_rule(const GroupData& g, const BranchingRule& rule) {
  if (rule.parent != g.id())
    throw DomainError("branching rule " + std::string(name_of(rule.parent)) + " -> " +
                      std::string(name_of(rule.child)) + " applied to " + std::string(g.name()));
  if (rule.projection.cols() != g.rank() || rule.projection.rows() != rank_of(rule.child))
    throw DomainError("projection matrix has the wrong shape");
}

} // namespace

IndexValue even_index(const GroupData& g, const Weight& lambda, unsigned p) {
  require_dominant(g, lambda);
  GoldenNumber size(static_cast<long>(g.orbit_size(lambda)));
  return {size * g.norm(lambda).pow(p), static_cast<int>(2 * p)};
}

IndexValue multiset_even_index(const WeightMultiset& m, unsigned p) {
  const GroupData& g = GroupData::get(m.group());
  GoldenNumber sum;
  for (const auto& [w, c] : m.entries())
    sum += GoldenNumber(static_cast<long>(c)) * g.norm(w).pow(p);
  return {sum, static_cast<int>(2 * p)};
}

IndexValue product_even_index(const GroupData& g, std::span<const Weight> lambdas, unsigned p) {
  if (p > 2)
    throw DomainError("product index identities are known for degrees 0, 2 and 4 only");
  const std::size_t k = lambdas.size();
  std::vector<GoldenNumber> i0, i2, i4;
  for (const auto& l : lambdas) {
    i0.push_back(even_index(g, l, 0).value);
    i2.push_back(even_index(g, l, 1).value);
    i4.push_back(even_index(g, l, 2).value);
  }
  auto prod_except = [&](std::size_t a, std::size_t b) {
    GoldenNumber prod(1);
    for (std::size_t i = 0; i < k; ++i)
      if (i != a && i != b)
        prod *= i0[i];
    return prod;
  };
  GoldenNumber value;
  if (p == 0) {
    value = prod_except(k, k);
  } else {
    const std::vector<GoldenNumber>& single = p == 1 ? i2 : i4;
    for (std::size_t j = 0; j < k; ++j)
      value += single[j] * prod_except(j, j);
    if (p == 2) {
      const long r = static_cast<long>(g.rank());
      GoldenNumber coeff(mpq_class(2 * (r + 2), r), mpq_class(0));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l)
          value += coeff * i2[j] * i2[l] * prod_except(j, l);
    }
  }
  return {value, static_cast<int>(2 * p)};
}

IndexValue direct_product_index(std::span<const std::pair<const GroupData*, Weight>> factors,
                                unsigned p) {
  GoldenNumber sizes(1), norms;
  for (const auto& [g, lambda] : factors) {
    require_dominant(*g, lambda);
    sizes *= GoldenNumber(static_cast<long>(g->orbit_size(lambda)));
    norms += g->norm(lambda).pow(p);
  }
  return {sizes * norms, static_cast<int>(2 * p)};
}

Direction default_direction(GroupType g) {
  Weight v = Weight::zero(g);
  if (g == GroupType::H2) {
    v[0] = -GoldenNumber::tau();
    v[1] = GoldenNumber::tau();
  } else {
    v[0] = 1;
  }
  return {g, std::move(v)};
}

IndexValue anomaly(const GroupData& g, const Weight& lambda, const Direction& v, int degree) {
  require_dominant(g, lambda);
  g.check_member(v.v);
  if (degree < 1 || degree % 2 == 0)
    throw DomainError("anomaly degree must be odd and positive, got " + std::to_string(degree));
  if (v.v.is_zero())
    throw DomainError("anomaly direction must be nonzero");
  const auto dual = dual_of(g, v.v);
  GoldenNumber sum;
  for (const auto& mu : generate_orbit(g, lambda).elements)
    sum += dot(mu, dual).pow(static_cast<unsigned>(degree));
  return {sum, degree};
}

double anomaly_normalized(const GroupData& g, const Weight& lambda, const Direction& v, int degree) {
  double raw = anomaly(g, lambda, v, degree).value.to_double();
  double length = std::sqrt(g.norm(v.v).to_double());
  return raw / std::pow(length, degree);
}

std::optional<BranchingRule> builtin_rule(GroupType parent, GroupType child) {
  const GoldenNumber t = GoldenNumber::tau();
  if (parent == GroupType::H2 && child == GroupType::A1)
    return BranchingRule{parent, child, GoldenMatrix(1, 2, {t, t})};
  if (parent == GroupType::H3 && child == GroupType::H2)
    return BranchingRule{parent, child, GoldenMatrix(2, 3, {0, 1, 0, 0, 0, 1})};
  if (parent == GroupType::H3 && child == GroupType::A2)
    return BranchingRule{parent, child, GoldenMatrix(2, 3, {1, 0, 0, 0, 1, 0})};
  return std::nullopt;
}

Decomposition branch(const GroupData& g, const BranchingRule& rule, const Weight& lambda) {
  check_rule(g, rule);
  WeightMultiset projected(rule.child);
  for (const auto& mu : generate_orbit(g, lambda).elements)
    projected.add(project(rule, mu));
  return decompose(projected);
}

std::vector<PancakeLayer> pancake(const GroupData& g, const BranchingRule& rule,
                                  const Weight& lambda, const Direction& v) {
  check_rule(g, rule);
  g.check_member(v.v);
  if (v.v.is_zero())
    throw DomainError("pancake direction must be nonzero");
  const auto dual = dual_of(g, v.v);
  std::unordered_map<GoldenNumber, std::size_t, GoldenHash> by_height;
  std::vector<std::pair<GoldenNumber, WeightMultiset>> layers;
  for (const auto& mu : generate_orbit(g, lambda).elements) {
    GoldenNumber h = dot(mu, dual);
    auto [it, inserted] = by_height.emplace(h, layers.size());
    if (inserted)
      layers.emplace_back(h, WeightMultiset(rule.child));
    layers[it->second].second.add(project(rule, mu));
  }
  std::sort(layers.begin(), layers.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  const GroupData& child = GroupData::get(rule.child);
  std::vector<PancakeLayer> out;
  for (const auto& [h, m] : layers)
    for (const auto& [d, mult] : decompose(m).parts)
      out.push_back({h, d, mult * child.orbit_size(d)});
  return out;
}

GoldenNumber embedding_index(const GroupData& g, const BranchingRule& rule, const Weight& lambda) {
  require_dominant(g, lambda);
  if (lambda.is_zero())
    throw DomainError("the embedding index is undefined for the zero orbit");
  const GroupData& child = GroupData::get(rule.child);
  GoldenNumber denominator;
  for (const auto& [mu, mult] : branch(g, rule, lambda).parts)
    denominator += GoldenNumber(static_cast<long>(mult)) * even_index(child, mu, 1).value;
  if (denominator.is_zero())
    throw DivisionByZero();
  return even_index(g, lambda, 1).value / denominator;
}

mpq_class embedding_index_by_rank(GroupType g, std::size_t subgroup_rank) {
  const std::size_t r = rank_of(g);
  if (subgroup_rank < 1 || subgroup_rank > r)
    throw DomainError("subgroup rank " + std::to_string(subgroup_rank) + " is invalid for " +
                      std::string(name_of(g)));
  mpq_class q(static_cast<long>(r), static_cast<long>(subgroup_rank));
  q.canonicalize();
  return q;
}

std::size_t parse_subgroup_rank(std::string_view name) {
  std::size_t total = 0, pos = 0;
  auto fail = [&] { throw ParseError("malformed subgroup name '" + std::string(name) + "'"); };
  while (true) {
    if (pos >= name.size())
      fail();
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[pos])));
    if (letter < 'A' || letter > 'H')
      fail();
    ++pos;
    std::size_t digits = 0, r = 0;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
      r = r * 10 + static_cast<std::size_t>(name[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0 || r == 0)
      fail();
    total += r;
    if (pos == name.size())
      return total;
    if (name[pos] != 'x' && name[pos] != 'X')
      fail();
    ++pos;
  }
}

} // namespace coxh
