#include "coxh/weight_system.hpp"

#include <array>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "coxh/error.hpp"

namespace coxh {

namespace {

std::vector<GoldenNumber> multiples_for(const GoldenNumber& l) {
  const mpz_class a = l.rat_part().get_num();
  const mpz_class b = l.tau_part().get_num();
  std::vector<GoldenNumber> out;
  if (b == 0) {
    for (mpz_class j = 1; j <= a; ++j)
      out.emplace_back(mpq_class(j), mpq_class(0));
  } else if (a == 0) {
    for (mpz_class k = 1; k <= b; ++k)
      out.emplace_back(mpq_class(0), mpq_class(k));
  } else {
    // Mixed signs (e.g. tau - 1) use the same rule with gcd(|a|, |b|).
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    GoldenNumber step(mpq_class(a, g), mpq_class(b, g));
    for (mpz_class k = 1; k <= g; ++k)
      out.push_back(GoldenNumber(mpq_class(k), mpq_class(0)) * step);
  }
  return out;
}

std::string multiple_label(const GoldenNumber& m, std::size_t root) {
  std::string s = m.str();
  if (sgn(m.rat_part()) != 0 && sgn(m.tau_part()) != 0)
    s = "(" + s + ")";
  return s + "·α" + std::to_string(root);
}

} // namespace

std::vector<Weight> SubtractionTree::distinct_weights() const {
  std::vector<Weight> out;
  for (const auto& n : nodes)
    if (n.first_visit)
      out.push_back(n.weight);
  return out;
}

std::vector<Weight> SubtractionTree::terminals() const {
  std::unordered_set<Weight, WeightHash> sources;
  for (const auto& e : edges)
    sources.insert(e.from);
  std::vector<Weight> out;
  for (const auto& n : nodes)
    if (n.first_visit && !sources.count(n.weight))
      out.push_back(n.weight);
  return out;
}

std::vector<SubtractionEdge> subtraction_children(const GroupData& g, const Weight& lambda) {
  g.check_member(lambda);
  if (!lambda.is_ztau())
    throw DomainError("root subtraction needs Z[tau] coordinates, got " + lambda.paren_str());
  std::vector<SubtractionEdge> out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (lambda[i].sign() <= 0)
      continue;
    for (auto& m : multiples_for(lambda[i])) {
      Weight to = lambda - m * g.simple_root(i);
      out.push_back({lambda, std::move(to), std::move(m), i + 1});
    }
  }
  return out;
}

namespace {

// Z[tau] weights of rank <= 4 as machine integers: slot 2i is the rational
// part of coordinate i, slot 2i+1 its tau part.
using Packed = std::array<long long, 8>;

struct PackedHash {
  std::size_t operator()(const Packed& p) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (long long v : p) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};

constexpr long long kPackedLimit = 1LL << 60;

long long checked(__int128 v) {
  if (v >= kPackedLimit || v <= -kPackedLimit)
    throw SizeLimitExceeded("subtraction tree coordinates exceed the machine-integer range");
  return static_cast<long long>(v);
}

long long to_ll(const mpq_class& q) {
  if (!mpz_fits_slong_p(q.get_num_mpz_t()))
    throw SizeLimitExceeded("seed coordinate too large");
  return checked(q.get_num().get_si());
}

Packed pack(const Weight& w) {
  Packed p{};
  for (std::size_t i = 0; i < w.rank(); ++i) {
    p[2 * i] = to_ll(w[i].rat_part());
    p[2 * i + 1] = to_ll(w[i].tau_part());
  }
  return p;
}

Weight unpack(GroupType g, const Packed& p) {
  std::vector<GoldenNumber> c;
  for (std::size_t i = 0; i < rank_of(g); ++i)
    c.emplace_back(mpq_class(static_cast<long>(p[2 * i])), mpq_class(static_cast<long>(p[2 * i + 1])));
  return {g, std::move(c)};
}

bool packed_dominant(const Packed& p, std::size_t rank) {
  for (std::size_t i = 0; i < rank; ++i)
    if (golden_sign(p[2 * i], p[2 * i + 1]) < 0)
      return false;
  return true;
}

struct PackedEdge {
  std::size_t from, to;
  long long m_rat, m_tau;
  std::size_t root;
};

// Breadth-first subtraction closure. on_edge sees every edge in discovery
// order; on_arrive every arrival with its first-visit flag.
template <class OnArrive, class OnEdge>
void walk(const GroupData& g, const Weight& seed, const TreeOptions& options, OnArrive on_arrive,
          OnEdge on_edge) {
  const std::size_t n = g.rank();
  std::vector<std::array<long long, 8>> roots(n);
  for (std::size_t i = 0; i < n; ++i)
    roots[i] = pack(g.simple_root(i));

  std::unordered_map<Packed, std::size_t, PackedHash> index;
  std::vector<Packed> order;
  auto arrive = [&](const Packed& w) -> std::size_t {
    auto [it, first] = index.emplace(w, order.size());
    if (first) {
      if (order.size() >= options.max_nodes)
        throw SizeLimitExceeded("subtraction tree exceeds " + std::to_string(options.max_nodes) +
                                " weights");
      order.push_back(w);
    }
    on_arrive(w, it->second, first);
    return it->second;
  };

  arrive(pack(seed));
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const long long a = order[k][2 * i], b = order[k][2 * i + 1];
      if (golden_sign(a, b) <= 0)
        continue;
      // Unit step u = (a + b tau) / count, taken count times.
      long long ua, ub, count;
      if (b == 0) {
        ua = 1, ub = 0, count = a;
      } else if (a == 0) {
        ua = 0, ub = 1, count = b;
      } else {
        count = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
        ua = a / count, ub = b / count;
      }
      for (long long j = 1; j <= count; ++j) {
        const long long ma = ua * j, mb = ub * j;
        Packed to = order[k];
        for (std::size_t c = 0; c < n; ++c) {
          // (ma + mb t)(ra + rb t) = (ma ra + mb rb) + (ma rb + mb ra + mb rb) t
          const __int128 ra = roots[i][2 * c], rb = roots[i][2 * c + 1];
          to[2 * c] = checked(to[2 * c] - (ma * ra + mb * rb));
          to[2 * c + 1] = checked(to[2 * c + 1] - (ma * rb + mb * ra + mb * rb));
        }
        std::size_t from = k;
        std::size_t dest = arrive(to);
        on_edge(PackedEdge{from, dest, ma, mb, i + 1}, order);
      }
    }
  }
}

void validate_seed(const GroupData& g, const Weight& seed) {
  g.check_member(seed);
  if (!seed.is_dominant())
    throw DomainError("seed " + seed.paren_str() + " is not dominant");
  if (seed.is_zero())
    throw DomainError("the zero weight has no subtraction tree");
  if (!seed.is_ztau())
    throw DomainError("seed " + seed.paren_str() + " must have Z[tau] coordinates");
}

} // namespace

SubtractionTree build_tree(const GroupData& g, const Weight& seed, TreeOptions options) {
  validate_seed(g, seed);
  SubtractionTree tree;
  tree.seed = seed;
  std::vector<Weight> weights;
  std::unordered_map<std::size_t, std::size_t> dominant_slot;

  walk(
      g, seed, options,
      [&](const Packed& w, std::size_t id, bool first) {
        if (first)
          weights.push_back(unpack(g.id(), w));
        tree.nodes.push_back({weights[id], first});
        if (packed_dominant(w, g.rank())) {
          auto [it, inserted] = dominant_slot.emplace(id, tree.lower_dominants.size());
          if (inserted)
            tree.lower_dominants.emplace_back(weights[id], 1);
          else
            ++tree.lower_dominants[it->second].second;
        }
      },
      [&](const PackedEdge& e, const std::vector<Packed>&) {
        tree.edges.push_back({weights[e.from], weights[e.to],
                              GoldenNumber(mpq_class(static_cast<long>(e.m_rat)),
                                           mpq_class(static_cast<long>(e.m_tau))),
                              e.root});
      });
  return tree;
}

std::vector<std::pair<Weight, std::uint64_t>> lower_dominants(const GroupData& g, const Weight& seed,
                                                              TreeOptions options) {
  validate_seed(g, seed);
  std::vector<std::pair<Weight, std::uint64_t>> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  walk(
      g, seed, options,
      [&](const Packed& w, std::size_t id, bool) {
        if (!packed_dominant(w, g.rank()))
          return;
        auto [it, inserted] = slot.emplace(id, out.size());
        if (inserted)
          out.emplace_back(unpack(g.id(), w), 1);
        else
          ++out[it->second].second;
      },
      [](const PackedEdge&, const std::vector<Packed>&) {});
  return out;
}

void write_dot(std::ostream& out, const SubtractionTree& tree) {
  std::unordered_map<Weight, std::size_t, WeightHash> id;
  out << "digraph subtraction {\n";
  out << "  node [fontname=\"Helvetica\", shape=plaintext];\n";
  for (const auto& n : tree.nodes) {
    if (!n.first_visit)
      continue;
    std::size_t k = id.size();
    id.emplace(n.weight, k);
    out << "  n" << k << " [label=\"" << n.weight.paren_str() << "\"";
    if (n.weight.is_dominant())
      out << ", shape=box";
    out << "];\n";
  }
  // The first edge into a weight is its tree edge; later ones are revisits.
  std::unordered_set<Weight, WeightHash> reached{tree.seed};
  for (const auto& e : tree.edges) {
    bool revisit = !reached.insert(e.to).second;
    out << "  n" << id.at(e.from) << " -> n" << id.at(e.to) << " [label=\""
        << multiple_label(e.multiple, e.root_index) << "\"";
    if (revisit)
      out << ", color=gray, fontcolor=gray";
    out << "];\n";
  }
  out << "}\n";
}

std::string tree_json(const SubtractionTree& tree) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["group"] = std::string(name_of(tree.seed.group));
  j["seed"] = tree.seed.str();
  std::unordered_map<Weight, std::size_t, WeightHash> id;
  ordered_json nodes = ordered_json::array();
  for (const auto& n : tree.nodes) {
    auto [it, inserted] = id.emplace(n.weight, id.size());
    nodes.push_back({{"id", it->second},
                     {"weight", n.weight.str()},
                     {"first_visit", n.first_visit},
                     {"dominant", n.weight.is_dominant()}});
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : tree.edges)
    edges.push_back({{"from", id.at(e.from)},
                     {"to", id.at(e.to)},
                     {"multiple", e.multiple.str()},
                     {"root", e.root_index}});
  ordered_json dominants = ordered_json::array();
  for (const auto& [w, n] : tree.lower_dominants)
    dominants.push_back({{"weight", w.str()}, {"occurrences", n}});
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  j["lower_dominants"] = std::move(dominants);
  return j.dump(2) + "\n";
}

} // namespace coxh
