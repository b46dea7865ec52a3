#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "doctest.h"
#include "json.hpp"

#include "coxh/error.hpp"
#include "coxh/weight_system.hpp"
#include "support.hpp"

using namespace coxh;
using testing::G;
using testing::W;

namespace {

const GroupData& h2 = GroupData::get(GroupType::H2);
const GroupData& h3 = GroupData::get(GroupType::H3);

std::set<std::string> strs(const std::vector<Weight>& v) {
  std::set<std::string> s;
  for (const auto& w : v) s.insert(w.str());
  return s;
}

std::set<std::string> strs(GroupType g, std::initializer_list<const char*> items) {
  std::set<std::string> s;
  for (const char* x : items) s.insert(W(g, x).str());
  return s;
}

using EdgeKey = std::tuple<std::string, std::string, std::string, std::size_t>;

// Unit step of a subtraction from coordinate l = a + b tau.
GoldenNumber unit_step(const GoldenNumber& l) {
  mpz_class a = l.rat_part().get_num(), b = l.tau_part().get_num();
  if (b == 0) return 1;
  if (a == 0) return GoldenNumber::tau();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l / GoldenNumber(mpq_class(g), mpq_class(0));
}

// An edge lambda -> lambda - k u alpha_i drawn as a chain of k single steps.
std::set<EdgeKey> chain_expanded(const GroupData& g, const SubtractionTree& t) {
  std::set<EdgeKey> out;
  for (const auto& e : t.edges) {
    GoldenNumber u = unit_step(e.from[e.root_index - 1]);
    const Weight& alpha = g.simple_root(e.root_index - 1);
    Weight cur = e.from;
    for (GoldenNumber done = 0; done < e.multiple; done += u) {
      Weight next = cur - u * alpha;
      out.emplace(cur.str(), next.str(), u.str(), e.root_index);
      cur = next;
    }
    REQUIRE(cur == e.to);
  }
  return out;
}

bool in_nonnegative_root_cone(const GroupData& g, const Weight& x) {
  auto c = g.root_coordinates(x);
  return std::all_of(c.begin(), c.end(), [](const GoldenNumber& v) { return v.sign() >= 0; });
}

} // namespace

TEST_CASE("children of a weight") {
  auto kids = subtraction_children(h2, W(GroupType::H2, "1t,1"));
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].to == W(GroupType::H2, "-1t,2+1t"));
  CHECK(kids[0].multiple == GoldenNumber::tau());
  CHECK(kids[0].root_index == 1);
  CHECK(kids[1].to == W(GroupType::H2, "2t,-1"));
  CHECK(kids[1].multiple == 1);
  CHECK(kids[1].root_index == 2);

  kids = subtraction_children(h2, W(GroupType::H2, "-1t,2+1t"));
  REQUIRE(kids.size() == 1);
  CHECK(kids[0].to == W(GroupType::H2, "1+2t,-2-1t"));
  CHECK(kids[0].multiple == G(2, 1));

  CHECK(subtraction_children(h3, W(GroupType::H3, "-1,0,-1t")).empty());
  CHECK(subtraction_children(h3, W(GroupType::H3, "3,0,0")).size() == 3);
  // 2 + 2t: gcd 2, steps (1+t) and (2+2t).
  kids = subtraction_children(h2, W(GroupType::H2, "2+2t,0"));
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].multiple == G(1, 1));
  CHECK(kids[1].multiple == G(2, 2));
}

TEST_CASE("tree below (t,1) in H2") {
  SubtractionTree t = build_tree(h2, W(GroupType::H2, "1t,1"));
  auto nodes = strs(t.distinct_weights());
  auto drawn = strs(GroupType::H2, {"1t,1", "-1t,2+1t", "2t,-1", "1+2t,-2-1t", "-1-2t,2t", "-1t,0",
                                    "1,-2t", "0,1t", "-2t,1+2t", "2+1t,-1-2t", "-2-1t,1t", "-1,-1t"});
  CHECK(drawn.size() == 12);
  CHECK(std::includes(nodes.begin(), nodes.end(), drawn.begin(), drawn.end()));
  // Three further weights: the rest of O_(0,t) reached from (0,t).
  std::set<std::string> extra;
  std::set_difference(nodes.begin(), nodes.end(), drawn.begin(), drawn.end(),
                      std::inserter(extra, extra.end()));
  CHECK(extra == strs(GroupType::H2, {"1+1t,-1t", "-1-1t,1+1t", "1t,-1-1t"}));

  auto chains = chain_expanded(h2, t);
  const std::vector<EdgeKey> drawn_edges{
      {"1t,1", "-1t,2+1t", "1t", 1},        {"-1t,2+1t", "1+2t,-2-1t", "2+1t", 2},
      {"1+2t,-2-1t", "-1-2t,2t", "1+2t", 1}, {"-1-2t,2t", "-1t,0", "1t", 2},
      {"-1t,0", "1,-2t", "1t", 2},           {"1t,1", "2t,-1", "1", 2},
      {"2t,-1", "0,1t", "1t", 1},            {"0,1t", "-2t,1+2t", "1t", 1},
      {"-2t,1+2t", "2+1t,-1-2t", "1+2t", 2}, {"2+1t,-1-2t", "-2-1t,1t", "2+1t", 1},
      {"-2-1t,1t", "-1,-1t", "1t", 2},       {"1,-2t", "-1,-1t", "1", 1}};
  for (const auto& e : drawn_edges) {
    CAPTURE(std::get<0>(e));
    CAPTURE(std::get<1>(e));
    CHECK(chains.count(e) == 1);
  }

  std::vector<std::string> dom;
  for (const auto& [w, n] : t.lower_dominants) dom.push_back(w.str());
  CHECK(dom == std::vector<std::string>{"1t,1", "0,1t"});
  CHECK(strs(t.terminals()) == strs(GroupType::H2, {"-1,-1t", "-1t,0"}));
}

TEST_CASE("trees of the icosahedron and dodecahedron") {
  SubtractionTree t = build_tree(h3, W(GroupType::H3, "1,0,0"));
  auto drawn = strs(GroupType::H3, {"1,0,0", "-1,1,0", "0,-1,1t", "0,1t,-1t", "1t,-1t,1", "-1t,0,1",
                                    "1t,0,-1", "-1t,1t,-1", "0,-1t,1t", "0,1,-1t", "1,-1,0", "-1,0,0"});
  CHECK(strs(t.distinct_weights()) == drawn);
  CHECK(strs(t.terminals()) == strs(GroupType::H3, {"-1,0,0"}));
  CHECK(t.lower_dominants.size() == 1);
  CHECK(t.edges.size() == 12);
  CHECK(strs(t.distinct_weights()) == strs(generate_orbit(h3, t.seed).elements));

  t = build_tree(h3, W(GroupType::H3, "0,0,1"));
  // The drawn tree labels the alpha_1 child of (1,-1-t,1+t) as (-1,t,-1-t);
  // subtracting alpha_1 gives (-1,-t,1+t).
  auto drawn2 = strs(GroupType::H3,
                     {"0,0,1", "0,1t,-1", "1t,-1t,1t", "-1t,0,1t", "1t,1,-1t", "1+1t,-1,0", "-1-1t,1t,0",
                      "-1t,1+1t,-1t", "1,-1-1t,1+1t", "-1,-1t,1+1t", "1,1t,-1-1t", "1+1t,-1t,0",
                      "-1-1t,1,0", "-1t,-1,1t", "-1,1+1t,-1-1t", "1t,-1-1t,1t", "1t,0,-1t", "-1t,1t,-1t",
                      "0,-1t,1", "0,0,-1"});
  CHECK(drawn2.size() == 20);
  CHECK(strs(t.distinct_weights()) == drawn2);
  CHECK(h3.reflect(0, W(GroupType::H3, "1,-1-1t,1+1t")) == W(GroupType::H3, "-1,-1t,1+1t"));
  CHECK(strs(t.terminals()) == strs(GroupType::H3, {"0,0,-1"}));
  CHECK(t.edges.size() == 24);
}

TEST_CASE("lower orbits of (2,0,0)") {
  SubtractionTree t = build_tree(h3, W(GroupType::H3, "2,0,0"));
  std::vector<Weight> dom;
  for (const auto& [w, n] : t.lower_dominants) dom.push_back(w);
  CHECK(strs(dom) == strs(GroupType::H3, {"2,0,0", "0,1,0", "0,-1+1t,0", "0,0,0"}));
  CHECK(t.distinct_weights().size() == 73);
  // The drawn path, with 2 alpha_1 and 2 alpha_2 shown as two single steps.
  auto chains = chain_expanded(h3, t);
  const std::vector<EdgeKey> path{{"2,0,0", "0,1,0", "1", 1},
                                  {"0,1,0", "-2,2,0", "1", 1},
                                  {"-2,2,0", "-1,0,1t", "1", 2},
                                  {"-1,0,1t", "0,-2,2t", "1", 2},
                                  {"0,-2,2t", "0,-1+1t,0", "1t", 3}};
  for (const auto& e : path) CHECK(chains.count(e) == 1);
}

TEST_CASE("tree invariants") {
  testing::Rng rng(66);
  for (int k = 0; k < 12; ++k) {
    Weight seed = rng.dominant(GroupType::H3, 2);
    if (seed.is_zero()) continue;
    SubtractionTree t = build_tree(h3, seed);
    GoldenNumber n = h3.norm(seed);
    for (const auto& [mu, arrivals] : t.lower_dominants) {
      REQUIRE(arrivals >= 1);
      REQUIRE(h3.norm(mu) <= n);
      REQUIRE(in_nonnegative_root_cone(h3, seed - mu));
    }
    for (const auto& w : t.terminals())
      for (const auto& c : w.coords) REQUIRE(c.sign() <= 0);
    REQUIRE(std::count_if(t.nodes.begin(), t.nodes.end(), [](const SubtractionNode& x) { return x.first_visit; }) ==
            static_cast<long>(t.distinct_weights().size()));
    REQUIRE(t.nodes.size() == t.edges.size() + 1);
    // Lowest weight of a centrally symmetric orbit.
    auto term = strs(t.terminals());
    REQUIRE(term.count((-seed).str()) == 1);
  }
}

TEST_CASE("seed validation and size guard") {
  CHECK_THROWS_AS(build_tree(h3, W(GroupType::H3, "-1,1,0")), DomainError);
  CHECK_THROWS_AS(build_tree(h3, Weight::zero(GroupType::H3)), DomainError);
  CHECK_THROWS_AS(build_tree(h3, W(GroupType::H3, "1/2,0,0")), DomainError);
  CHECK_THROWS_AS(build_tree(h3, W(GroupType::H3, "3,1,0"), TreeOptions{100}), SizeLimitExceeded);
}

TEST_CASE("DOT and JSON output") {
  SubtractionTree t = build_tree(h2, W(GroupType::H2, "1t,1"));
  std::ostringstream dot;
  write_dot(dot, t);
  std::string s = dot.str();
  CHECK(s.rfind("digraph", 0) == 0);
  CHECK(s.find("1t\xC2\xB7\xCE\xB1" "1") != std::string::npos);
  CHECK(s.find("(2+1t)") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') > 15);

  auto j = nlohmann::json::parse(tree_json(t));
  CHECK(j["group"] == "H2");
  CHECK(j["seed"] == "1t,1");
  CHECK(j["nodes"].size() == t.nodes.size());
  CHECK(j["edges"].size() == t.edges.size());
  CHECK(j["lower_dominants"][1]["weight"] == "0,1t");
  CHECK(tree_json(t) == tree_json(build_tree(h2, W(GroupType::H2, "1t,1"))));
}

TEST_CASE("closed-form lower orbit tables") {
  CHECK(strs(table3_oracle(SeedFamily::A00, 4)) ==
        strs(GroupType::H3, {"4,0,0", "2,1,0", "0,2,0", "0,-2+2t,0"}));
  CHECK(strs(table3_oracle(SeedFamily::A00, 1)) == strs(GroupType::H3, {"1,0,0"}));
  CHECK(strs(table3_oracle(SeedFamily::ZZA, 2)) ==
        strs(GroupType::H3, {"0,0,2", "0,1t,0", "0,-1+1t,0", "1t,0,-1+1t"}));
  CHECK(family_seed(SeedFamily::ZAA, 3) == W(GroupType::H3, "0,3,3"));
  CHECK(parse_family("a,0,a") == SeedFamily::A0A);
  CHECK_FALSE(parse_family("a,a,a"));
  CHECK_THROWS_AS(table3_oracle(SeedFamily::A00, 10), DomainError);

  // The closed forms leave out the zero weight for this family.
  ConformanceRow r = table3_conformance(SeedFamily::A00, 2);
  CHECK(r.table_contained());
  CHECK(strs(r.extra) == strs(GroupType::H3, {"0,0,0"}));
  CHECK(strs(r.computed) == strs(GroupType::H3, {"2,0,0", "0,1,0", "0,-1+1t,0", "0,0,0"}));
  CHECK_FALSE(r.guard_exceeded);

  ConformanceRow g = table3_conformance(SeedFamily::A00, 4, TreeOptions{50});
  CHECK(g.guard_exceeded);
  CHECK_FALSE(g.table_contained());
  CHECK_FALSE(g.exact());
}

TEST_CASE("lower dominants without the tree") {
  testing::Rng rng(31);
  for (GroupType gt : {GroupType::H2, GroupType::H3}) {
    const auto& g = GroupData::get(gt);
    for (int k = 0; k < 15; ++k) {
      Weight seed = rng.dominant(gt, 3, false);
      CAPTURE(seed.str());
      CHECK(lower_dominants(g, seed) == build_tree(g, seed).lower_dominants);
    }
  }
  CHECK(lower_dominants(h3, W(GroupType::H3, "1t,0,0")) == build_tree(h3, W(GroupType::H3, "1t,0,0")).lower_dominants);
  CHECK_THROWS_AS(lower_dominants(h3, W(GroupType::H3, "3,1,0"), TreeOptions{100}), SizeLimitExceeded);
  CHECK_THROWS_AS(lower_dominants(h3, W(GroupType::H3, "0,-1,0")), DomainError);
}
