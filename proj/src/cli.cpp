#include "coxh/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxh/error.hpp"
#include "coxh/geometry.hpp"
#include "coxh/indices.hpp"
#include "coxh/orbit.hpp"
#include "coxh/weight_system.hpp"

namespace coxh {

namespace {

// Exact value first, float approximation in parentheses.
std::string exact_and_float(const GoldenNumber& x) {
  return x.str() + " (" + format_real(x.to_double()) + ")";
}

std::string float_tuple(const Weight& w) {
  std::string s = "(";
  auto d = w.to_doubles();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i)
      s += ", ";
    s += format_real(d[i]);
  }
  return s + ")";
}

Weight dominant_arg(const GroupData& g, const std::string& text) {
  Weight w = parse_weight(g.id(), text);
  if (!w.is_dominant())
    throw DomainError(w.paren_str() + " is not dominant in " + std::string(g.name()));
  return w;
}

GoldenMatrix parse_projection(const std::string& text, std::size_t rows, std::size_t cols) {
  std::vector<GoldenNumber> data;
  std::stringstream rows_in(text);
  std::string row;
  std::size_t n_rows = 0;
  while (std::getline(rows_in, row, ';')) {
    std::stringstream cells(row);
    std::string cell;
    std::size_t n_cols = 0;
    while (std::getline(cells, cell, ',')) {
      data.push_back(GoldenNumber::parse(cell));
      ++n_cols;
    }
    if (n_cols != cols)
      throw ParseError("projection row '" + row + "' needs " + std::to_string(cols) + " entries");
    ++n_rows;
  }
  if (n_rows != rows)
    throw ParseError("projection needs " + std::to_string(rows) + " rows separated by ';'");
  return GoldenMatrix(rows, cols, std::move(data));
}

void print_decomposition(std::ostream& out, const Decomposition& d) {
  for (const auto& [w, m] : d.parts)
    out << w.str() << " x" << m << "\n";
}

struct Options {
  std::string group, subgroup, coords, format = "text", direction, orbit, dot, json, out,
      projection;
  std::vector<std::string> factors;
  int degree = -1;
  bool decompose = false;
  bool nested_flag = false;
};

int cmd_orbit(const Options& o, std::ostream& out) {
  const GroupData& g = GroupData::get(parse_group(o.group));
  Orbit orbit = generate_orbit(g, dominant_arg(g, o.coords));
  GoldenNumber norm = g.norm(orbit.dominant);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = std::string(g.name());
    j["dominant"] = orbit.dominant.str();
    j["size"] = orbit.size();
    j["norm"] = {{"exact", norm.str()}, {"approx", std::strtod(format_real(norm.to_double()).c_str(), nullptr)}};
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& w : orbit.elements) {
      nlohmann::ordered_json approx = nlohmann::ordered_json::array();
      for (double x : w.to_doubles())
        approx.push_back(std::strtod(format_real(x).c_str(), nullptr));
      points.push_back({{"omega", w.str()}, {"approx", std::move(approx)}});
    }
    j["points"] = std::move(points);
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    for (std::size_t i = 0; i < g.rank(); ++i)
      out << (i ? "," : "") << "x" << i + 1;
    for (std::size_t i = 0; i < g.rank(); ++i)
      out << ",approx" << i + 1;
    out << "\n";
    for (const auto& w : orbit.elements) {
      out << w.str();
      for (double x : w.to_doubles())
        out << "," << format_real(x);
      out << "\n";
    }
  } else {
    out << "# " << g.name() << " orbit of " << orbit.dominant.paren_str() << ": " << orbit.size()
        << " points, norm " << exact_and_float(norm) << "\n";
    for (const auto& w : orbit.elements)
      out << w.str() << " " << float_tuple(w) << "\n";
  }
  return kExitOk;
}

int cmd_index(const Options& o, std::ostream& out) {
  if (o.degree < 0 || o.degree % 2 != 0)
    throw CLI::ValidationError("--degree", "index degree must be an even number >= 0");
  const GroupData& g = GroupData::get(parse_group(o.group));
  IndexValue v = even_index(g, dominant_arg(g, o.coords), static_cast<unsigned>(o.degree / 2));
  out << exact_and_float(v.value) << "\n";
  return kExitOk;
}

int cmd_product(const Options& o, std::ostream& out) {
  const GroupData& g = GroupData::get(parse_group(o.group));
  if (o.factors.size() < 2)
    throw CLI::ValidationError("product", "needs at least two coordinate lists");
  std::vector<Orbit> orbits;
  for (const auto& f : o.factors)
    orbits.push_back(generate_orbit(g, dominant_arg(g, f)));
  if (o.decompose) {
    print_decomposition(out, decompose_product(orbits));
  } else {
    for (const auto& w : product_points(orbits))
      out << w.str() << "\n";
  }
  return kExitOk;
}

int cmd_anomaly(const Options& o, std::ostream& out) {
  if (o.degree < 1 || o.degree % 2 == 0)
    throw CLI::ValidationError("--degree", "anomaly degree must be an odd positive number");
  const GroupData& g = GroupData::get(parse_group(o.group));
  Direction v = default_direction(g.id());
  if (!o.direction.empty())
    v.v = parse_weight(g.id(), o.direction);
  out << exact_and_float(anomaly(g, dominant_arg(g, o.coords), v, o.degree).value) << "\n";
  return kExitOk;
}

BranchingRule rule_for(const GroupData& g, const Options& o) {
  GroupType child = parse_group(o.subgroup);
  if (!o.projection.empty())
    return {g.id(), child, parse_projection(o.projection, rank_of(child), g.rank())};
  auto rule = builtin_rule(g.id(), child);
  if (!rule)
    throw DomainError("no built-in branching rule " + std::string(g.name()) + " -> " +
                      std::string(name_of(child)) + " (use --projection)");
  return *rule;
}

int cmd_branch(const Options& o, std::ostream& out) {
  const GroupData& g = GroupData::get(parse_group(o.group));
  BranchingRule rule = rule_for(g, o);
  Weight lambda = dominant_arg(g, o.coords);
  if (o.direction.empty()) {
    print_decomposition(out, branch(g, rule, lambda));
  } else {
    Direction v{g.id(), parse_weight(g.id(), o.direction)};
    for (const auto& layer : pancake(g, rule, lambda, v))
      out << exact_and_float(layer.height) << " " << layer.child_dominant.str() << " x"
          << layer.count << "\n";
  }
  return kExitOk;
}

int cmd_embed_index(const Options& o, std::ostream& out) {
  const GroupData& g = GroupData::get(parse_group(o.group));
  if (o.orbit.empty()) {
    out << embedding_index_by_rank(g.id(), parse_subgroup_rank(o.subgroup)).get_str() << "\n";
    return kExitOk;
  }
  BranchingRule rule = rule_for(g, o);
  out << exact_and_float(embedding_index(g, rule, dominant_arg(g, o.orbit))) << "\n";
  return kExitOk;
}

int cmd_lower_orbits(const Options& o, std::ostream& out) {
  const GroupData& g = GroupData::get(parse_group(o.group));
  SubtractionTree tree = build_tree(g, parse_weight(g.id(), o.coords));
  out << "# " << g.name() << " seed " << tree.seed.paren_str() << ": "
      << tree.distinct_weights().size() << " weights, " << tree.edges.size() << " edges, "
      << tree.lower_dominants.size() << " dominant\n";
  for (const auto& [w, n] : tree.lower_dominants)
    out << w.str() << " x" << n << "\n";
  if (!o.dot.empty()) {
    std::ofstream f(o.dot, std::ios::binary);
    if (!f)
      throw std::runtime_error("cannot open '" + o.dot + "' for writing");
    write_dot(f, tree);
  }
  if (!o.json.empty()) {
    std::ofstream f(o.json, std::ios::binary);
    if (!f)
      throw std::runtime_error("cannot open '" + o.json + "' for writing");
    f << tree_json(tree);
  }
  return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  const GroupData& g = GroupData::get(parse_group(o.group));
  Weight seed = parse_weight(g.id(), o.coords);
  NestedPolyhedra np = o.nested_flag ? nested(g, seed) : single_orbit(g, dominant_arg(g, o.coords));
  if (o.format == "obj")
    export_obj(np, o.out);
  else
    export_json(np, o.out);
  std::size_t points = 0, edges = 0;
  for (const auto& s : np.shells) {
    points += s.points.size();
    edges += s.edges.size();
  }
  out << "wrote " << o.out << ": " << np.shells.size() << " shells, " << points << " points, "
      << edges << " edges\n";
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits, indices and lower orbits of the Coxeter groups H2, H3, H4", "coxh"};
  app.require_subcommand(1);
  Options o;
  const std::string coords_help = "comma-separated coordinates in the omega-basis, e.g. 1+1t,0,3";

  auto* orbit = app.add_subcommand("orbit", "list the orbit of a dominant point");
  orbit->add_option("group", o.group, "H2, H3, H4, A1 or A2")->required();
  orbit->add_option("coords", o.coords, coords_help)->required();
  orbit->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* index = app.add_subcommand("index", "even-degree index I^{2p} of an orbit");
  index->add_option("group", o.group)->required();
  index->add_option("coords", o.coords, coords_help)->required();
  index->add_option("--degree", o.degree, "even degree 2p")->required();

  auto* product = app.add_subcommand("product", "product of orbits");
  product->add_option("group", o.group)->required();
  product->add_option("coords", o.factors, "two or more dominant points")->required();
  product->add_flag("--decompose", o.decompose, "decompose into orbits");

  auto* anom = app.add_subcommand("anomaly", "odd-degree index along a direction");
  anom->add_option("group", o.group)->required();
  anom->add_option("coords", o.coords, coords_help)->required();
  anom->add_option("--degree", o.degree, "odd degree 2p-1")->required();
  anom->add_option("--direction", o.direction, "direction in omega-coordinates");

  auto* br = app.add_subcommand("branch", "branch an orbit to a subgroup");
  br->add_option("group", o.group)->required();
  br->add_option("subgroup", o.subgroup)->required();
  br->add_option("coords", o.coords, coords_help)->required();
  br->add_option("--direction", o.direction, "list layers orthogonal to this direction");
  br->add_option("--projection", o.projection, "projection matrix, rows separated by ';'");

  auto* emb = app.add_subcommand("embed-index", "embedding index of a subgroup");
  emb->add_option("group", o.group)->required();
  emb->add_option("subgroup", o.subgroup, "e.g. H2, A1xA1xA1, H3xA1")->required();
  emb->add_option("--orbit", o.orbit, "compute from the branching of this orbit");
  emb->add_option("--projection", o.projection, "projection matrix, rows separated by ';'");

  auto* lower = app.add_subcommand("lower-orbits", "dominant points below a seed by root subtraction");
  lower->add_option("group", o.group)->required();
  lower->add_option("coords", o.coords, coords_help)->required();
  lower->add_option("--dot", o.dot, "write the subtraction tree as DOT");
  lower->add_option("--json", o.json, "write the subtraction tree as JSON");

  auto* exp = app.add_subcommand("export", "write orbit geometry");
  exp->add_option("group", o.group)->required();
  exp->add_option("coords", o.coords, coords_help)->required();
  exp->add_flag("--nested", o.nested_flag, "export every lower orbit as a shell");
  exp->add_option("--format", o.format, "obj or json")->required()->check(CLI::IsMember({"obj", "json"}));
  exp->add_option("--out", o.out, "output path")->required();

  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (index->parsed()) return cmd_index(o, out);
    if (product->parsed()) return cmd_product(o, out);
    if (anom->parsed()) return cmd_anomaly(o, out);
    if (br->parsed()) return cmd_branch(o, out);
    if (emb->parsed()) return cmd_embed_index(o, out);
    if (lower->parsed()) return cmd_lower_orbits(o, out);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace coxh
