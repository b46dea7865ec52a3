#include "coxh/geometry.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "coxh/error.hpp"
#include "coxh/orbit.hpp"
#include "coxh/weight_system.hpp"

namespace coxh {

namespace {

double round15(double x) {
  return std::strtod(format_real(x).c_str(), nullptr);
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
  writer(out);
  out.flush();
  if (!out)
    throw std::runtime_error("write to '" + path.string() + "' failed");
}

} // namespace

std::string format_real(double x) {
  if (x == 0.0)
    x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::vector<double> CartesianEmbedding::apply(const Weight& w) const {
  std::vector<double> omega = w.to_doubles();
  std::vector<double> out(basis.size(), 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < omega.size(); ++j)
      out[i] += basis[i][j] * omega[j];
  return out;
}

CartesianEmbedding embed(const GroupData& g) {
  const std::size_t n = g.rank();
  // Cholesky G = L L^T; basis = L^T.
  std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = g.gram()(i, j).to_double();
      for (std::size_t k = 0; k < j; ++k)
        s -= L[i][k] * L[j][k];
      if (i == j) {
        if (s <= 0.0)
          throw DomainError("Gram matrix is not positive definite");
        L[i][i] = std::sqrt(s);
      } else {
        L[i][j] = s / L[j][j];
      }
    }
  CartesianEmbedding e{g.id(), std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e.basis[i][j] = L[j][i];
  return e;
}

std::vector<Edge> minimal_distance_edges(const std::vector<std::vector<double>>& points,
                                         double rel_tol) {
  auto dist2 = [&](std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t k = 0; k < points[a].size(); ++k) {
      double d = points[a][k] - points[b][k];
      s += d * d;
    }
    return s;
  };
  // Coincident points (distance below this floor) are not edges.
  double scale = 0.0;
  for (const auto& p : points)
    for (double c : p)
      scale = std::max(scale, std::abs(c));
  const double floor2 = std::pow(scale * 1e-12, 2);

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      double d = dist2(a, b);
      if (d > floor2 && d < best)
        best = d;
    }
  std::vector<Edge> edges;
  if (!std::isfinite(best))
    return edges;
  const double best_len = std::sqrt(best);
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      double d = dist2(a, b);
      if (d > floor2 && std::abs(std::sqrt(d) - best_len) <= rel_tol * best_len)
        edges.emplace_back(a, b);
    }
  return edges;
}

Shell make_shell(const GroupData& g, const CartesianEmbedding& e, const Weight& dominant) {
  Shell s;
  s.dominant = dominant;
  s.norm = g.norm(dominant);
  s.radius = std::sqrt(s.norm.to_double());
  s.omega_points = generate_orbit(g, dominant).elements;
  for (const auto& w : s.omega_points)
    s.points.push_back(e.apply(w));
  s.edges = minimal_distance_edges(s.points);
  return s;
}

NestedPolyhedra nested(const GroupData& g, const Weight& seed) {
  SubtractionTree tree = build_tree(g, seed);
  std::vector<Weight> dominants;
  for (const auto& [w, n] : tree.lower_dominants)
    if (!w.is_zero())
      dominants.push_back(w);
  std::vector<GoldenNumber> norms;
  for (const auto& w : dominants)
    norms.push_back(g.norm(w));
  std::vector<std::size_t> order(dominants.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
  const CartesianEmbedding e = embed(g);
  NestedPolyhedra np{g.id(), seed, {}};
  for (std::size_t i : order)
    np.shells.push_back(make_shell(g, e, dominants[i]));
  return np;
}

NestedPolyhedra single_orbit(const GroupData& g, const Weight& dominant) {
  NestedPolyhedra np{g.id(), dominant, {}};
  np.shells.push_back(make_shell(g, embed(g), dominant));
  return np;
}

void write_obj(std::ostream& out, const NestedPolyhedra& np) {
  if (rank_of(np.group) > 3)
    throw DomainError("OBJ export supports groups of rank at most 3; use JSON for " +
                      std::string(name_of(np.group)));
  out << "# coxh nested polyhedra\n";
  out << "# group " << name_of(np.group) << " seed " << np.seed.str() << "\n";
  std::size_t base = 1;
  for (std::size_t s = 0; s < np.shells.size(); ++s) {
    const Shell& shell = np.shells[s];
    out << "o shell_" << s + 1 << "\n";
    out << "# dominant " << shell.dominant.str() << " radius " << format_real(shell.radius) << "\n";
    for (const auto& p : shell.points) {
      out << "v";
      for (std::size_t k = 0; k < 3; ++k)
        out << ' ' << format_real(k < p.size() ? p[k] : 0.0);
      out << "\n";
    }
    for (const auto& [a, b] : shell.edges)
      out << "l " << base + a << ' ' << base + b << "\n";
    base += shell.points.size();
  }
}

std::string nested_json(const NestedPolyhedra& np) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["group"] = std::string(name_of(np.group));
  j["seed"] = np.seed.str();
  ordered_json shells = ordered_json::array();
  for (const auto& s : np.shells) {
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      ordered_json cart = ordered_json::array();
      for (double c : s.points[i])
        cart.push_back(round15(c));
      points.push_back({{"omega", s.omega_points[i].str()}, {"cartesian", std::move(cart)}});
    }
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : s.edges)
      edges.push_back({a, b});
    shells.push_back({{"dominant", s.dominant.str()},
                      {"norm", s.norm.str()},
                      {"radius", round15(s.radius)},
                      {"points", std::move(points)},
                      {"edges", std::move(edges)}});
  }
  j["shells"] = std::move(shells);
  return j.dump(2) + "\n";
}

NestedPolyhedra parse_nested_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed nested polyhedra JSON: ") + e.what());
  }
  try {
    NestedPolyhedra np;
    np.group = parse_group(j.at("group").get<std::string>());
    np.seed = parse_weight(np.group, j.at("seed").get<std::string>());
    for (const auto& js : j.at("shells")) {
      Shell s;
      s.dominant = parse_weight(np.group, js.at("dominant").get<std::string>());
      s.norm = GoldenNumber::parse(js.at("norm").get<std::string>());
      s.radius = js.at("radius").get<double>();
      for (const auto& p : js.at("points")) {
        s.omega_points.push_back(parse_weight(np.group, p.at("omega").get<std::string>()));
        s.points.push_back(p.at("cartesian").get<std::vector<double>>());
      }
      for (const auto& e : js.at("edges"))
        s.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      np.shells.push_back(std::move(s));
    }
    return np;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed nested polyhedra JSON: ") + e.what());
  }
}

void export_obj(const NestedPolyhedra& np, const std::filesystem::path& path) {
  std::ostringstream buf;
  write_obj(buf, np);
  write_file(path, [&](std::ostream& out) { out << buf.str(); });
}

void export_json(const NestedPolyhedra& np, const std::filesystem::path& path) {
  std::string text = nested_json(np);
  write_file(path, [&](std::ostream& out) { out << text; });
}

} // namespace coxh
