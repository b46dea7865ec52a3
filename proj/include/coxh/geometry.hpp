#pragma once

// Cartesian embedding of orbits and nested-polyhedra export (OBJ, JSON).

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coxh/group.hpp"

namespace coxh {

struct CartesianEmbedding {
  GroupType group = GroupType::H3;
  // Row-major rank x rank; cartesian = basis * omega, basis^T basis = Gram.
  std::vector<std::vector<double>> basis;

  std::vector<double> apply(const Weight& w) const;
};

CartesianEmbedding embed(const GroupData& g);

using Edge = std::pair<std::size_t, std::size_t>;

struct Shell {
  Weight dominant;
  GoldenNumber norm;
  double radius = 0.0;
  std::vector<Weight> omega_points;
  std::vector<std::vector<double>> points;
  std::vector<Edge> edges;
};

struct NestedPolyhedra {
  GroupType group = GroupType::H3;
  Weight seed;
  std::vector<Shell> shells;
};

// Pairs of points at the minimal nonzero distance (relative tolerance rel_tol).
std::vector<Edge> minimal_distance_edges(const std::vector<std::vector<double>>& points,
                                         double rel_tol = 1e-9);

Shell make_shell(const GroupData& g, const CartesianEmbedding& e, const Weight& dominant);

// One shell per nonzero lower dominant of the subtraction tree, by descending radius.
NestedPolyhedra nested(const GroupData& g, const Weight& seed);
// The orbit of a single dominant point as a one-shell structure.
NestedPolyhedra single_orbit(const GroupData& g, const Weight& dominant);

// Up to rank 3 (H2 points get z = 0). Throws DomainError for H4.
void write_obj(std::ostream& out, const NestedPolyhedra& np);
std::string nested_json(const NestedPolyhedra& np);
NestedPolyhedra parse_nested_json(const std::string& text);

// Throws std::runtime_error naming the path on I/O failure.
void export_obj(const NestedPolyhedra& np, const std::filesystem::path& path);
void export_json(const NestedPolyhedra& np, const std::filesystem::path& path);

// "%.15g", with negative zero printed as 0.
std::string format_real(double x);

} // namespace coxh
