#pragma once

// Coxeter group data for H2, H3, H4 and the crystallographic helpers A1, A2:
// Cartan and Gram matrices, simple roots, reflections, the dominant chamber.
//
// Weights are written in the omega-basis (fundamental weights). All five
// Cartan matrices are symmetric, so simple root alpha_i in omega-coordinates
// is row i of the Cartan matrix, and the inner product on omega-coordinates
// is given by the Gram matrix C^-1 (every simple root has <a,a> = 2).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxh/golden.hpp"

namespace coxh {

enum class GroupType { H2, H3, H4, A1, A2 };

std::size_t rank_of(GroupType g);
std::string_view name_of(GroupType g);
// Case-insensitive "H2", "h3", ...; throws ParseError.
GroupType parse_group(std::string_view name);

struct Weight {
  GroupType group = GroupType::H2;
  std::vector<GoldenNumber> coords;

  Weight() = default;
  Weight(GroupType g, std::vector<GoldenNumber> c);
  static Weight zero(GroupType g);

  std::size_t rank() const { return coords.size(); }
  const GoldenNumber& operator[](std::size_t i) const { return coords[i]; }
  GoldenNumber& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const;
  // Every coordinate >= 0.
  bool is_dominant() const;
  // Every coordinate in Z[tau].
  bool is_ztau() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const GoldenNumber& s, Weight w);
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.group == b.group && a.coords == b.coords;
  }

  // "1,-1+1t,0"
  std::string str() const;
  // "(1,-1+1t,0)"
  std::string paren_str() const;
  std::vector<double> to_doubles() const;
  std::size_t hash() const;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

// Comma-separated golden numbers, e.g. "1+1t,0,3".
Weight parse_weight(GroupType g, std::string_view text);

// Lexicographic comparison of coordinates by exact real value.
bool lex_less(const Weight& a, const Weight& b);

// Dense row-major matrix over Q(tau).
class GoldenMatrix {
public:
  GoldenMatrix() = default;
  GoldenMatrix(std::size_t rows, std::size_t cols);
  GoldenMatrix(std::size_t rows, std::size_t cols, std::vector<GoldenNumber> data);

  static GoldenMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GoldenNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  GoldenNumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<GoldenNumber> apply(std::span<const GoldenNumber> v) const;
  GoldenMatrix inverse() const;

  friend GoldenMatrix operator*(const GoldenMatrix& a, const GoldenMatrix& b);
  friend bool operator==(const GoldenMatrix& a, const GoldenMatrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GoldenNumber> data_;
};

struct DominantResult {
  Weight dominant;
  std::size_t word_length = 0;
};

class GroupData {
public:
  // Shared immutable instance per group.
  static const GroupData& get(GroupType g);

  GroupType id() const { return id_; }
  std::size_t rank() const { return cartan_.rows(); }
  std::string_view name() const { return name_of(id_); }

  const GoldenMatrix& cartan() const { return cartan_; }
  const GoldenMatrix& gram() const { return gram_; }
  // alpha_i in omega-coordinates (0-based index).
  const Weight& simple_root(std::size_t i) const { return roots_.at(i); }
  // Coxeter matrix entry m_ij.
  int coxeter_label(std::size_t i, std::size_t j) const;
  // |W|
  std::uint64_t order() const { return order_; }

  GoldenNumber inner(const Weight& x, const Weight& y) const;
  GoldenNumber norm(const Weight& x) const { return inner(x, x); }

  // r_i(x) = x - x_i alpha_i, 0-based index.
  Weight reflect(std::size_t i, const Weight& x) const;
  DominantResult to_dominant(const Weight& x) const;

  // |W| / |W_J| with W_J the parabolic subgroup fixing the dominant point.
  std::uint64_t orbit_size(const Weight& dominant) const;
  // Order of the parabolic subgroup generated by the given simple reflections.
  std::uint64_t parabolic_order(std::span<const std::size_t> generators) const;

  // Expansion of x in the simple-root basis: x = sum c_i alpha_i.
  std::vector<GoldenNumber> root_coordinates(const Weight& x) const;

  void check_member(const Weight& x) const;

private:
  explicit GroupData(GroupType g);

  GroupType id_;
  GoldenMatrix cartan_;
  GoldenMatrix gram_;
  std::vector<Weight> roots_;
  std::uint64_t order_ = 0;
};

} // namespace coxh
