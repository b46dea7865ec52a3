#include "coxh/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "coxh/error.hpp"

namespace coxh {

namespace {

GoldenMatrix cartan_for(GroupType g) {
  const GoldenNumber t = GoldenNumber::tau();
  switch (g) {
  case GroupType::H2:
    return GoldenMatrix(2, 2, {2, -t, -t, 2});
  case GroupType::H3:
    return GoldenMatrix(3, 3, {2, -1, 0, -1, 2, -t, 0, -t, 2});
  case GroupType::H4:
    return GoldenMatrix(4, 4, {2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -t, 0, 0, -t, 2});
  case GroupType::A1:
    return GoldenMatrix(1, 1, {2});
  case GroupType::A2:
    return GoldenMatrix(2, 2, {2, -1, -1, 2});
  }
  throw DomainError("unknown group");
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace

std::size_t rank_of(GroupType g) {
  switch (g) {
  case GroupType::H2: return 2;
  case GroupType::H3: return 3;
  case GroupType::H4: return 4;
  case GroupType::A1: return 1;
  case GroupType::A2: return 2;
  }
  return 0;
}

std::string_view name_of(GroupType g) {
  switch (g) {
  case GroupType::H2: return "H2";
  case GroupType::H3: return "H3";
  case GroupType::H4: return "H4";
  case GroupType::A1: return "A1";
  case GroupType::A2: return "A2";
  }
  return "?";
}

GroupType parse_group(std::string_view name) {
  std::string upper(name);
  for (char& c : upper)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (GroupType g : {GroupType::H2, GroupType::H3, GroupType::H4, GroupType::A1, GroupType::A2})
    if (upper == name_of(g))
      return g;
  throw ParseError("unknown group '" + std::string(name) + "' (expected H2, H3, H4, A1 or A2)");
}

// Weight

Weight::Weight(GroupType g, std::vector<GoldenNumber> c) : group(g), coords(std::move(c)) {
  if (coords.size() != rank_of(g))
    throw DomainError("weight of " + std::string(name_of(g)) + " needs " +
                      std::to_string(rank_of(g)) + " coordinates, got " +
                      std::to_string(coords.size()));
}

Weight Weight::zero(GroupType g) {
  return Weight(g, std::vector<GoldenNumber>(rank_of(g)));
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const GoldenNumber& x) { return x.is_zero(); });
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](const GoldenNumber& x) { return x.sign() >= 0; });
}

bool Weight::is_ztau() const {
  return std::all_of(coords.begin(), coords.end(), [](const GoldenNumber& x) { return x.is_ztau(); });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.group != group)
    throw DomainError("group mismatch in weight addition");
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.group != group)
    throw DomainError("group mismatch in weight subtraction");
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(const GoldenNumber& s, Weight w) {
  for (auto& c : w.coords)
    c *= s;
  return w;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& c : w.coords)
    c = -c;
  return w;
}

std::string Weight::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i)
      out += ',';
    out += coords[i].str();
  }
  return out;
}

std::string Weight::paren_str() const { return "(" + str() + ")"; }

std::vector<double> Weight::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords.size());
  for (const auto& c : coords)
    out.push_back(c.to_double());
  return out;
}

std::size_t Weight::hash() const {
  std::size_t h = static_cast<std::size_t>(group) + 0x51ed270b27ULL;
  for (const auto& c : coords)
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Weight parse_weight(GroupType g, std::string_view text) {
  std::vector<GoldenNumber> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coords.push_back(GoldenNumber::parse(token));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  if (coords.size() != rank_of(g))
    throw ParseError("'" + std::string(text) + "' has " + std::to_string(coords.size()) +
                     " coordinates; " + std::string(name_of(g)) + " needs " +
                     std::to_string(rank_of(g)));
  return Weight(g, std::move(coords));
}

bool lex_less(const Weight& a, const Weight& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    auto c = a.coords[i] <=> b.coords[i];
    if (c != 0)
      return c < 0;
  }
  return false;
}

// GoldenMatrix

GoldenMatrix::GoldenMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

GoldenMatrix::GoldenMatrix(std::size_t rows, std::size_t cols, std::vector<GoldenNumber> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw DomainError("matrix data size mismatch");
}

GoldenMatrix GoldenMatrix::identity(std::size_t n) {
  GoldenMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

std::vector<GoldenNumber> GoldenMatrix::apply(std::span<const GoldenNumber> v) const {
  if (v.size() != cols_)
    throw DomainError("matrix/vector dimension mismatch");
  std::vector<GoldenNumber> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero())
        out[i] += (*this)(i, j) * v[j];
  return out;
}

GoldenMatrix GoldenMatrix::inverse() const {
  if (rows_ != cols_)
    throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  GoldenMatrix a = *this, inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      throw DivisionByZero();
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    GoldenNumber p = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero())
        continue;
      GoldenNumber f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

GoldenMatrix operator*(const GoldenMatrix& a, const GoldenMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DomainError("matrix product dimension mismatch");
  GoldenMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        c(i, j) += a(i, k) * b(k, j);
  return c;
}

// GroupData

const GroupData& GroupData::get(GroupType g) {
  static const std::array<GroupData, 5> groups = {
      GroupData(GroupType::H2), GroupData(GroupType::H3), GroupData(GroupType::H4),
      GroupData(GroupType::A1), GroupData(GroupType::A2)};
  return groups[static_cast<std::size_t>(g)];
}

GroupData::GroupData(GroupType g) : id_(g), cartan_(cartan_for(g)) {
  gram_ = cartan_.inverse();
  for (std::size_t i = 0; i < rank(); ++i) {
    std::vector<GoldenNumber> row(rank());
    for (std::size_t j = 0; j < rank(); ++j)
      row[j] = cartan_(i, j);
    roots_.emplace_back(g, std::move(row));
  }
  std::vector<std::size_t> all(rank());
  std::iota(all.begin(), all.end(), std::size_t{0});
  order_ = parabolic_order(all);
}

int GroupData::coxeter_label(std::size_t i, std::size_t j) const {
  if (i == j)
    return 1;
  GoldenNumber p = cartan_(i, j) * cartan_(j, i);
  if (p.is_zero())
    return 2;
  if (p == GoldenNumber(1))
    return 3;
  if (p == GoldenNumber::tau() * GoldenNumber::tau())
    return 5;
  throw DomainError("unsupported Coxeter label");
}

std::uint64_t GroupData::parabolic_order(std::span<const std::size_t> generators) const {
  // All diagrams here are paths; a connected piece is A_n, or H_n when it
  // contains the 5-labelled edge.
  std::vector<bool> in(rank(), false);
  for (std::size_t g : generators) {
    if (g >= rank())
      throw DomainError("generator index out of range");
    in[g] = true;
  }
  std::uint64_t total = 1;
  std::vector<bool> seen(rank(), false);
  for (std::size_t s = 0; s < rank(); ++s) {
    if (!in[s] || seen[s])
      continue;
    std::vector<std::size_t> stack{s};
    std::uint64_t nodes = 0;
    bool has_five = false;
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      ++nodes;
      for (std::size_t v = 0; v < rank(); ++v) {
        if (v == u || !in[v])
          continue;
        int m = coxeter_label(u, v);
        if (m == 2)
          continue;
        if (m == 5)
          has_five = true;
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    if (!has_five) {
      total *= factorial(nodes + 1);
    } else {
      static constexpr std::uint64_t h_orders[] = {0, 0, 10, 120, 14400};
      if (nodes < 2 || nodes > 4)
        throw DomainError("unsupported parabolic subgroup");
      total *= h_orders[nodes];
    }
  }
  return total;
}

std::uint64_t GroupData::orbit_size(const Weight& dominant) const {
  check_member(dominant);
  if (!dominant.is_dominant())
    throw DomainError("orbit_size needs a dominant weight, got " + dominant.paren_str());
  std::vector<std::size_t> stabilizer;
  for (std::size_t i = 0; i < rank(); ++i)
    if (dominant[i].is_zero())
      stabilizer.push_back(i);
  return order_ / parabolic_order(stabilizer);
}

void GroupData::check_member(const Weight& x) const {
  if (x.group != id_ || x.rank() != rank())
    throw DomainError("weight " + x.paren_str() + " of " + std::string(name_of(x.group)) +
                      " used with group " + std::string(name()));
}

GoldenNumber GroupData::inner(const Weight& x, const Weight& y) const {
  check_member(x);
  check_member(y);
  GoldenNumber sum;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i].is_zero())
      continue;
    GoldenNumber row;
    for (std::size_t j = 0; j < rank(); ++j)
      if (!y[j].is_zero())
        row += gram_(i, j) * y[j];
    sum += x[i] * row;
  }
  return sum;
}

Weight GroupData::reflect(std::size_t i, const Weight& x) const {
  check_member(x);
  if (i >= rank())
    throw DomainError("reflection index " + std::to_string(i + 1) + " out of range for " +
                      std::string(name()));
  Weight out = x;
  if (x[i].is_zero())
    return out;
  const GoldenNumber xi = x[i];
  for (std::size_t j = 0; j < rank(); ++j) {
    const GoldenNumber& c = cartan_(i, j);
    if (!c.is_zero())
      out[j] -= xi * c;
  }
  return out;
}

DominantResult GroupData::to_dominant(const Weight& x) const {
  check_member(x);
  DominantResult result{x, 0};
  while (true) {
    std::size_t i = 0;
    while (i < rank() && result.dominant[i].sign() >= 0)
      ++i;
    if (i == rank())
      return result;
    result.dominant = reflect(i, result.dominant);
    ++result.word_length;
  }
}

std::vector<GoldenNumber> GroupData::root_coordinates(const Weight& x) const {
  check_member(x);
  return gram_.apply(x.coords);
}

} // namespace coxh
