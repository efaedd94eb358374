#include "cayley/algebra.hpp"

#include <cstdlib>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

using Table = std::array<std::array<BasisProduct, 8>, 8>;
using IntQuat = std::array<int, 4>;
using IntOct = std::array<int, 8>;

// Quaternion relations as (i, j, sign, k) with e_i e_j = sign e_k = -e_j e_i,
// plus the squares of the imaginary units.
struct QuaternionRelations {
  std::array<int, 4> squares;
  std::array<std::array<int, 4>, 3> cross;
};

constexpr QuaternionRelations kHamilton = {
    {1, -1, -1, -1},
    {{{1, 2, +1, 3}, {2, 3, +1, 1}, {3, 1, +1, 2}}}};

// e1'^2 = e3'^2 = 1, e2^2 = -1, e1'e2 = e3', e2e3' = e1', e3'e1' = -e2.
constexpr QuaternionRelations kSplit = {
    {1, 1, -1, 1},
    {{{1, 2, +1, 3}, {2, 3, +1, 1}, {3, 1, -1, 2}}}};

Table quaternion_table(const QuaternionRelations& rel) {
  Table t{};
  for (std::size_t i = 0; i < 4; ++i) {
    t[0][i] = {i, 1};
    t[i][0] = {i, 1};
  }
  for (std::size_t i = 1; i < 4; ++i) t[i][i] = {0, rel.squares[i]};
  for (const auto& [i, j, sign, k] : rel.cross) {
    t[i][j] = {static_cast<std::size_t>(k), sign};
    t[j][i] = {static_cast<std::size_t>(k), -sign};
  }
  return t;
}

IntQuat qmul(const Table& q, const IntQuat& x, const IntQuat& y) {
  IntQuat r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[q[i][j].index] += q[i][j].sign * x[i] * y[j];
  return r;
}

IntQuat qconj(IntQuat x) {
  for (std::size_t i = 1; i < 4; ++i) x[i] = -x[i];
  return x;
}

IntQuat add(const IntQuat& a, const IntQuat& b, int sb) {
  IntQuat r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + sb * b[i];
  return r;
}

// x = m + n e4 with e5 = e1e4, e6 = -e2e4, e7 = e3e4, i.e. n = x4 + x5 e1 - x6 e2 + x7 e3.
constexpr std::array<int, 4> kSecondHalfSign = {1, 1, -1, 1};

std::pair<IntQuat, IntQuat> split_pair(const IntOct& x) {
  IntQuat m{}, n{};
  for (std::size_t i = 0; i < 4; ++i) {
    m[i] = x[i];
    n[i] = kSecondHalfSign[i] * x[i + 4];
  }
  return {m, n};
}

IntOct join_pair(const IntQuat& m, const IntQuat& n) {
  IntOct x{};
  for (std::size_t i = 0; i < 4; ++i) {
    x[i] = m[i];
    x[i + 4] = kSecondHalfSign[i] * n[i];
  }
  return x;
}

// (m1 + n1 e4)(m2 + n2 e4) = (m1 m2 - conj(n2) n1) + (n1 conj(m2) + n2 m1) e4
IntOct doubled_product(const Table& q, const IntOct& x, const IntOct& y) {
  const auto [m1, n1] = split_pair(x);
  const auto [m2, n2] = split_pair(y);
  return join_pair(add(qmul(q, m1, m2), qmul(q, qconj(n2), n1), -1),
                   add(qmul(q, n1, qconj(m2)), qmul(q, n2, m1), +1));
}

IntOct unit(std::size_t k) {
  IntOct x{};
  x[k] = 1;
  return x;
}

BasisProduct as_basis_product(const IntOct& x, std::size_t i, std::size_t j) {
  std::optional<BasisProduct> found;
  for (std::size_t k = 0; k < 8; ++k) {
    if (x[k] == 0) continue;
    if (found || std::abs(x[k]) != 1)
      throw ConsistencyError("doubled product e" + std::to_string(i) + "*e" + std::to_string(j) +
                             " is not a signed basis unit");
    found = BasisProduct{k, x[k]};
  }
  if (!found)
    throw ConsistencyError("doubled product e" + std::to_string(i) + "*e" + std::to_string(j) +
                           " vanished");
  return *found;
}

Table cayley_table(const Table& q) {
  Table t{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      t[i][j] = as_basis_product(doubled_product(q, unit(i), unit(j)), i, j);

  // Derived basis: e5 = e1e4, e6 = -e2e4, e7 = e3e4.
  const auto expect = [&](std::size_t i, std::size_t j, BasisProduct want) {
    if (!(t[i][j] == want))
      throw ConsistencyError("derived basis relation failed for e" + std::to_string(i) + "*e" +
                             std::to_string(j));
  };
  expect(1, 4, {5, +1});
  expect(2, 4, {6, -1});
  expect(3, 4, {7, +1});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) expect(i, j, q[i][j]);
  return t;
}

}  // namespace

std::string_view AlgebraId::name() const {
  switch (kind_) {
    case AlgebraKind::H: return "H";
    case AlgebraKind::Hs: return "Hs";
    case AlgebraKind::Hc: return "Hc";
    case AlgebraKind::O: return "O";
    case AlgebraKind::Os: return "Os";
    case AlgebraKind::Oc: return "Oc";
  }
  return "?";
}

std::string AlgebraId::basis_label(std::size_t index) const {
  if (index == 0) return "1";
  std::string label = "e" + std::to_string(index);
  if (is_primed(index)) label += '\'';
  return label;
}

std::optional<AlgebraId> algebra_from_name(std::string_view name) {
  for (AlgebraKind kind : kAllAlgebras)
    if (AlgebraId(kind).name() == name) return AlgebraId(kind);
  return std::nullopt;
}

StructureTable build_table(AlgebraId algebra) {
  const Table base = quaternion_table(algebra.is_split() ? kSplit : kHamilton);
  return {algebra, algebra.is_cayley() ? cayley_table(base) : base};
}

const StructureTable& table_for(AlgebraId algebra) {
  static const std::array<StructureTable, 6> tables = {
      build_table(AlgebraKind::H), build_table(AlgebraKind::Hs), build_table(AlgebraKind::Hc),
      build_table(AlgebraKind::O), build_table(AlgebraKind::Os), build_table(AlgebraKind::Oc)};
  return tables[static_cast<std::size_t>(algebra.kind())];
}

}  // namespace cayley
