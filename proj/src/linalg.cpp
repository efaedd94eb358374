#include "cayley/linalg.hpp"

#include <algorithm>
#include <utility>

namespace cayley {

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

RowEchelon rref(ExactMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col).is_zero()) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));

    const Scalar scale = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= scale;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar(1).in_field(m.field());
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r)
      v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t column_rank(const std::vector<std::vector<Scalar>>& vectors, Field field) {
  if (vectors.empty()) return 0;
  ExactMatrix m(vectors.front().size(), vectors.size(), field);
  for (std::size_t c = 0; c < vectors.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = vectors[c][r];
  return rref(std::move(m)).pivot_columns.size();
}

}  // namespace cayley
