#pragma once

#include <vector>

#include "cayley/scalar.hpp"

namespace cayley {

/// Dense row-major matrix of exact scalars.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Field field = Field::Real)
      : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Real;
  std::vector<Scalar> entries_;
};

struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form by Gauss-Jordan elimination, taking the first
/// nonzero entry in each column as pivot.
RowEchelon rref(ExactMatrix m);

/// Basis of {x : m x = 0}, one vector per free column in increasing order,
/// with a 1 in that free column and 0 in the other free columns.
std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m);

/// Rank of the matrix whose columns are `vectors`.
std::size_t column_rank(const std::vector<std::vector<Scalar>>& vectors, Field field);

}  // namespace cayley
