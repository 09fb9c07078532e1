#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tama/rational.hpp"

namespace tama {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination: rows are first scaled to
/// integers, every later division is exact.
std::size_t bareiss_rank(const RationalMatrix& m);

/// Determinant by Bareiss elimination (square matrices only).
Rational bareiss_determinant(const RationalMatrix& m);

/// Sparse vector keyed by column id.
using SparseVector = std::map<std::size_t, Rational>;

/// Incrementally built row-echelon basis over sparse integer rows.
/// Reduction is fraction-free: a row is cross-multiplied against a pivot row
/// and divided by its content, so no rational arithmetic is needed.
class SparseEchelon {
 public:
  /// Reduces `v` against the basis; inserts it and returns true when it is
  /// independent of the rows inserted so far.
  bool insert(const SparseVector& v);
  /// True when `v` lies in the span of the inserted rows.
  bool contains(const SparseVector& v) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  using Row = std::map<std::size_t, Integer>;
  Row reduce(Row row) const;
  static Row to_integer_row(const SparseVector& v);

  std::map<std::size_t, Row> pivots_;  // pivot column -> row with that leading column
};

}  // namespace tama
