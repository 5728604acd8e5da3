#pragma once

#include "maghom/integer.hpp"

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

namespace maghom {

/// Integer matrix stored by columns; each column holds (row, value) pairs
/// sorted by row with nonzero values.
class SparseIntegerMatrix {
 public:
  struct Entry {
    int row;
    Integer value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;
  using Triplet = std::tuple<int, int, Integer>;

  SparseIntegerMatrix() = default;
  SparseIntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  /// Duplicate (row, col) triplets are summed; zero sums are dropped.
  static SparseIntegerMatrix from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> triplets);
  static SparseIntegerMatrix from_dense(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const Column& column(std::size_t c) const { return columns_.at(c); }
  /// Replaces a column; entries must be sorted by row and nonzero.
  void set_column(std::size_t c, Column column);
  Integer at(int row, int col) const;

  std::vector<Triplet> triplets() const;
  SparseIntegerMatrix transposed() const;
  std::vector<std::vector<Integer>> to_dense() const;

  friend SparseIntegerMatrix operator*(const SparseIntegerMatrix& a, const SparseIntegerMatrix& b);
  friend bool operator==(const SparseIntegerMatrix&, const SparseIntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

}  // namespace maghom
