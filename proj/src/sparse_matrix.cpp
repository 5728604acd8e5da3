#include "maghom/sparse_matrix.hpp"

#include "maghom/error.hpp"

#include <algorithm>
#include <map>

namespace maghom {

SparseIntegerMatrix SparseIntegerMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                                       std::span<const Triplet> triplets) {
  std::vector<std::map<int, Integer>> acc(cols);
  for (const auto& [r, c, v] : triplets) {
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= rows || static_cast<std::size_t>(c) >= cols) {
      throw ConsistencyError("matrix triplet out of range");
    }
    acc[static_cast<std::size_t>(c)][r] += v;
  }
  SparseIntegerMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (auto& [r, v] : acc[c])
      if (v != 0) m.columns_[c].push_back({r, std::move(v)});
  return m;
}

SparseIntegerMatrix SparseIntegerMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseIntegerMatrix m(rows.size(), cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].at(c) != 0) m.columns_[c].push_back({static_cast<int>(r), Integer(rows[r][c])});
  return m;
}

std::size_t SparseIntegerMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

void SparseIntegerMatrix::set_column(std::size_t c, Column column) { columns_.at(c) = std::move(column); }

Integer SparseIntegerMatrix::at(int row, int col) const {
  const auto& c = columns_.at(static_cast<std::size_t>(col));
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, int r) { return e.row < r; });
  return it != c.end() && it->row == row ? it->value : Integer(0);
}

std::vector<SparseIntegerMatrix::Triplet> SparseIntegerMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) out.emplace_back(e.row, static_cast<int>(c), e.value);
  return out;
}

SparseIntegerMatrix SparseIntegerMatrix::transposed() const {
  SparseIntegerMatrix t(cols(), rows());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) t.columns_[static_cast<std::size_t>(e.row)].push_back({static_cast<int>(c), e.value});
  return t;
}

std::vector<std::vector<Integer>> SparseIntegerMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols(), 0));
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) out[static_cast<std::size_t>(e.row)][c] = e.value;
  return out;
}

SparseIntegerMatrix operator*(const SparseIntegerMatrix& a, const SparseIntegerMatrix& b) {
  if (a.cols() != b.rows()) throw ConsistencyError("matrix dimensions do not compose");
  SparseIntegerMatrix out(a.rows(), b.cols());
  std::map<int, Integer> acc;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    acc.clear();
    for (const auto& eb : b.column(c))
      for (const auto& ea : a.column(static_cast<std::size_t>(eb.row))) acc[ea.row] += ea.value * eb.value;
    for (auto& [r, v] : acc)
      if (v != 0) out.columns_[c].push_back({r, v});
  }
  return out;
}

}  // namespace maghom
