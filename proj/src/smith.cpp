#include "maghom/error.hpp"
#include "maghom/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace maghom {

namespace {

using Entry = SparseIntegerMatrix::Entry;
using Column = SparseIntegerMatrix::Column;

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// col_target -= factor * col_pivot, both sorted by row.
Column axpy(const Column& target, const Integer& factor, const Column& pivot) {
  Column out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].row < pivot[j].row)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || pivot[j].row < target[i].row) {
      out.push_back({pivot[j].row, -factor * pivot[j].value});
      ++j;
    } else {
      Integer v = target[i].value - factor * pivot[j].value;
      if (v != 0) out.push_back({target[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Sparse elimination on one connected block. Local rows/cols are 0-based.
class BlockEliminator {
 public:
  BlockEliminator(std::size_t rows, std::vector<Column> columns)
      : columns_(std::move(columns)), row_support_(rows), alive_(columns_.size(), true) {
    for (std::size_t c = 0; c < columns_.size(); ++c)
      for (const auto& e : columns_[c]) row_support_[static_cast<std::size_t>(e.row)].insert(static_cast<int>(c));
  }

  void run(std::vector<Integer>& factors) {
    eliminate_units(factors);
    dense_phase(factors);
  }

 private:
  using Candidate = std::pair<std::size_t, int>;

  void eliminate_units(std::vector<Integer>& factors) {
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
    for (std::size_t c = 0; c < columns_.size(); ++c)
      if (!columns_[c].empty()) heap.emplace(columns_[c].size(), static_cast<int>(c));
    while (!heap.empty()) {
      auto [count, c] = heap.top();
      heap.pop();
      const auto col = static_cast<std::size_t>(c);
      if (!alive_[col] || columns_[col].size() != count || count == 0) continue;
      int pivot_row = -1;
      std::size_t best = 0;
      for (const auto& e : columns_[col]) {
        if (e.value != 1 && e.value != -1) continue;
        const std::size_t weight = row_support_[static_cast<std::size_t>(e.row)].size();
        if (pivot_row < 0 || weight < best) {
          pivot_row = e.row;
          best = weight;
        }
      }
      if (pivot_row < 0) continue;
      pivot(pivot_row, c, heap);
      factors.push_back(1);
    }
  }

  void pivot(int r, int p, std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>>& heap) {
    const auto pc = static_cast<std::size_t>(p);
    const Column pivot_column = columns_[pc];
    Integer unit = 0;
    for (const auto& e : pivot_column)
      if (e.row == r) unit = e.value;
    const std::vector<int> others(row_support_[static_cast<std::size_t>(r)].begin(),
                                  row_support_[static_cast<std::size_t>(r)].end());
    for (int c : others) {
      if (c == p) continue;
      const auto cc = static_cast<std::size_t>(c);
      Integer a = 0;
      for (const auto& e : columns_[cc])
        if (e.row == r) a = e.value;
      Column updated = axpy(columns_[cc], a * unit, pivot_column);
      for (const auto& e : columns_[cc]) row_support_[static_cast<std::size_t>(e.row)].erase(c);
      for (const auto& e : updated) row_support_[static_cast<std::size_t>(e.row)].insert(c);
      columns_[cc] = std::move(updated);
      if (!columns_[cc].empty()) heap.emplace(columns_[cc].size(), c);
    }
    for (const auto& e : pivot_column) row_support_[static_cast<std::size_t>(e.row)].erase(p);
    columns_[pc].clear();
    alive_[pc] = false;
  }

  void dense_phase(std::vector<Integer>& factors) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < columns_.size(); ++c)
      if (alive_[c] && !columns_[c].empty()) cols.push_back(c);
    if (cols.empty()) return;
    std::vector<int> row_index(row_support_.size(), -1);
    int rows = 0;
    for (std::size_t r = 0; r < row_support_.size(); ++r)
      if (!row_support_[r].empty()) row_index[r] = rows++;
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(rows), std::vector<Integer>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& e : columns_[cols[j]])
        a[static_cast<std::size_t>(row_index[static_cast<std::size_t>(e.row)])][j] = e.value;
    diagonalize(a, factors);
  }

  static void diagonalize(std::vector<std::vector<Integer>>& a, std::vector<Integer>& factors) {
    const std::size_t m = a.size(), n = m ? a[0].size() : 0;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      while (true) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
          for (std::size_t j = t; j < n; ++j)
            if (a[i][j] != 0 && (pi == m || abs_value(a[i][j]) < abs_value(a[pi][pj]))) {
              pi = i;
              pj = j;
            }
        if (pi == m) return;
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          const Integer q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) continue;
          const Integer q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) clean = false;
        }
        if (clean) break;
      }
      factors.push_back(abs_value(a[t][t]));
    }
  }

  std::vector<Column> columns_;
  std::vector<std::set<int>> row_support_;
  std::vector<bool> alive_;
};

void normalize_chain(std::vector<Integer>& factors) {
  std::vector<Integer> big;
  std::size_t units = 0;
  for (auto& f : factors) {
    if (f == 1) ++units;
    else big.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      const Integer g = boost::multiprecision::gcd(big[i], big[j]);
      const Integer l = big[i] / g * big[j];
      big[i] = g;
      big[j] = l;
    }
  factors.assign(units, Integer(1));
  for (auto& f : big)
    if (f == 1) factors.insert(factors.begin(), Integer(1));
    else factors.push_back(std::move(f));
}

}  // namespace

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& f : invariant_factors)
    if (f > 1) out.push_back(f);
  return out;
}

SmithForm smith_normal_form(const SparseIntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  UnionFind uf(rows + cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& e : m.column(c)) uf.unite(static_cast<std::size_t>(e.row), rows + c);

  // Renumber rows and columns inside each block.
  std::vector<int> block_of(rows + cols, -1);
  std::vector<std::size_t> block_rows;
  std::vector<std::vector<std::size_t>> block_cols;
  std::vector<int> local_row(rows, -1);
  for (std::size_t c = 0; c < cols; ++c) {
    if (m.column(c).empty()) continue;
    const std::size_t root = uf.find(rows + c);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(block_cols.size());
      block_cols.emplace_back();
      block_rows.push_back(0);
    }
    block_cols[static_cast<std::size_t>(block_of[root])].push_back(c);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t root = uf.find(r);
    if (block_of[root] < 0) continue;
    local_row[r] = static_cast<int>(block_rows[static_cast<std::size_t>(block_of[root])]++);
  }

  std::vector<Integer> factors;
  for (std::size_t b = 0; b < block_cols.size(); ++b) {
    std::vector<Column> local;
    local.reserve(block_cols[b].size());
    for (std::size_t c : block_cols[b]) {
      Column col;
      col.reserve(m.column(c).size());
      for (const auto& e : m.column(c)) col.push_back({local_row[static_cast<std::size_t>(e.row)], e.value});
      std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });
      local.push_back(std::move(col));
    }
    BlockEliminator(block_rows[b], std::move(local)).run(factors);
  }
  normalize_chain(factors);
  SmithForm form;
  form.rank = factors.size();
  form.invariant_factors = std::move(factors);
  return form;
}

void require_composite_zero(const SparseIntegerMatrix& a, const SparseIntegerMatrix& b) {
  if (a.cols() != b.rows()) throw ConsistencyError("differentials do not compose: shape mismatch");
  if (!(a * b).is_zero()) throw ConsistencyError("differentials do not compose to zero");
}

HomologyGroup homology_from_forms(std::size_t dimension, const SmithForm& d_k, const SmithForm& d_k_plus_1) {
  if (d_k.rank + d_k_plus_1.rank > dimension) throw ConsistencyError("ranks exceed chain group dimension");
  HomologyGroup h;
  h.rank = dimension - d_k.rank - d_k_plus_1.rank;
  h.torsion = d_k_plus_1.torsion();
  return h;
}

HomologyGroup homology(const SparseIntegerMatrix& d_k, const SparseIntegerMatrix& d_k_plus_1) {
  require_composite_zero(d_k, d_k_plus_1);
  return homology_from_forms(d_k.cols(), smith_normal_form(d_k), smith_normal_form(d_k_plus_1));
}

}  // namespace maghom
