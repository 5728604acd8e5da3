#pragma once

#include "maghom/integer.hpp"
#include "maghom/sparse_matrix.hpp"

#include <cstddef>
#include <vector>

namespace maghom {

struct SmithForm {
  std::size_t rank = 0;
  /// d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> invariant_factors;

  /// Invariant factors greater than one.
  std::vector<Integer> torsion() const;
  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

SmithForm smith_normal_form(const SparseIntegerMatrix& m);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H = ker(d_k) / im(d_{k+1}) where d_k: C_k -> C_{k-1} and d_{k+1}: C_{k+1} -> C_k.
/// Throws ConsistencyError if the shapes disagree or d_k d_{k+1} != 0.
HomologyGroup homology(const SparseIntegerMatrix& d_k, const SparseIntegerMatrix& d_k_plus_1);

/// Same computation from precomputed Smith forms, for a chain group of rank `dimension`.
HomologyGroup homology_from_forms(std::size_t dimension, const SmithForm& d_k, const SmithForm& d_k_plus_1);

/// Throws ConsistencyError unless a * b is the zero matrix.
void require_composite_zero(const SparseIntegerMatrix& a, const SparseIntegerMatrix& b);

}  // namespace maghom
