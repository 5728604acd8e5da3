#pragma once

#include "maghom/homology.hpp"
#include "maghom/sparse_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace maghom {

/// Free complex C_0 <- C_1 <- ... <- C_top with a fixed basis in each degree.
struct BasedComplex {
  /// Grading label (l for magnitude slices).
  int grading = 0;
  std::vector<std::size_t> dims;
  /// differentials[k]: C_k -> C_{k-1}; differentials[0] has zero rows.
  std::vector<SparseIntegerMatrix> differentials;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int k) const { return k < 0 || k > top_degree() ? 0 : dims[static_cast<std::size_t>(k)]; }
  /// Matrix of C_k -> C_{k-1}; an empty matrix of the right shape outside range.
  SparseIntegerMatrix differential(int k) const;

  /// Throws ConsistencyError on shape mismatch or d^2 != 0.
  void validate() const;
};

/// H_0 .. H_top of a based complex.
std::vector<HomologyGroup> complex_homology(const BasedComplex& c);

struct MatchedPair {
  /// Degree of `upper`; `lower` lives in degree - 1.
  int degree = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

class Matching {
 public:
  Matching() = default;
  explicit Matching(const std::vector<std::size_t>& dims);

  /// Records a pair; conflicts are kept and reported by validate_matching.
  void add(int degree, std::size_t lower, std::size_t upper);

  const std::vector<MatchedPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::string>& conflicts() const { return conflicts_; }

  /// Partner of generator `id` in degree + 1 / degree - 1.
  std::optional<std::size_t> up_partner(int degree, std::size_t id) const;
  std::optional<std::size_t> down_partner(int degree, std::size_t id) const;
  bool is_matched(int degree, std::size_t id) const {
    return up_partner(degree, id).has_value() || down_partner(degree, id).has_value();
  }
  std::size_t unmatched_count(int degree) const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<MatchedPair> pairs_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::string> conflicts_;
};

struct MatchingValidation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

MatchingValidation validate_matching(const BasedComplex& c, const Matching& m);

/// Directed cycle a_1 -> b_1 -> a_2 -> ... -> b_p -> a_1 with a_i in `degree`
/// and b_i in degree - 1, b_i matched to a_{i+1}.
struct CycleWitness {
  int degree = 0;
  std::vector<std::size_t> upper;
  std::vector<std::size_t> lower;
};

/// nullopt when every layer of the modified graph is acyclic.
std::optional<CycleWitness> check_acyclic(const BasedComplex& c, const Matching& m);

/// Re-checks each step of a witness against the complex and matching.
bool is_valid_witness(const BasedComplex& c, const Matching& m, const CycleWitness& w);

struct ReducedComplex {
  BasedComplex complex;
  /// original_ids[k][i]: generator id in the input complex.
  std::vector<std::vector<std::size_t>> original_ids;
};

/// Restricts to unmatched generators with path-sum differentials. Throws
/// PreconditionError if the matching is not acyclic.
ReducedComplex reduce(const BasedComplex& c, const Matching& m);

bool homology_equivalence_check(const BasedComplex& full, const ReducedComplex& reduced);

}  // namespace maghom
