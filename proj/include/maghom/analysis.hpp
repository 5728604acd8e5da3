#pragma once

#include "maghom/corpus.hpp"
#include "maghom/rules.hpp"
#include "maghom/table.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maghom {

struct DiagonalityReport {
  std::string graph;
  int lmax = 0;
  bool diagonal = true;
  /// First off-diagonal nonzero group, scanning l then k.
  int k = -1;
  int l = -1;
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  /// "diagonal up to l=4" or "counterexample MH_{2,3} rank 10".
  std::string verdict() const;
};

DiagonalityReport diagonality_report(const HomologyTable& t);
DiagonalityReport diagonal_check(const Graph& g, int lmax, const TableOptions& options = {});

/// Validity of the rule on g up to lmax followed by acyclicity of the
/// generated matching on every slice l <= lmax. Returns an empty string on
/// success, otherwise the first failure.
std::string check_morse_rule(const MatchingRule& rule, const Graph& g, int lmax,
                             std::size_t cap = kDefaultGeneratorCap);

struct CheckLine {
  std::string description;
  bool passed = true;
  std::string detail;
};

struct SuiteOptions {
  /// Overrides each suite's default grading bound when >= 0.
  int lmax = -1;
  std::size_t cap = kDefaultGeneratorCap;
  unsigned threads = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckLine> checks;
  bool passed() const;
};

using CheckSink = std::function<void(const CheckLine&)>;

const std::vector<std::string>& theorem_selectors();
/// Throws UsageError for unknown selectors. Each check is passed to `sink`
/// as soon as it completes.
SuiteReport verify_theorems(std::string_view selector, const SuiteOptions& options = {}, const CheckSink& sink = {});

/// Reference ranks for the four separation examples, rows l = 0..8 (the
/// rook rows stop at 6), columns k = 0..l.
struct ReferenceTable {
  Graph graph;
  std::vector<std::vector<std::size_t>> ranks;
  int max_l() const { return static_cast<int>(ranks.size()) - 1; }
};
const std::vector<ReferenceTable>& reference_tables();
/// Mismatch descriptions for rows l <= t.lmax present in both; empty when equal.
std::vector<std::string> compare_with_reference(const HomologyTable& t, const ReferenceTable& ref);

}  // namespace maghom
