#pragma once

#include "maghom/chain.hpp"
#include "maghom/graph.hpp"
#include "maghom/homology.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace maghom {

/// MH_{k,l} for 0 <= k <= l <= lmax.
struct HomologyTable {
  std::string graph;
  std::string method = "naive";
  int lmax = -1;
  /// rows[l][k]
  std::vector<std::vector<HomologyGroup>> rows;

  const HomologyGroup& at(int k, int l) const;
  /// Zero outside the computed range.
  std::size_t rank(int k, int l) const;
  bool contains(int k, int l) const { return l >= 0 && l <= lmax && k >= 0 && k <= l; }
  bool torsion_free() const;
  /// Sum of (-1)^k rank MH_{k,l}.
  Integer euler_characteristic(int l) const;
  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

struct TableOptions {
  /// "naive" or "morse:<rule>".
  std::string method = "naive";
  std::size_t cap = kDefaultGeneratorCap;
  /// Concurrent l-slices; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Additionally compare the reduced complex's homology against the full one.
  bool cross_check = false;
};

/// Sizes and timings per grading, filled in by mh_table on request.
struct SliceStats {
  int l = 0;
  std::vector<std::size_t> full_dims;
  std::vector<std::size_t> reduced_dims;
  bool zero_differentials = false;
  double build_seconds = 0;
  double reduce_seconds = 0;
  double homology_seconds = 0;
};

/// Throws UsageError for malformed methods, PreconditionError when a rule does
/// not apply or its matching is not Morse, GeneratorCapExceeded from
/// enumeration.
HomologyTable mh_table(const Graph& g, int lmax, const TableOptions& options = {},
                       std::vector<SliceStats>* stats = nullptr);
HomologyTable mh_table(const Graph& g, int lmax, std::string_view method);

std::string table_to_json(const HomologyTable& t);
HomologyTable table_from_json(std::string_view text);
/// Rows l, columns k. Zero groups print as ".".
std::string format_table_pretty(const HomologyTable& t);
std::string format_table_csv(const HomologyTable& t);
std::string format_group(const HomologyGroup& h);

}  // namespace maghom
