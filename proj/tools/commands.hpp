#pragma once

#include "maghom/analysis.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace maghom::cli {

enum class Format { Pretty, Json, Csv };

Format parse_format(const std::string& name);

struct RunConfig {
  std::string graph;
  int lmax = 3;
  std::string method = "naive";
  std::string output;
  Format format = Format::Pretty;
  unsigned threads = 0;
  std::size_t cap = kDefaultGeneratorCap;

  /// Throws UsageError unless lmax >= 0 and cap >= 1.
  void validate() const;
  TableOptions table_options() const;
};

enum ExitCode : int { kSuccess = 0, kAssertionFailure = 1, kUsage = 2, kResourceCap = 3 };

int cmd_magnitude(const RunConfig& config, std::size_t terms, bool speyer, std::ostream& out);
int cmd_homology(const RunConfig& config, std::ostream& out);
int cmd_diagonal_check(const RunConfig& config, std::ostream& out);
int cmd_verify_matching(const RunConfig& config, const std::string& rule, const std::string& dump_path,
                        std::ostream& out);
int cmd_verify_theorems(const std::vector<std::string>& selectors, const SuiteOptions& options, std::ostream& out);
int cmd_bench(const RunConfig& config, const std::string& rule, std::ostream& out);
int cmd_tables(const RunConfig& config, bool deep, std::ostream& out, std::ostream& err);

}  // namespace maghom::cli
