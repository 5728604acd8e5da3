#include "commands.hpp"

#include "maghom/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace maghom;
using namespace maghom::cli;

namespace {

void add_graph_options(CLI::App* cmd, RunConfig& config, std::string& format, bool with_method = true) {
  cmd->add_option("-g,--graph", config.graph, "Graph spec, e.g. cycle(5) or file:edges.txt")->required();
  cmd->add_option("-l,--max-l", config.lmax, "Largest length grading")->check(CLI::NonNegativeNumber);
  if (with_method) cmd->add_option("-m,--method", config.method, "naive or morse:<rule>");
  cmd->add_option("-o,--out", config.output, "Output file (default stdout)");
  cmd->add_option("-f,--format", format, "pretty, json or csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
  cmd->add_option("-j,--threads", config.threads, "Concurrent l-slices (0 = all cores)");
  cmd->add_option("--cap", config.cap, "Generator cap per (k,l) (default MAGHOM_GENERATOR_CAP or 5000000)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnitude and magnitude homology of finite graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "maghom 0.1.0");

  RunConfig config;
  std::string format = "pretty";
  std::size_t terms = 8;
  bool speyer = false;
  std::string rule = "empty";
  std::string dump_path;
  bool deep = false;
  std::vector<std::string> selectors;
  SuiteOptions suite;

  try {
    config.cap = generator_cap_from_env();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto* magnitude = app.add_subcommand("magnitude", "Magnitude power series");
  magnitude->add_option("-g,--graph", config.graph, "Graph spec")->required();
  magnitude->add_option("-n,--terms", terms, "Number of series coefficients");
  magnitude->add_flag("--speyer", speyer, "Also print the closed form for vertex-transitive graphs");
  magnitude->add_option("-f,--format", format)->check(CLI::IsMember({"pretty", "json", "csv"}));
  magnitude->add_option("-o,--out", config.output);

  auto* homology = app.add_subcommand("homology", "Magnitude homology table");
  add_graph_options(homology, config, format);

  auto* diagonal = app.add_subcommand("diagonal-check", "Off-diagonal vanishing up to --max-l");
  add_graph_options(diagonal, config, format);

  auto* matching = app.add_subcommand("verify-matching", "Validity and Morse property of a matching rule");
  add_graph_options(matching, config, format, false);
  matching->add_option("-r,--rule", rule, "Rule name")->required();
  matching->add_option("--dump-matching", dump_path, "Write matched pairs to this file");

  auto* theorems = app.add_subcommand("verify-theorems", "Run the theorem verification suites");
  theorems->add_option("selectors", selectors, "trees pawful icosa odd even geopto appendixA (default: all)")
      ->check(CLI::IsMember(theorem_selectors()));
  theorems->add_option("-l,--max-l", suite.lmax, "Override each suite's grading bound");
  theorems->add_option("--seed", suite.seed, "Seed for randomized corpora");
  theorems->add_option("-j,--threads", suite.threads);

  auto* bench = app.add_subcommand("bench", "Compare naive and reduced computations");
  add_graph_options(bench, config, format, false);
  bench->add_option("-r,--rule", rule, "Rule used for the reduction");

  auto* tables = app.add_subcommand("tables", "Reproduce the reference magnitude homology tables");
  tables->add_option("-g,--graph", config.graph, "Restrict to one of the tabulated graphs");
  tables->add_option("-l,--max-l", config.lmax, "Largest row (capped at 4 without --deep)")
      ->check(CLI::NonNegativeNumber);
  tables->add_option("-m,--method", config.method);
  tables->add_option("-f,--format", format)->check(CLI::IsMember({"pretty", "json", "csv"}));
  tables->add_option("-o,--out", config.output);
  tables->add_option("-j,--threads", config.threads);
  tables->add_flag("--deep", deep, "Allow rows beyond l=4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    config.format = parse_format(format);
    suite.cap = config.cap;
    if (magnitude->parsed()) return cmd_magnitude(config, terms, speyer, std::cout);
    if (homology->parsed()) return cmd_homology(config, std::cout);
    if (diagonal->parsed()) return cmd_diagonal_check(config, std::cout);
    if (matching->parsed()) return cmd_verify_matching(config, rule, dump_path, std::cout);
    if (theorems->parsed()) {
      if (selectors.empty()) selectors = theorem_selectors();
      return cmd_verify_theorems(selectors, suite, std::cout);
    }
    if (bench->parsed()) return cmd_bench(config, rule, std::cout);
    if (tables->parsed()) {
      if (!tables->count("--max-l")) config.lmax = 4;
      return cmd_tables(config, deep, std::cout, std::cerr);
    }
  } catch (const GeneratorCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kAssertionFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
