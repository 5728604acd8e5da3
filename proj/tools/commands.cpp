#include "commands.hpp"

#include "maghom/error.hpp"
#include "maghom/magnitude.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace maghom::cli {

namespace {

using Json = nlohmann::ordered_json;

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty() || config.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw UsageError("cannot write '" + config.output + "'");
  file << text;
  file.flush();
  if (!file) throw UsageError("failed writing '" + config.output + "'");
}

std::string render(const HomologyTable& t, Format f) {
  switch (f) {
    case Format::Json: return table_to_json(t) + "\n";
    case Format::Csv: return format_table_csv(t);
    case Format::Pretty: break;
  }
  return format_table_pretty(t);
}

Graph load_graph(const RunConfig& config) {
  if (config.graph.empty()) throw UsageError("--graph is required");
  Graph g = parse_graph_spec(config.graph);
  g.require_connected();
  return g;
}

double time_seconds(auto&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t total(const std::vector<std::size_t>& v) {
  std::size_t s = 0;
  for (auto x : v) s += x;
  return s;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "pretty") return Format::Pretty;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown format '" + name + "' (expected pretty, json or csv)");
}

void RunConfig::validate() const {
  if (lmax < 0) throw UsageError("--max-l must be non-negative");
  if (cap < 1) throw UsageError("generator cap must be at least 1");
}

TableOptions RunConfig::table_options() const {
  TableOptions t;
  t.method = method;
  t.cap = cap;
  t.threads = threads;
  return t;
}

int cmd_magnitude(const RunConfig& config, std::size_t terms, bool speyer, std::ostream& out) {
  if (terms < 1) throw UsageError("--terms must be positive");
  const Graph g = load_graph(config);
  const auto series = magnitude_series(g, terms);
  std::optional<RationalFunction> closed;
  if (speyer) closed = speyer_magnitude(g);
  std::string text;
  if (config.format == Format::Json) {
    Json j;
    j["graph"] = g.name();
    Json coeffs = Json::array();
    for (const auto& c : series.coefficients()) coeffs.push_back(c.str());
    j["series"] = coeffs;
    if (closed) j["rational"] = closed->to_string();
    text = j.dump(2) + "\n";
  } else if (config.format == Format::Csv) {
    text = "l,coefficient\n";
    for (std::size_t i = 0; i < series.order(); ++i) text += std::to_string(i) + "," + series[i].str() + "\n";
  } else {
    text = g.name() + ": " + series.to_string() + "\n";
    if (closed) text += "closed form: " + closed->to_string() + "\n";
  }
  write_output(config, text, out);
  return kSuccess;
}

int cmd_homology(const RunConfig& config, std::ostream& out) {
  config.validate();
  const Graph g = load_graph(config);
  auto t = mh_table(g, config.lmax, config.table_options());
  for (int l = 0; l <= t.lmax; ++l)
    if (t.euler_characteristic(l) != chain_euler(g, l))
      throw ConsistencyError("Euler characteristic at l=" + std::to_string(l) + " disagrees with the chain count");
  write_output(config, render(t, config.format), out);
  return kSuccess;
}

int cmd_diagonal_check(const RunConfig& config, std::ostream& out) {
  config.validate();
  const Graph g = load_graph(config);
  auto r = diagonal_check(g, config.lmax, config.table_options());
  std::string text;
  if (config.format == Format::Json) {
    Json j;
    j["graph"] = r.graph;
    j["lmax"] = r.lmax;
    j["diagonal"] = r.diagonal;
    if (!r.diagonal) j["counterexample"] = {{"k", r.k}, {"l", r.l}, {"rank", r.rank}};
    j["verdict"] = r.verdict();
    text = j.dump(2) + "\n";
  } else {
    text = r.graph + ": " + r.verdict() + "\n";
  }
  write_output(config, text, out);
  return kSuccess;
}

int cmd_verify_matching(const RunConfig& config, const std::string& rule_name, const std::string& dump_path,
                        std::ostream& out) {
  config.validate();
  const Graph g = load_graph(config);
  const auto rule = make_rule(rule_name, g);
  const auto d = apsp(g);
  auto v = validate_rule(rule, g, config.lmax);
  out << "rule " << rule.name << " on " << g.name() << ", l <= " << config.lmax << "\n";
  out << "  sequences checked: " << v.sequences_checked << "\n";
  if (!v) {
    out << "  INVALID: " << v.violation << "\n";
    return kAssertionFailure;
  }
  out << "  valid\n";
  out << "  " << (v.diagonal ? "diagonal" : "not diagonal, first at " + v.first_non_diagonal) << "\n";
  std::ofstream dump;
  if (!dump_path.empty()) {
    dump.open(dump_path);
    if (!dump) throw UsageError("cannot write '" + dump_path + "'");
  }
  int status = kSuccess;
  for (int l = 0; l <= config.lmax; ++l) {
    auto slice = magnitude_slice(d, l, config.cap);
    auto m = generate_matching(rule, slice);
    if (auto mv = validate_matching(slice.complex, m); !mv) {
      out << "  l=" << l << ": BAD MATCHING " << mv.message << "\n";
      return kAssertionFailure;
    }
    out << "  l=" << l << ": " << m.size() << " pairs, unmatched";
    for (int k = 0; k <= l; ++k) out << ' ' << m.unmatched_count(k);
    if (auto w = check_acyclic(slice.complex, m)) {
      out << ", NOT MORSE\n    " << format_witness(slice, *w, &g) << "\n";
      status = kAssertionFailure;
    } else {
      out << ", acyclic\n";
    }
    if (dump) {
      for (const auto& p : m.pairs())
        dump << format_sequence(slice.bases[static_cast<std::size_t>(p.degree - 1)][p.lower], &g) << " <-> "
             << format_sequence(slice.bases[static_cast<std::size_t>(p.degree)][p.upper], &g) << "\n";
    }
  }
  return status;
}

int cmd_verify_theorems(const std::vector<std::string>& selectors, const SuiteOptions& options, std::ostream& out) {
  out << "seed " << options.seed << "\n";
  bool ok = true;
  for (const auto& name : selectors) {
    auto report = verify_theorems(name, options, [&](const CheckLine& c) {
      out << (c.passed ? "PASS " : "FAIL ") << name << ": " << c.description;
      if (!c.passed && !c.detail.empty()) out << " (" << c.detail << ")";
      out << std::endl;
    });
    ok = ok && report.passed();
  }
  return ok ? kSuccess : kAssertionFailure;
}

int cmd_bench(const RunConfig& config, const std::string& rule, std::ostream& out) {
  config.validate();
  const Graph g = load_graph(config);
  TableOptions naive = config.table_options(), morse = config.table_options(), empty = config.table_options();
  naive.method = "naive";
  morse.method = "morse:" + rule;
  empty.method = "morse:empty";
  std::vector<SliceStats> naive_stats, morse_stats;
  HomologyTable tn, tm, te;
  const double naive_s = time_seconds([&] { tn = mh_table(g, config.lmax, naive, &naive_stats); });
  const double morse_s = time_seconds([&] { tm = mh_table(g, config.lmax, morse, &morse_stats); });
  te = mh_table(g, config.lmax, empty);
  out << g.name() << ", rule " << rule << ", l <= " << config.lmax << "\n";
  out << std::setw(3) << "l" << std::setw(12) << "generators" << std::setw(12) << "reduced" << std::setw(12) << "naive s"
      << std::setw(12) << "morse s" << "  reduced d = 0\n";
  for (int l = 0; l <= config.lmax; ++l) {
    const auto& a = naive_stats[static_cast<std::size_t>(l)];
    const auto& b = morse_stats[static_cast<std::size_t>(l)];
    out << std::setw(3) << l << std::setw(12) << total(a.full_dims) << std::setw(12) << total(b.reduced_dims)
        << std::setw(12) << std::fixed << std::setprecision(4) << a.build_seconds + a.homology_seconds
        << std::setw(12) << b.build_seconds + b.reduce_seconds + b.homology_seconds << "  "
        << (b.zero_differentials ? "yes" : "no") << "\n";
    out << "    reduced dims at l=" << l << ":";
    for (auto x : b.reduced_dims) out << ' ' << x;
    out << "\n";
  }
  out << std::setprecision(3) << "total naive " << naive_s << " s, morse " << morse_s << " s\n";
  const bool agree = tn.rows == tm.rows && tn.rows == te.rows;
  out << (agree ? "naive, empty matching and reduced tables agree\n" : "TABLES DISAGREE\n");
  return agree ? kSuccess : kAssertionFailure;
}

int cmd_tables(const RunConfig& config, bool deep, std::ostream& out, std::ostream& err) {
  config.validate();
  constexpr int kShallow = 4;
  int lmax = config.lmax;
  if (lmax > kShallow && !deep) {
    err << "warning: capping at l=" << kShallow << "; pass --deep for higher rows\n";
    lmax = kShallow;
  }
  if (deep && lmax > kShallow) err << "warning: rows beyond l=" << kShallow << " may take a long time\n";
  bool ok = true;
  std::string text;
  for (const auto& ref : reference_tables()) {
    if (!config.graph.empty() && parse_graph_spec(config.graph) != ref.graph) continue;
    auto t = mh_table(ref.graph, lmax, config.table_options());
    auto diff = compare_with_reference(t, ref);
    text += render(t, config.format);
    if (config.format == Format::Pretty) {
      text += diff.empty() ? "matches the reference table for l <= " + std::to_string(std::min(lmax, ref.max_l())) + "\n"
                           : "MISMATCH\n";
      for (const auto& line : diff) text += "  " + line + "\n";
      text += "\n";
    }
    ok = ok && diff.empty();
  }
  write_output(config, text, out);
  return ok ? kSuccess : kAssertionFailure;
}

}  // namespace maghom::cli
