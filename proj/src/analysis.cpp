#include "maghom/analysis.hpp"

#include "maghom/error.hpp"
#include "maghom/magnitude.hpp"

#include <algorithm>
#include <sstream>

namespace maghom {

std::string DiagonalityReport::verdict() const {
  if (diagonal) return "diagonal up to l=" + std::to_string(lmax);
  std::string s = "counterexample MH_{" + std::to_string(k) + "," + std::to_string(l) + "} rank " + std::to_string(rank);
  for (const auto& t : torsion) s += " +Z/" + t.str();
  return s;
}

DiagonalityReport diagonality_report(const HomologyTable& t) {
  DiagonalityReport r;
  r.graph = t.graph;
  r.lmax = t.lmax;
  for (int l = 0; l <= t.lmax; ++l)
    for (int k = 0; k < l; ++k) {
      const auto& h = t.at(k, l);
      if (h.is_zero()) continue;
      r.diagonal = false;
      r.k = k;
      r.l = l;
      r.rank = h.rank;
      r.torsion = h.torsion;
      return r;
    }
  return r;
}

DiagonalityReport diagonal_check(const Graph& g, int lmax, const TableOptions& options) {
  return diagonality_report(mh_table(g, lmax, options));
}

std::string check_morse_rule(const MatchingRule& rule, const Graph& g, int lmax, std::size_t cap) {
  auto v = validate_rule(rule, g, lmax);
  if (!v) return "invalid: " + v.violation;
  const auto d = apsp(g);
  for (int l = 0; l <= lmax; ++l) {
    auto slice = magnitude_slice(d, l, cap);
    auto m = generate_matching(rule, slice);
    if (auto mv = validate_matching(slice.complex, m); !mv) return "l=" + std::to_string(l) + ": " + mv.message;
    if (auto w = check_acyclic(slice.complex, m))
      return "cycle at l=" + std::to_string(l) + ": " + format_witness(slice, *w, &g);
  }
  return {};
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

const std::vector<std::string>& theorem_selectors() {
  static const std::vector<std::string> names{"trees", "pawful", "icosa", "odd", "even", "geopto", "appendixA"};
  return names;
}

namespace {

class Suite {
 public:
  Suite(std::string name, const SuiteOptions& options, const CheckSink& sink) : options_(options), sink_(sink) {
    report_.name = std::move(name);
  }

  int lmax(int fallback) const { return options_.lmax >= 0 ? options_.lmax : fallback; }

  TableOptions table_options(std::string method) const {
    TableOptions t;
    t.method = std::move(method);
    t.cap = options_.cap;
    t.threads = options_.threads;
    return t;
  }

  void check(std::string description, bool passed, std::string detail = {}) {
    CheckLine line{std::move(description), passed, std::move(detail)};
    if (sink_) sink_(line);
    report_.checks.push_back(std::move(line));
  }

  // Runs `body`, turning library errors into a failed check.
  template <class F>
  void guarded(const std::string& description, F body) {
    try {
      body();
    } catch (const Error& e) {
      check(description, false, e.what());
    }
  }

  // Rule validity, Morse property and diagonality of the naive table, plus
  // agreement of the reduced computation with the naive one.
  void diagonal_rule_family(const std::string& label, const Graph& g, const MatchingRule& rule,
                            const std::string& method, int l) {
    guarded(label, [&] {
      auto v = validate_rule(rule, g, l);
      std::string morse = check_morse_rule(rule, g, l, options_.cap);
      bool ok = v.valid && v.diagonal && morse.empty();
      std::string detail = !v.valid ? v.violation : !v.diagonal ? "not diagonal at " + v.first_non_diagonal : morse;
      auto naive = mh_table(g, l, table_options("naive"));
      auto report = diagonality_report(naive);
      if (ok && !report.diagonal) {
        ok = false;
        detail = report.verdict();
      }
      if (ok) {
        auto reduced = mh_table(g, l, table_options(method));
        reduced.method = naive.method;
        if (!(reduced == naive)) {
          ok = false;
          detail = "reduced homology differs from naive";
        }
      }
      check(label + ": rule valid, Morse, and diagonal up to l=" + std::to_string(l), ok, detail);
    });
  }

  SuiteReport take() { return std::move(report_); }

 private:
  const SuiteOptions& options_;
  const CheckSink& sink_;
  SuiteReport report_;
};

void trees_suite(Suite& s) {
  const int l = s.lmax(4);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : tree_classes(n)) s.diagonal_rule_family("tree " + t.name(), t, tree_rule(t), "morse:tree", l);
}

void pawful_suite(Suite& s) {
  const int l = s.lmax(4);
  for (const Graph& g : {complement(cycle_graph(6)), complement(cycle_graph(7)), join(path_graph(2), path_graph(3))}) {
    s.check(g.name() + " is pawful", is_pawful(g));
    s.diagonal_rule_family(g.name(), g, pawful_rule(g), "morse:pawful", l);
  }
  std::size_t joins = 0, failures = 0;
  std::string first;
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; a + b <= 5; ++b)
      for (const auto& g : graph_classes(a))
        for (const auto& h : graph_classes(b)) {
          ++joins;
          if (!is_pawful(join(g, h)) && failures++ == 0) first = g.name() + " * " + h.name();
        }
  s.check("join(G,H) pawful for all " + std::to_string(joins) + " pairs with |V| <= 5", failures == 0, first);
  s.check("C_5 is not pawful", !is_pawful(cycle_graph(5)));
}

void icosa_suite(Suite& s) {
  const int l = s.lmax(4);
  const Graph g = icosahedron();
  for (int chirality : {1, -1}) {
    const auto frame = icosahedral_frame(chirality);
    const auto& d = frame.distances;
    bool ok = true;
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = 0; v < 12; ++v)
        if (d(u, v) == 2) ok = ok && frame.gl(u, v) != frame.gr(u, v) && frame.gl(u, v) == frame.gr(v, u);
    s.check("chirality " + std::to_string(chirality) + ": g_L and g_R are distinct and swap under (u,v) -> (v,u)",
            ok);
  }
  for (int chirality : {1, -1})
    s.diagonal_rule_family("icosahedron, chirality " + std::string(chirality > 0 ? "+1" : "-1"), g,
                           icosahedral_rule(chirality), chirality > 0 ? "morse:icosa" : "morse:icosa-mirror", l);
}

void cycle_suite(Suite& s, bool odd) {
  const int l = s.lmax(5);
  for (int m : odd ? std::vector<int>{2, 3} : std::vector<int>{3, 4}) {
    const Graph g = cycle_graph(static_cast<std::size_t>(odd ? 2 * m + 1 : 2 * m));
    const std::string rule = odd ? "odd-cycle" : "even-cycle";
    s.guarded(g.name(), [&] {
      auto naive = mh_table(g, l, s.table_options("naive"));
      bool counts = true;
      std::string detail;
      for (int ll = 0; ll <= l; ++ll)
        for (int k = 0; k <= ll; ++k) {
          Integer expected = odd ? t_odd(m, k, ll) : t_even(m, k, ll);
          if (Integer(naive.rank(k, ll)) != expected && counts) {
            counts = false;
            detail = "MH_{" + std::to_string(k) + "," + std::to_string(ll) + "} rank " +
                     std::to_string(naive.rank(k, ll)) + ", recurrence " + expected.str();
          }
        }
      s.check(g.name() + ": ranks equal the recurrence up to l=" + std::to_string(l), counts, detail);
      s.check(g.name() + ": torsion-free up to l=" + std::to_string(l), naive.torsion_free());
      std::string morse = check_morse_rule(make_rule(rule, g), g, std::min(l, 4), kDefaultGeneratorCap);
      s.check(g.name() + ": " + rule + " rule valid and Morse up to l=" + std::to_string(std::min(l, 4)), morse.empty(),
              morse);
      std::vector<SliceStats> stats;
      auto reduced = mh_table(g, l, s.table_options("morse:" + rule), &stats);
      reduced.method = naive.method;
      s.check(g.name() + ": reduced homology equals naive", reduced == naive);
      if (!odd) {
        bool zero = std::all_of(stats.begin(), stats.end(), [](const SliceStats& st) { return st.zero_differentials; });
        s.check(g.name() + ": reduced differentials vanish", zero);
      }
    });
  }
}

void geopto_suite(Suite& s) {
  const int l = s.lmax(4);
  for (const Graph& g : {block3(), bowtie(), star_graph(3)})
    s.diagonal_rule_family(g.name(), g, geodetic_ptolemaic_rule(g), "morse:geopto", l);
  bool rejected = false;
  try {
    geodetic_ptolemaic_rule(cycle_graph(4));
  } catch (const PreconditionError&) {
    rejected = true;
  }
  s.check("C_4 rejected by the geodetic ptolemaic rule", rejected);
  std::size_t graphs = 0;
  std::string equiv_fail, block_fail;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& g : connected_graph_classes(n)) {
      ++graphs;
      const bool p = is_ptolemaic(g);
      if (equiv_fail.empty() &&
          !(p == ptolemaic_char2(g) && p == ptolemaic_char3(g) && p == (is_chordal(g) && is_distance_hereditary(g))))
        equiv_fail = g.name();
      if (block_fail.empty() && (is_geodetic(g) && p) != is_block_graph(g)) block_fail = g.name();
    }
  s.check("ptolemaic characterizations agree on all " + std::to_string(graphs) + " connected graphs with n <= 7",
          equiv_fail.empty(), equiv_fail);
  s.check("geodetic and ptolemaic iff block graph on the same corpus", block_fail.empty(), block_fail);
}

void appendix_suite(Suite& s) {
  const int l = s.lmax(4);
  const auto& refs = reference_tables();
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {2, 3}};
  const std::vector<RationalFunction> magnitudes{
      {{16}, {1, 6, 9}},
      {{20}, {1, 3, 6, 6, 3, 1}},
  };
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Graph& a = refs[pairs[p].first].graph;
    const Graph& b = refs[pairs[p].second].graph;
    s.guarded(a.name() + " / " + b.name(), [&] {
      auto sa = magnitude_series(a, 7), sb = magnitude_series(b, 7);
      s.check(a.name() + " and " + b.name() + ": magnitude series agree to order 6", sa == sb);
      s.check(a.name() + " and " + b.name() + ": magnitude is " + magnitudes[p].to_string(),
              speyer_magnitude(a) == magnitudes[p] && speyer_magnitude(b) == magnitudes[p] &&
                  magnitudes[p].expand(7) == sa);
      auto ta = mh_table(a, l, s.table_options("naive"));
      auto tb = mh_table(b, l, s.table_options("naive"));
      for (const auto* t : {&ta, &tb}) {
        const auto& ref = refs[t == &ta ? pairs[p].first : pairs[p].second];
        auto diff = compare_with_reference(*t, ref);
        s.check(ref.graph.name() + ": table rows l <= " + std::to_string(l) + " match the reference table",
                diff.empty(), diff.empty() ? "" : diff.front());
      }
      s.check(a.name() + " and " + b.name() + ": magnitude homology differs", !(ta.rows == tb.rows));
    });
  }
}

}  // namespace

SuiteReport verify_theorems(std::string_view selector, const SuiteOptions& options, const CheckSink& sink) {
  const auto& names = theorem_selectors();
  if (std::find(names.begin(), names.end(), selector) == names.end())
    throw UsageError("unknown theorem selector '" + std::string(selector) + "'");
  Suite s(std::string(selector), options, sink);
  if (selector == "trees") trees_suite(s);
  if (selector == "pawful") pawful_suite(s);
  if (selector == "icosa") icosa_suite(s);
  if (selector == "odd") cycle_suite(s, true);
  if (selector == "even") cycle_suite(s, false);
  if (selector == "geopto") geopto_suite(s);
  if (selector == "appendixA") appendix_suite(s);
  return s.take();
}

const std::vector<ReferenceTable>& reference_tables() {
  using Rows = std::vector<std::vector<std::size_t>>;
  static const std::vector<ReferenceTable> tables{
      {rook44(), Rows{{16}, {0, 96}, {0, 0, 432}, {0, 0, 0, 1728}, {0, 0, 0, 0, 6480}, {0, 0, 0, 0, 0, 23328},
                      {0, 0, 0, 0, 0, 0, 81648}}},
      {shrikhande(), Rows{{16}, {0, 96}, {0, 0, 432}, {0, 0, 0, 1728}, {0, 0, 0, 144, 6624},
                          {0, 0, 0, 0, 1632, 24960}, {0, 0, 0, 0, 0, 11824, 93472}}},
      {dodecahedron(), Rows{{20},
                            {0, 60},
                            {0, 0, 60},
                            {0, 0, 120, 60},
                            {0, 0, 60, 360, 60},
                            {0, 0, 0, 380, 600, 60},
                            {0, 0, 0, 60, 1320, 840, 60},
                            {0, 0, 0, 0, 1020, 3240, 1080, 60},
                            {0, 0, 0, 0, 180, 4620, 6120, 1320, 60}}},
      {desargues(), Rows{{20},
                         {0, 60},
                         {0, 0, 60},
                         {0, 0, 120, 60},
                         {0, 0, 0, 300, 60},
                         {0, 0, 0, 20, 240, 60},
                         {0, 0, 0, 0, 660, 240, 60},
                         {0, 0, 0, 0, 0, 1380, 240, 60},
                         {0, 0, 0, 0, 0, 300, 900, 240, 60}}},
  };
  return tables;
}

std::vector<std::string> compare_with_reference(const HomologyTable& t, const ReferenceTable& ref) {
  std::vector<std::string> out;
  for (int l = 0; l <= std::min(t.lmax, ref.max_l()); ++l)
    for (int k = 0; k <= l; ++k) {
      const std::size_t expected = ref.ranks[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
      if (t.rank(k, l) != expected)
        out.push_back("MH_{" + std::to_string(k) + "," + std::to_string(l) + "}: computed " +
                      std::to_string(t.rank(k, l)) + ", reference " + std::to_string(expected));
    }
  return out;
}

}  // namespace maghom
