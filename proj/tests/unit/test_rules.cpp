#include <doctest.h>

#include "maghom/chain.hpp"
#include "maghom/error.hpp"
#include "maghom/rules.hpp"

#include <algorithm>
#include <set>

using namespace maghom;

namespace {

std::vector<Vertex> seq(std::initializer_list<Vertex> v) { return v; }

bool morse_up_to(const MatchingRule& rule, const Graph& g, int lmax) {
  const auto d = apsp(g);
  for (int l = 0; l <= lmax; ++l) {
    auto slice = magnitude_slice(d, l);
    auto m = generate_matching(rule, slice);
    if (!validate_matching(slice.complex, m)) return false;
    if (check_acyclic(slice.complex, m)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("match states of the tree rule on P_3") {
  auto rule = tree_rule(path_graph(3));
  auto s = match_state(rule, seq({0, 2}));
  CHECK(s == MatchState{MatchState::Kind::InsertAt, 0, 1});
  CHECK(apply_state(seq({0, 2}), s) == seq({0, 1, 2}));
  auto t = match_state(rule, seq({0, 1, 2}));
  CHECK(t == MatchState{MatchState::Kind::DeleteAt, 1, -1});
  CHECK(apply_state(seq({0, 1, 2}), t) == seq({0, 2}));
  CHECK(match_state(rule, seq({1})).is_unmatched());
  CHECK_THROWS_AS(tree_rule(cycle_graph(4)), PreconditionError);
}

TEST_CASE("inconsistent outcomes are rejected") {
  MatchingRule bad{"bad", false, [](std::span<const Vertex> x) {
                     return x.size() == 2 ? RuleOutcome::insert(x[0]) : RuleOutcome::idle();
                   }, {}};
  CHECK_THROWS_AS(match_state(bad, seq({0, 1})), ConsistencyError);
  auto report = validate_rule(bad, path_graph(3), 2);
  CHECK_FALSE(report);
  CHECK(report.violation.find("(0,1)") == 0);

  MatchingRule lazy{"lazy", true, [](std::span<const Vertex>) { return RuleOutcome::idle(); }, {}};
  auto r2 = validate_rule(lazy, path_graph(3), 2);
  CHECK_FALSE(r2);
  CHECK_FALSE(r2.diagonal);
}

TEST_CASE("validity and diagonality reports") {
  for (const Graph& t : {path_graph(5), star_graph(4),
                         tree_graph(std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {4, 6}, {6, 7}})}) {
    auto r = validate_rule(tree_rule(t), t, 5);
    CHECK(r.valid);
    CHECK(r.diagonal);
  }
  CHECK_THROWS_AS(pawful_rule(cycle_graph(5)), PreconditionError);
  auto odd = validate_rule(odd_cycle_rule(2), cycle_graph(5), 5);
  CHECK(odd.valid);
  CHECK_FALSE(odd.diagonal);
  auto paw = validate_rule(pawful_rule(complement(cycle_graph(6))), complement(cycle_graph(6)), 4);
  CHECK(paw.valid);
  CHECK(paw.diagonal);
  Graph fan = join(complete_graph(1), path_graph(3));
  CHECK(validate_rule(pawful_rule(fan), fan, 4));
  CHECK(validate_rule(geodetic_ptolemaic_rule(bowtie()), bowtie(), 4));
  CHECK_THROWS_AS(geodetic_ptolemaic_rule(cycle_graph(4)), PreconditionError);
  CHECK(validate_rule(nonmorse6_rule(), nonmorse6(), 4));
}

TEST_CASE("pawful rule inserts x_{k-2} in the (1,2) distance pattern") {
  Graph g = complement(cycle_graph(6));
  auto d = apsp(g);
  auto rule = pawful_rule(g);
  CHECK(d(0, 2) == 1);
  CHECK(d(2, 3) == 2);
  CHECK(d(0, 3) == 1);
  CHECK(rule.evaluate(seq({0, 2, 3})) == RuleOutcome::insert(0));
}

TEST_CASE("pawful rule with alternate choices stays valid and Morse") {
  Graph g = complement(cycle_graph(7));
  auto d = apsp(g);
  const auto n = static_cast<Vertex>(g.vertex_count());
  PawfulChoices largest;
  largest.f = [&](Vertex u, Vertex v) {
    for (Vertex w = n - 1; w >= 0; --w)
      if (d(u, w) == 1 && d(v, w) == 1) return w;
    return Vertex{-1};
  };
  largest.g = [&](Vertex u, Vertex v, Vertex w) {
    for (Vertex x = n - 1; x >= 0; --x)
      if (d(u, x) == 1 && d(v, x) == 1 && d(w, x) == 1) return x;
    return Vertex{-1};
  };
  auto rule = pawful_rule(g, largest);
  CHECK(validate_rule(rule, g, 4));
  CHECK(morse_up_to(rule, g, 3));
  PawfulChoices broken = largest;
  broken.f = [](Vertex, Vertex) { return Vertex{0}; };
  CHECK_THROWS_AS(pawful_rule(g, broken), PreconditionError);
}

TEST_CASE("prefix matchings on small trees") {
  auto p3 = path_graph(3);
  auto d = apsp(p3);
  auto rule = tree_rule(p3);
  auto slice = magnitude_slice(d, 2);
  auto m = generate_matching(rule, slice);
  CHECK(m.unmatched_count(1) == 0);
  auto unmatched = enumerate_unmatched(rule, d, 2, 2);
  CHECK(unmatched.size() == 4);
  for (const auto& s : unmatched) CHECK(s.vertices[0] == s.vertices[2]);
  CHECK(enumerate_unmatched(rule, d, 3, 3).size() == 4);
  auto star = star_graph(3);
  CHECK(enumerate_unmatched(tree_rule(star), apsp(star), 2, 2).size() == 6);
  auto k1 = complete_graph(1);
  CHECK(enumerate_unmatched(tree_rule(k1), apsp(k1), 0, 0).size() == 1);
  for (const auto& name : rule_names()) {
    if (name.starts_with("icosa") || name == "nonmorse6") continue;
    Graph g = name == "odd-cycle" ? cycle_graph(5) : name == "even-cycle" ? cycle_graph(6)
              : name == "pawful"  ? complement(cycle_graph(6)) : path_graph(4);
    auto r = make_rule(name, g);
    CHECK(enumerate_unmatched(r, apsp(g), 0, 0).size() == g.vertex_count());
  }
  CHECK_THROWS_AS(make_rule("nosuch", p3), UsageError);
}

TEST_CASE("tree description of unmatched sequences") {
  for (const Graph& t : {path_graph(4), star_graph(3), tree_graph(std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}})}) {
    auto d = apsp(t);
    auto rule = tree_rule(t);
    for (int l = 0; l <= 4; ++l)
      for (int k = 0; k <= l; ++k) CHECK(enumerate_unmatched(rule, d, k, l) == described_unmatched_tree(t, k, l));
  }
}

TEST_CASE("icosahedral frame") {
  for (int chirality : {1, -1}) {
    auto frame = icosahedral_frame(chirality);
    const auto& d = frame.distances;
    int pairs = 0;
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = 0; v < 12; ++v) {
        if (d(u, v) != 2) continue;
        ++pairs;
        CHECK(frame.gl(u, v) != frame.gr(u, v));
        CHECK(frame.gl(u, v) == frame.gr(v, u));
        for (Vertex w : {frame.gl(u, v), frame.gr(u, v)}) CHECK((d(u, w) == 1 && d(v, w) == 1));
      }
    CHECK(pairs == 60);
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = 0; v < 12; ++v)
        for (Vertex w = 0; w < 12; ++w) {
          if (d(u, v) != 1 || d(v, w) != 2 || d(u, w) == 3) continue;
          const Vertex l = frame.gl(v, w), r = frame.gr(v, w);
          CHECK(d(l, u) != d(r, u));
          CHECK(d(u, frame.xi(u, v, w)) <= 1);
        }
    // zeta is well defined where rule (6) and rule (12) consult it.
    int tuples = 0;
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = 0; v < 12; ++v)
        for (Vertex w = 0; w < 12; ++w)
          for (Vertex x = 0; x < 12; ++x) {
            if (d(u, v) != 1 || d(v, w) != 1 || d(w, x) != 2 || d(v, x) != 3 || u == w) continue;
            ++tuples;
            CHECK(frame.zeta_unique(u, v, w, x).has_value());
          }
    CHECK(tuples > 0);
  }
}

TEST_CASE("icosahedral rule is valid and diagonal for both chiralities") {
  for (int chirality : {1, -1}) {
    auto rule = icosahedral_rule(chirality);
    auto r = validate_rule(rule, icosahedron(), 4);
    CHECK(r.valid);
    CHECK(r.diagonal);
    CHECK(morse_up_to(rule, icosahedron(), 3));
  }
}

TEST_CASE("signed distance and cycle helpers") {
  CHECK(signed_distance(5, 0, 3) == -2);
  CHECK(signed_distance(5, 3, 0) == 2);
  CHECK(signed_distance(6, 0, 3) == 3);
  CHECK(signed_distance(6, 3, 0) == 3);
  CHECK(signed_distance(6, 0, 4) == -2);
  // sigma(0,3) on C_6 goes in the positive direction.
  auto rule = even_cycle_rule(3);
  CHECK(rule.evaluate(seq({0, 3})) == RuleOutcome::insert(1));
  CHECK(rule.evaluate(seq({3, 0})) == RuleOutcome::insert(4));
  CHECK_FALSE(even_chi(3, 0, 1, 0));
  CHECK(is_special_sequence(3, seq({0})));
  CHECK_FALSE(is_special_sequence(3, seq({0, 1, 0})));
  CHECK(is_special_sequence(3, seq({0, 5, 3})));
  CHECK(special_prefix_length(3, seq({0, 1, 0})) == 0);
  CHECK_THROWS_AS(odd_cycle_rule(1), UsageError);
  CHECK_THROWS_AS(even_cycle_rule(2), UsageError);
}

TEST_CASE("cycle recurrences") {
  CHECK(t_odd(2, 0, 0) == 5);
  CHECK(t_odd(2, 1, 1) == 10);
  CHECK(t_odd(2, 2, 3) == 10);
  CHECK(t_odd(2, 1, 2) == 0);
  CHECK(t_odd(2, -1, 3) == 0);
  CHECK(t_even(3, 2, 3) == 6);
  CHECK(t_even(3, 0, 0) == 6);
  CHECK(t_even(3, 1, 1) == 12);
}

TEST_CASE("odd cycle unmatched sequences") {
  for (int m : {2, 3}) {
    auto g = cycle_graph(static_cast<std::size_t>(2 * m + 1));
    auto d = apsp(g);
    auto rule = odd_cycle_rule(m);
    for (int l = 0; l <= 5; ++l) {
      auto slice = magnitude_slice(d, l);
      for (int k = 0; k <= l; ++k) {
        auto unmatched = enumerate_unmatched(rule, d, k, l);
        CHECK(Integer(unmatched.size()) == t_odd(m, k, l));
        CHECK(unmatched == described_unmatched_odd(m, k, l));
        // no boundary terms leave an unmatched generator
        for (const auto& s : unmatched) {
          auto col = *slice.bases[static_cast<std::size_t>(k)].find(s.vertices);
          CHECK(slice.complex.differentials[static_cast<std::size_t>(k)].column(col).empty());
        }
      }
    }
  }
  CHECK(enumerate_unmatched(odd_cycle_rule(2), apsp(cycle_graph(5)), 2, 3).size() == 10);
}

TEST_CASE("even cycle unmatched sequences") {
  for (int m : {3, 4}) {
    auto g = cycle_graph(static_cast<std::size_t>(2 * m));
    auto d = apsp(g);
    auto rule = even_cycle_rule(m);
    for (int l = 0; l <= 5; ++l)
      for (int k = 0; k <= l; ++k) {
        auto unmatched = enumerate_unmatched(rule, d, k, l);
        CHECK(Integer(unmatched.size()) == t_even(m, k, l));
        CHECK(unmatched == described_unmatched_even(m, k, l));
        for (const auto& s : unmatched) {
          CHECK(special_prefix_length(m, s.vertices) * (m - 2) == 2 * (l - k));
          if (m == 3) {
            const int r = ((signed_distance(6, s.vertices.front(), s.vertices.back()) - 3 * (l - k)) % 6 + 6) % 6;
            CHECK((r == 0 || r == 1 || r == 5));
          }
        }
      }
  }
}

TEST_CASE("non-Morse example") {
  Graph g = nonmorse6();
  auto rule = nonmorse6_rule();
  auto d = apsp(g);
  auto slice = magnitude_slice(d, 3);
  auto m = generate_matching(rule, slice);
  REQUIRE(validate_matching(slice.complex, m));
  auto w = check_acyclic(slice.complex, m);
  REQUIRE(w.has_value());
  CHECK(is_valid_witness(slice.complex, m, *w));
  std::set<std::string> found;
  for (std::size_t i = 0; i < w->upper.size(); ++i) {
    found.insert(format_sequence(slice.bases[3][w->upper[i]], &g));
    found.insert(format_sequence(slice.bases[2][w->lower[i]], &g));
  }
  CHECK(found == std::set<std::string>{"(1,2,4,6)", "(1,2,6)", "(1,2,5,6)", "(1,5,6)", "(1,3,5,6)", "(1,3,6)",
                                       "(1,3,4,6)", "(1,4,6)"});
  auto shape = annotate_witness(slice, *w);
  CHECK(shape.bounds_hold);
  CHECK(shape.steps.size() == 4);
  CHECK(format_witness(slice, *w, &g).find("->") != std::string::npos);
}
