#include <doctest.h>

#include "maghom/error.hpp"
#include "maghom/magnitude.hpp"
#include "maghom/rules.hpp"
#include "maghom/table.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace maghom;

namespace {

Graph relabeled(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  Graph h = build_graph(g.vertex_count(), edges);
  h.set_name(g.name());
  return h;
}

}  // namespace

TEST_CASE("single vertex") {
  auto t = mh_table(complete_graph(1), 2, "naive");
  CHECK(t.rank(0, 0) == 1);
  CHECK(t.at(0, 1).is_zero());
  CHECK(t.rank(5, 1) == 0);
  CHECK_THROWS_AS(t.at(2, 1), UsageError);
}

TEST_CASE("C_5 ranks follow the odd recurrence and the Euler characteristic") {
  auto g = cycle_graph(5);
  auto t = mh_table(g, 4, "naive");
  CHECK(t.torsion_free());
  CHECK(t.rank(1, 2) == 0);
  for (int l = 0; l <= 4; ++l) {
    CHECK(t.euler_characteristic(l) == chain_euler(g, l));
    for (int k = 0; k <= l; ++k) CHECK(Integer(t.rank(k, l)) == t_odd(2, k, l));
  }
  auto series = magnitude_series(g, 5);
  for (int l = 0; l <= 4; ++l) CHECK(Rational(t.euler_characteristic(l)) == series[static_cast<std::size_t>(l)]);
}

TEST_CASE("naive and Morse tables agree") {
  struct Case {
    Graph g;
    std::string method;
    int lmax;
  };
  for (const auto& c : {Case{cycle_graph(5), "morse:odd-cycle", 4}, Case{cycle_graph(6), "morse:even-cycle", 4},
                        Case{path_graph(4), "morse:tree", 4}, Case{bowtie(), "morse:geopto", 3},
                        Case{complement(cycle_graph(6)), "morse:pawful", 3}, Case{cycle_graph(4), "morse:empty", 3}}) {
    auto naive = mh_table(c.g, c.lmax, "naive");
    TableOptions options;
    options.method = c.method;
    options.cross_check = true;
    std::vector<SliceStats> stats;
    auto morse = mh_table(c.g, c.lmax, options, &stats);
    CHECK(morse.method == c.method);
    CHECK(morse.rows == naive.rows);
    REQUIRE(stats.size() == static_cast<std::size_t>(c.lmax) + 1);
    for (const auto& s : stats) {
      CHECK(s.full_dims.size() == static_cast<std::size_t>(s.l) + 1);
      for (std::size_t k = 0; k < s.full_dims.size(); ++k) CHECK(s.reduced_dims[k] <= s.full_dims[k]);
    }
  }
}

TEST_CASE("tree reductions have no differentials") {
  std::vector<SliceStats> stats;
  TableOptions options;
  options.method = "morse:tree";
  auto t = mh_table(path_graph(6), 4, options, &stats);
  for (const auto& s : stats) {
    CHECK(s.zero_differentials);
    CHECK(std::accumulate(s.reduced_dims.begin(), s.reduced_dims.end(), std::size_t{0}) == t.rank(s.l, s.l));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(mh_table(cycle_graph(5), 2, "fast"), UsageError);
  CHECK_THROWS_AS(mh_table(cycle_graph(5), 2, "morse:"), UsageError);
  CHECK_THROWS_AS(mh_table(cycle_graph(5), -1, "naive"), UsageError);
  CHECK_THROWS_AS(mh_table(cycle_graph(5), 2, "morse:pawful"), PreconditionError);
  CHECK_THROWS_AS(mh_table(nonmorse6(), 3, "morse:nonmorse6"), PreconditionError);
  CHECK_THROWS_AS(mh_table(disjoint_union(path_graph(2), path_graph(2)), 1, "naive"), InvalidGraph);
  TableOptions tiny;
  tiny.cap = 5;
  CHECK_THROWS_AS(mh_table(cycle_graph(5), 2, tiny), GeneratorCapExceeded);
}

TEST_CASE("tables do not depend on threading or vertex order") {
  const Graph g = complement(cycle_graph(7));
  TableOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = 4;
  auto a = mh_table(g, 3, serial);
  CHECK(a == mh_table(g, 3, parallel));
  for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(mh_table(relabeled(g, seed), 3, serial) == a);
}

TEST_CASE("serialization") {
  auto t = mh_table(cycle_graph(5), 3, "naive");
  CHECK(table_from_json(table_to_json(t)) == t);
  HomologyTable big;
  big.graph = "synthetic";
  big.method = "naive";
  big.lmax = 1;
  big.rows = {{HomologyGroup{3, {}}}, {HomologyGroup{}, HomologyGroup{1, {2, Integer("123456789012345678901234567890")}}}};
  CHECK(table_from_json(table_to_json(big)) == big);
  CHECK(table_to_json(big).find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK_THROWS_AS(table_from_json("{"), UsageError);
  CHECK_THROWS_AS(table_from_json(R"({"graph":"x","method":"naive","entries":[{"k":2,"l":1,"rank":1,"torsion":[]}]})"),
                  UsageError);

  auto pretty = format_table_pretty(t);
  CHECK(pretty.find("cycle(5)  [naive]\n") == 0);
  CHECK(pretty.find("\n   3  .  . 10 10\n") != std::string::npos);
  CHECK(format_group(big.at(1, 1)) == "1+Z/2+Z/123456789012345678901234567890");
  auto csv = format_table_csv(t);
  CHECK(csv.find("k,l,rank,torsion\n0,0,5,\n") == 0);
}
