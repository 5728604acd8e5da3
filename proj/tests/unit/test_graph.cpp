#include <doctest.h>

#include "maghom/error.hpp"
#include "maghom/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>

using namespace maghom;

namespace {

// Floyd-Warshall over the adjacency relation, kept independent of apsp().
std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v : g.neighbors(u)) d[u][v] = 1;
  }
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  return d;
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  while (true) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g = build_graph(static_cast<std::size_t>(n), edges);
    if (g.is_connected()) return g;
  }
}

// Distance-hereditary by definition: every connected induced subgraph is isometric.
bool dh_oracle(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  const auto full = floyd(g);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) keep.push_back(v);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (g.adjacent(keep[i], keep[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Graph sub = build_graph(keep.size(), edges);
    if (!sub.is_connected()) continue;
    const auto d = floyd(sub);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (d[i][j] != full[keep[i]][keep[j]]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_graph basics and errors") {
  Graph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}, {1, 0}});
  CHECK(k3.edge_count() == 3);
  CHECK(k3 == complete_graph(3));
  CHECK(k3 == cycle_graph(3));
  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), InvalidGraph);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), InvalidGraph);
  Graph split = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(split.is_connected());
  CHECK_THROWS_AS(apsp(split), InvalidGraph);
}

TEST_CASE("apsp small graphs") {
  CHECK(apsp(path_graph(3))(0, 2) == 2);
  auto c5 = apsp(cycle_graph(5));
  CHECK(c5(0, 2) == 2);
  CHECK(c5(0, 3) == 2);
  CHECK(apsp(icosahedron()).diameter() == 3);
}

TEST_CASE("apsp agrees with Floyd-Warshall and metric axioms") {
  std::vector<Graph> graphs = {icosahedron(), rook44(), shrikhande(), dodecahedron(), desargues(),
                               nonmorse6(),   block3(), bowtie(),     complement(cycle_graph(7))};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) graphs.push_back(random_connected(rng, 8, 0.35));
  for (const auto& g : graphs) {
    const auto d = apsp(g);
    const auto f = floyd(g);
    const int n = static_cast<int>(g.vertex_count());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        REQUIRE(d(u, v) == f[u][v]);
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.adjacent(u, v));
        for (int w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
      }
  }
}

TEST_CASE("named graphs") {
  Graph r = rook44();
  CHECK(r.vertex_count() == 16);
  auto dr = apsp(r);
  for (Vertex v = 0; v < 16; ++v) {
    CHECK(r.degree(v) == 6);
    auto p = dr.profile(v);
    CHECK(std::count(p.begin(), p.end(), 2) == 9);
  }
  Graph s = shrikhande();
  CHECK(s.vertex_count() == 16);
  CHECK(apsp(s).profile(3) == dr.profile(0));
  CHECK_FALSE(s == r);

  Graph dod = dodecahedron();
  auto dd = apsp(dod);
  for (Vertex v = 0; v < 20; ++v) {
    auto p = dd.profile(v);
    std::map<int, int> hist;
    for (int x : p) hist[x]++;
    CHECK(hist == std::map<int, int>{{0, 1}, {1, 3}, {2, 6}, {3, 6}, {4, 3}, {5, 1}});
  }
  Graph des = desargues();
  CHECK(des.vertex_count() == 20);
  CHECK(des.edge_count() == 30);
  CHECK(apsp(des).profile(0) == dd.profile(0));

  Graph ico = icosahedron();
  CHECK(ico.edge_count() == 30);
  auto coords = icosahedron_coordinates();
  for (auto [u, v] : ico.edges()) {
    double s2 = 0;
    for (int i = 0; i < 3; ++i) s2 += (coords[u][i] - coords[v][i]) * (coords[u][i] - coords[v][i]);
    CHECK(s2 == doctest::Approx(4.0));
  }

  CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
  CHECK(named_graph("cycle", std::vector<int>{5}) == cycle_graph(5));
  CHECK_THROWS_AS(named_graph("cycle", std::vector<int>{2}), UsageError);
  CHECK_THROWS_AS(named_graph("nosuch"), UsageError);
  CHECK(parse_graph_spec("complement(cycle(6))") == complement(cycle_graph(6)));
  CHECK(parse_graph_spec("join(path(2),path(3))").vertex_count() == 5);
  CHECK(parse_graph_spec("tree(0-1,0-2,0-3)") == star_graph(3));
  CHECK(parse_graph_spec("rook44") == rook44());
}

TEST_CASE("edge list round trip") {
  std::stringstream ss;
  write_edge_list(ss, icosahedron());
  CHECK(read_edge_list(ss) == icosahedron());
  std::istringstream bad("n 3\n0 1\n1 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), InvalidGraph);
  std::istringstream commented("# triangle\nn 3\n0 1 # first\n1 2\n\n2 0\n");
  CHECK(read_edge_list(commented) == complete_graph(3));
}

TEST_CASE("metric predicates on named graphs") {
  CHECK(is_pawful(complement(cycle_graph(6))));
  CHECK(is_pawful(join(path_graph(2), path_graph(3))));
  CHECK_FALSE(is_pawful(cycle_graph(5)));
  CHECK_FALSE(is_ptolemaic(cycle_graph(4)));
  CHECK(is_ptolemaic(bowtie()));
  CHECK(is_block_graph(block3()));
  CHECK(is_geodetic(block3()));
  CHECK_FALSE(is_geodetic(cycle_graph(4)));
  CHECK(is_geodetic(cycle_graph(5)));
  CHECK_FALSE(is_block_graph(cycle_graph(5)));
  Graph t = tree_graph(std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(is_tree(t));
  CHECK(is_geodetic(t));
  CHECK(is_ptolemaic(t));
  CHECK(is_block_graph(t));
  CHECK_FALSE(is_tree(cycle_graph(3)));
  CHECK(is_chordal(complete_graph(4)));
  CHECK_FALSE(is_chordal(cycle_graph(5)));
}

TEST_CASE("distance-hereditary agrees with induced-subgraph oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_connected(rng, 7, 0.4);
    CHECK(is_distance_hereditary(g) == dh_oracle(g));
  }
}

TEST_CASE("ptolemaic characterizations on random graphs up to 8 vertices") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    Graph g = random_connected(rng, 4 + i % 5, 0.45);
    bool p = is_ptolemaic(g);
    CHECK(p == ptolemaic_char2(g));
    CHECK(p == ptolemaic_char3(g));
    CHECK(p == (is_chordal(g) && is_distance_hereditary(g)));
    if (p && is_geodetic(g)) CHECK(is_block_graph(g));
  }
}
