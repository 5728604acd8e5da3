#include <doctest.h>

#include "maghom/chain.hpp"
#include "maghom/error.hpp"
#include "maghom/morse.hpp"

#include <algorithm>
#include <random>

using namespace maghom;

namespace {

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

// Greedy matching over boundary entries in random order.
Matching random_matching(const BasedComplex& c, std::mt19937_64& rng) {
  std::vector<MatchedPair> candidates;
  for (int k = 1; k <= c.top_degree(); ++k)
    for (const auto& [r, col, v] : c.differentials[static_cast<std::size_t>(k)].triplets())
      candidates.push_back({k, static_cast<std::size_t>(r), static_cast<std::size_t>(col)});
  std::shuffle(candidates.begin(), candidates.end(), rng);
  Matching m(c.dims);
  for (const auto& p : candidates)
    if (!m.is_matched(p.degree - 1, p.lower) && !m.is_matched(p.degree, p.upper)) m.add(p.degree, p.lower, p.upper);
  return m;
}

}  // namespace

TEST_CASE("matching validation") {
  auto d = apsp(path_graph(3));
  auto slice = magnitude_slice(d, 2);
  Matching empty(slice.complex.dims);
  CHECK(validate_matching(slice.complex, empty));
  CHECK_FALSE(check_acyclic(slice.complex, empty));

  Matching bad(slice.complex.dims);
  // (1,0,1) has zero boundary
  auto upper = *slice.bases[2].find(std::vector<Vertex>{1, 0, 1});
  bad.add(2, 0, upper);
  auto report = validate_matching(slice.complex, bad);
  CHECK_FALSE(report);
  CHECK(report.message.find("matched entry not an edge") != std::string::npos);

  Matching twice(slice.complex.dims);
  twice.add(2, 0, *slice.bases[2].find(std::vector<Vertex>{0, 1, 2}));
  twice.add(2, 0, *slice.bases[2].find(std::vector<Vertex>{2, 1, 0}));
  CHECK_FALSE(validate_matching(slice.complex, twice));
}

TEST_CASE("empty matching reduces to the input") {
  auto slice = magnitude_slice(apsp(cycle_graph(5)), 3);
  Matching empty(slice.complex.dims);
  auto r = reduce(slice.complex, empty);
  CHECK(r.complex.dims == slice.complex.dims);
  CHECK(r.complex.differentials == slice.complex.differentials);
}

TEST_CASE("random matchings: reduction preserves homology, cycles are genuine") {
  std::mt19937_64 rng(2024);
  int acyclic = 0, cyclic = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_connected(rng, 4 + trial % 3, 0.5);
    auto slice = magnitude_slice(apsp(g), 2 + trial % 3);
    Matching m = random_matching(slice.complex, rng);
    REQUIRE(validate_matching(slice.complex, m));
    if (auto w = check_acyclic(slice.complex, m)) {
      ++cyclic;
      CHECK(is_valid_witness(slice.complex, m, *w));
      CHECK_THROWS_AS(reduce(slice.complex, m), PreconditionError);
    } else {
      ++acyclic;
      auto r = reduce(slice.complex, m);
      CHECK_NOTHROW(r.complex.validate());
      CHECK(homology_equivalence_check(slice.complex, r));
    }
  }
  CHECK(acyclic > 0);
  CHECK(cyclic > 0);
}

TEST_CASE("generic complex: boundary of a square with a full matching") {
  // Vertices 0..3, edges 01,12,23,30 as a cellular circle.
  BasedComplex c;
  c.dims = {4, 4};
  c.differentials.emplace_back(0, 4);
  c.differentials.push_back(SparseIntegerMatrix::from_dense({{-1, 0, 0, 1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}}));
  c.validate();
  Matching m(c.dims);
  m.add(1, 1, 0);
  m.add(1, 2, 1);
  m.add(1, 3, 2);
  CHECK(validate_matching(c, m));
  CHECK_FALSE(check_acyclic(c, m));
  auto r = reduce(c, m);
  CHECK(r.complex.dims == std::vector<std::size_t>{1, 1});
  CHECK(r.complex.differentials[1].is_zero());
  CHECK(homology_equivalence_check(c, r));
  m.add(1, 0, 3);
  CHECK(check_acyclic(c, m).has_value());
}
