#include "maghom/corpus.hpp"

#include "maghom/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

namespace maghom {

namespace {

constexpr std::size_t kMaxCorpusOrder = 8;

using Adjacency = std::vector<std::uint32_t>;

int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint64_t encode(const Adjacency& adj, const std::vector<int>& perm) {
  const int n = static_cast<int>(adj.size());
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> perm[static_cast<std::size_t>(j)] & 1)
        code |= std::uint64_t{1} << pair_bit(i, j);
  return code;
}

// Minimum code over labelings that list vertices by (degree, sorted neighbour
// degrees); only permutations inside each invariant cell are tried.
std::uint64_t canonical(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& k = key[static_cast<std::size_t>(v)];
    k.push_back(std::popcount(adj[static_cast<std::size_t>(v)]));
    std::vector<int> nd;
    for (int w = 0; w < n; ++w)
      if (adj[static_cast<std::size_t>(v)] >> w & 1) nd.push_back(std::popcount(adj[static_cast<std::size_t>(w)]));
    std::sort(nd.begin(), nd.end());
    k.insert(k.end(), nd.begin(), nd.end());
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return std::tie(key[static_cast<std::size_t>(a)], a) < std::tie(key[static_cast<std::size_t>(b)], b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < perm.size();) {
    std::size_t j = i;
    while (j < perm.size() && key[static_cast<std::size_t>(perm[j])] == key[static_cast<std::size_t>(perm[i])]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto visit = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, encode(adj, perm));
      return;
    }
    auto [b, e] = cells[cell];
    std::sort(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e));
    do self(self, cell + 1);
    while (std::next_permutation(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e)));
  };
  visit(visit, 0);
  return best;
}

Adjacency adjacency_of(const Graph& g) {
  Adjacency adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  return adj;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int j = 1; j < static_cast<int>(n); ++j)
    for (int i = 0; i < j; ++i)
      if (code >> pair_bit(i, j) & 1) edges.emplace_back(i, j);
  Graph g = build_graph(n, edges);
  g.set_name(edge_spec(g));
  return g;
}

void require_order(std::size_t n) {
  if (n < 1 || n > kMaxCorpusOrder)
    throw UsageError("corpus order must be in 1.." + std::to_string(kMaxCorpusOrder));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  require_order(g.vertex_count());
  return canonical(adjacency_of(g));
}

std::vector<Graph> graph_classes(std::size_t n) {
  require_order(n);
  std::set<std::uint64_t> codes{0};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : codes) {
      Adjacency base = adjacency_of(graph_from_code(m - 1, code));
      base.push_back(0);
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        Adjacency adj = base;
        adj[m - 1] = mask;
        for (std::size_t v = 0; v + 1 < m; ++v)
          if (mask >> v & 1) adj[v] |= 1u << (m - 1);
        next.insert(canonical(adj));
      }
    }
    codes = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> connected_graph_classes(std::size_t n) {
  auto all = graph_classes(n);
  std::erase_if(all, [](const Graph& g) { return !g.is_connected(); });
  return all;
}

std::vector<Graph> tree_classes(std::size_t n) {
  auto all = connected_graph_classes(n);
  std::erase_if(all, [n](const Graph& g) { return g.edge_count() + 1 != n; });
  return all;
}

std::vector<Graph> random_connected_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, double p,
                                           std::uint64_t seed) {
  if (min_n < 1 || min_n > max_n) throw UsageError("bad vertex range for random graphs");
  if (!(p > 0 && p <= 1)) throw UsageError("edge probability must be in (0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(min_n, max_n);
  std::bernoulli_distribution coin(p);
  std::vector<Graph> out;
  while (out.size() < count) {
    const std::size_t n = order(rng);
    std::vector<Edge> edges;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
      for (Vertex i = 0; i < j; ++i)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g = build_graph(n, edges);
    if (!g.is_connected()) continue;
    g.set_name(edge_spec(g));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace maghom
