#include "maghom/graph.hpp"
#include "maghom/integer.hpp"

#include <algorithm>
#include <deque>

namespace maghom {

namespace {

using Bitset = std::vector<char>;

std::vector<Bitset> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Bitset> adj(n, Bitset(n, 0));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  return adj;
}

// Calls check(x, y, z, w) on every ordered quadruple until it returns false.
template <class Check>
bool all_quadruples(std::size_t n, Check&& check) {
  for (Vertex x = 0; x < static_cast<Vertex>(n); ++x)
    for (Vertex y = 0; y < static_cast<Vertex>(n); ++y)
      for (Vertex z = 0; z < static_cast<Vertex>(n); ++z)
        for (Vertex w = 0; w < static_cast<Vertex>(n); ++w)
          if (!check(x, y, z, w)) return false;
  return true;
}

}  // namespace

bool is_tree(const Graph& g) { return g.is_connected() && g.edge_count() + 1 == g.vertex_count(); }

bool is_pawful(const Graph& g) {
  const DistanceMatrix d = apsp(g);
  if (d.diameter() > 2) return false;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) {
      for (Vertex v = 0; v < n; ++v) {
        if (d(u, v) != 2 || d(v, w) != 2) continue;
        bool apex = false;
        for (Vertex x : g.neighbors(u)) {
          if (g.adjacent(x, v) && g.adjacent(x, w)) {
            apex = true;
            break;
          }
        }
        if (!apex) return false;
      }
    }
  }
  return true;
}

bool is_geodetic(const Graph& g) {
  g.require_connected();
  const std::size_t n = g.vertex_count();
  std::vector<int> level(n);
  std::vector<Integer> paths(n);
  std::deque<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(level.begin(), level.end(), -1);
    std::fill(paths.begin(), paths.end(), Integer(0));
    level[s] = 0;
    paths[s] = 1;
    queue.assign(1, static_cast<Vertex>(s));
    while (!queue.empty()) {
      const auto u = static_cast<std::size_t>(queue.front());
      queue.pop_front();
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
        const auto vi = static_cast<std::size_t>(v);
        if (level[vi] < 0) {
          level[vi] = level[u] + 1;
          queue.push_back(v);
        }
        if (level[vi] == level[u] + 1) paths[vi] += paths[u];
      }
    }
    for (const Integer& count : paths)
      if (count != 1) return false;
  }
  return true;
}

bool is_ptolemaic(const Graph& g) {
  const DistanceMatrix d = apsp(g);
  return all_quadruples(g.vertex_count(), [&](Vertex x, Vertex y, Vertex z, Vertex w) {
    return d(x, y) * d(z, w) + d(y, z) * d(x, w) >= d(x, z) * d(y, w);
  });
}

bool ptolemaic_char2(const Graph& g) {
  const DistanceMatrix d = apsp(g);
  return all_quadruples(g.vertex_count(), [&](Vertex x, Vertex y, Vertex z, Vertex w) {
    if (y == z || d(x, y) + d(y, z) != d(x, z) || d(y, z) + d(z, w) != d(y, w)) return true;
    return d(x, y) + d(y, z) + d(z, w) == d(x, w);
  });
}

bool ptolemaic_char3(const Graph& g) {
  const DistanceMatrix d = apsp(g);
  return all_quadruples(g.vertex_count(), [&](Vertex x, Vertex y, Vertex z, Vertex w) {
    if (d(x, y) != 1 || d(y, z) != 1 || d(x, z) != 2 || d(y, z) + d(z, w) != d(y, w)) return true;
    return d(x, y) + d(y, z) + d(z, w) == d(x, w);
  });
}

// Maximum cardinality search, then verify the resulting order is a perfect
// elimination ordering.
bool is_chordal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<int> number(n, -1);
  for (int next = static_cast<int>(n) - 1; next >= 0; --next) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (number[v] < 0 && (best == n || weight[v] > weight[best])) best = v;
    number[best] = next;
    for (Vertex u : g.neighbors(static_cast<Vertex>(best)))
      if (number[static_cast<std::size_t>(u)] < 0) ++weight[static_cast<std::size_t>(u)];
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
      if (number[static_cast<std::size_t>(u)] > number[v]) later.push_back(u);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.adjacent(later[i], later[j])) return false;
  }
  return true;
}

// Pruning characterization: a connected graph is distance-hereditary iff it
// reduces to one vertex by deleting pendant vertices and one of each twin pair.
bool is_distance_hereditary(const Graph& g) {
  g.require_connected();
  auto adj = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::size_t remaining = n;
  auto degree = [&](std::size_t v) {
    std::size_t deg = 0;
    for (std::size_t u = 0; u < n; ++u) deg += alive[u] && adj[v][u];
    return deg;
  };
  auto twins = [&](std::size_t a, std::size_t b) {
    for (std::size_t u = 0; u < n; ++u)
      if (alive[u] && u != a && u != b && adj[a][u] != adj[b][u]) return false;
    return true;
  };
  while (remaining > 1) {
    std::size_t victim = n;
    for (std::size_t v = 0; v < n && victim == n; ++v)
      if (alive[v] && degree(v) == 1) victim = v;
    for (std::size_t a = 0; a < n && victim == n; ++a)
      for (std::size_t b = a + 1; b < n && victim == n; ++b)
        if (alive[a] && alive[b] && twins(a, b)) victim = b;
    if (victim == n) return false;
    alive[victim] = 0;
    --remaining;
  }
  return true;
}

// Every biconnected component (Hopcroft-Tarjan, edge stack) must be a clique.
bool is_block_graph(const Graph& g) {
  g.require_connected();
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;
  bool ok = true;

  auto check_component = [&](Edge until) {
    std::vector<Vertex> verts;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e == until) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (!g.adjacent(verts[i], verts[j])) ok = false;
  };

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  disc[0] = low[0] = timer++;
  while (!stack.empty() && ok) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      const auto wi = static_cast<std::size_t>(w);
      if (disc[wi] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[wi] = low[wi] = timer++;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[wi] < disc[static_cast<std::size_t>(f.v)]) {
        edge_stack.emplace_back(f.v, w);
        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
      }
    } else {
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const auto p = static_cast<std::size_t>(done.parent);
        const auto vi = static_cast<std::size_t>(done.v);
        low[p] = std::min(low[p], low[vi]);
        if (low[vi] >= disc[p]) check_component({done.parent, done.v});
      }
    }
  }
  return ok;
}

}  // namespace maghom
