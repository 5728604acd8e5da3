#include "maghom/error.hpp"
#include "maghom/rules.hpp"

#include <array>
#include <map>
#include <memory>

namespace maghom {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

using Outcome = RuleOutcome;

// Geodesic successor table: sigma[u][v] is the neighbor of u on the unique
// shortest path to v, for d(u,v) >= 2.
std::vector<Vertex> unique_sigma(const Graph& g, const DistanceMatrix& d) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Vertex> sigma(static_cast<std::size_t>(n * n), -1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (d(u, v) < 2) continue;
      for (Vertex w : g.neighbors(u)) {
        if (d(w, v) != d(u, v) - 1) continue;
        if (sigma[static_cast<std::size_t>(u * n + v)] >= 0) {
          throw PreconditionError("shortest path from " + g.label(u) + " to " + g.label(v) + " is not unique");
        }
        sigma[static_cast<std::size_t>(u * n + v)] = w;
      }
    }
  return sigma;
}

MatchingRule sigma_rule(std::string name, const Graph& g) {
  struct Context {
    DistanceMatrix d;
    std::vector<Vertex> sigma;
    Vertex n;
    Vertex s(Vertex u, Vertex v) const { return sigma[static_cast<std::size_t>(u * n + v)]; }
  };
  auto ctx = std::make_shared<Context>();
  ctx->d = apsp(g);
  ctx->sigma = unique_sigma(g, ctx->d);
  ctx->n = static_cast<Vertex>(g.vertex_count());
  MatchingRule rule;
  rule.name = std::move(name);
  rule.diagonal = true;
  rule.evaluate = [ctx](std::span<const Vertex> x) {
    const std::size_t k = x.size() - 1;
    const auto& d = ctx->d;
    if (k >= 2 && d(x[k - 2], x[k]) >= 2 && x[k - 1] == ctx->s(x[k - 2], x[k])) return Outcome::remove();
    if (k >= 1 && d(x[k - 1], x[k]) >= 2) return Outcome::insert(ctx->s(x[k - 1], x[k]));
    return Outcome::idle();
  };
  return rule;
}

void require_cycle(const Graph& g, std::size_t n, const std::string& rule) {
  if (!(g == cycle_graph(n))) {
    throw PreconditionError("rule " + rule + " needs the cycle graph on " + std::to_string(n) + " vertices");
  }
}

}  // namespace

MatchingRule empty_rule() {
  MatchingRule rule;
  rule.name = "empty";
  rule.evaluate = [](std::span<const Vertex>) { return Outcome::idle(); };
  return rule;
}

MatchingRule tree_rule(const Graph& g) {
  if (!is_tree(g)) throw PreconditionError("tree rule needs a tree");
  return sigma_rule("tree", g);
}

MatchingRule geodetic_ptolemaic_rule(const Graph& g) {
  g.require_connected();
  if (!is_geodetic(g)) throw PreconditionError("geopto rule needs a geodetic graph");
  if (!is_ptolemaic(g)) throw PreconditionError("geopto rule needs a ptolemaic graph");
  return sigma_rule("geopto", g);
}

PawfulChoices default_pawful_choices(const Graph& g) {
  auto d = std::make_shared<DistanceMatrix>(apsp(g));
  const auto n = static_cast<Vertex>(g.vertex_count());
  PawfulChoices c;
  c.f = [d, n](Vertex u, Vertex v) {
    for (Vertex w = 0; w < n; ++w)
      if ((*d)(u, w) == 1 && (*d)(v, w) == 1) return w;
    return Vertex{-1};
  };
  c.g = [d, n](Vertex u, Vertex v, Vertex w) {
    for (Vertex x = 0; x < n; ++x)
      if ((*d)(u, x) == 1 && (*d)(v, x) == 1 && (*d)(w, x) == 1) return x;
    return Vertex{-1};
  };
  return c;
}

MatchingRule pawful_rule(const Graph& g) {
  MatchingRule rule = pawful_rule(g, default_pawful_choices(g));
  rule.metadata = {{"f", "smallest-index common neighbor"}, {"g", "smallest-index common neighbor of the triple"}};
  return rule;
}

MatchingRule pawful_rule(const Graph& g, const PawfulChoices& choices) {
  g.require_connected();
  if (!is_pawful(g)) throw PreconditionError("pawful rule needs a pawful graph");
  struct Context {
    DistanceMatrix d;
    Vertex n = 0;
    std::vector<Vertex> f;
    std::vector<Vertex> g;
    Vertex fv(Vertex u, Vertex v) const { return f[static_cast<std::size_t>(u * n + v)]; }
    Vertex gv(Vertex u, Vertex v, Vertex w) const {
      const Vertex x = g[static_cast<std::size_t>((u * n + v) * n + w)];
      if (x < 0) throw ConsistencyError("pawful g evaluated outside its domain");
      return x;
    }
  };
  auto ctx = std::make_shared<Context>();
  ctx->d = apsp(g);
  const auto n = ctx->n = static_cast<Vertex>(g.vertex_count());
  const auto& d = ctx->d;
  ctx->f.assign(static_cast<std::size_t>(n * n), -1);
  ctx->g.assign(static_cast<std::size_t>(n * n * n), -1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (d(u, v) != 2) continue;
      const Vertex w = choices.f(u, v);
      if (w < 0 || w >= n || d(u, w) != 1 || d(v, w) != 1) {
        throw PreconditionError("f choice for (" + g.label(u) + "," + g.label(v) + ") is not a common neighbor");
      }
      ctx->f[static_cast<std::size_t>(u * n + v)] = w;
      for (Vertex w2 = 0; w2 < n; ++w2) {
        if (d(v, w2) != 2 || d(u, w2) != 1) continue;
        const Vertex x = choices.g(u, v, w2);
        if (x < 0 || x >= n || d(u, x) != 1 || d(v, x) != 1 || d(w2, x) != 1) {
          throw PreconditionError("g choice for (" + g.label(u) + "," + g.label(v) + "," + g.label(w2) +
                                  ") is not a common neighbor");
        }
        ctx->g[static_cast<std::size_t>((u * n + v) * n + w2)] = x;
      }
    }
  MatchingRule rule;
  rule.name = "pawful";
  rule.diagonal = true;
  rule.evaluate = [ctx](std::span<const Vertex> x) {
    const std::size_t k = x.size() - 1;
    const auto& d = ctx->d;
    if (k == 1 && d(x[0], x[1]) == 2) return Outcome::insert(ctx->fv(x[0], x[1]));
    if (k >= 2 && d(x[k - 1], x[k]) == 2) {
      if (d(x[k - 2], x[k]) == 1) return Outcome::insert(x[k - 2]);
      if (d(x[k - 2], x[k]) == 2) return Outcome::insert(ctx->gv(x[k - 2], x[k], x[k - 1]));
    }
    if (k == 2 && d(x[0], x[2]) == 2 && x[1] == ctx->fv(x[0], x[2])) return Outcome::remove();
    if (k >= 3 && d(x[k - 2], x[k]) == 2) {
      if (d(x[k - 3], x[k]) == 1 && x[k - 3] == x[k - 1]) return Outcome::remove();
      if (d(x[k - 3], x[k]) == 2 && x[k - 1] == ctx->gv(x[k - 3], x[k], x[k - 2])) return Outcome::remove();
    }
    return Outcome::idle();
  };
  return rule;
}

Vertex IcosahedralFrame::xi(Vertex u, Vertex v, Vertex w) const {
  const Vertex l = gl(v, w), r = gr(v, w);
  return distances(r, u) < distances(l, u) ? r : l;
}

std::optional<Vertex> IcosahedralFrame::zeta_unique(Vertex u, Vertex, Vertex w, Vertex x) const {
  const Vertex l = gl(w, x), r = gr(w, x);
  if (distances(l, u) == distances(r, u)) return std::nullopt;
  return distances(l, u) < distances(r, u) ? l : r;
}

Vertex IcosahedralFrame::zeta(Vertex u, Vertex v, Vertex w, Vertex x) const {
  return zeta_unique(u, v, w, x).value_or(gl(w, x));
}

IcosahedralFrame icosahedral_frame(int chirality) {
  if (chirality != 1 && chirality != -1) throw UsageError("chirality must be +1 or -1");
  const Graph g = icosahedron();
  const auto coords = icosahedron_coordinates();
  IcosahedralFrame frame;
  frame.chirality = chirality;
  frame.distances = apsp(g);
  const auto& d = frame.distances;
  const Vertex n = 12;
  frame.f.resize(n);
  for (Vertex u = 0; u < n; ++u) frame.f[static_cast<std::size_t>(u)] = g.neighbors(u).front();
  frame.g_left.assign(n * n, -1);
  frame.g_right.assign(n * n, -1);
  auto det = [&](Vertex a, Vertex b, Vertex c) {
    const auto& p = coords[static_cast<std::size_t>(a)];
    const auto& q = coords[static_cast<std::size_t>(b)];
    const auto& r = coords[static_cast<std::size_t>(c)];
    return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) + p[2] * (q[0] * r[1] - q[1] * r[0]);
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (d(u, v) != 2) continue;
      std::vector<Vertex> common;
      for (Vertex w = 0; w < n; ++w)
        if (d(u, w) == 1 && d(v, w) == 1) common.push_back(w);
      if (common.size() != 2) throw ConsistencyError("icosahedron distance-2 pair without two common neighbors");
      const bool first_left = chirality * det(u, v, common[0]) > 0;
      frame.g_left[static_cast<std::size_t>(u * n + v)] = first_left ? common[0] : common[1];
      frame.g_right[static_cast<std::size_t>(u * n + v)] = first_left ? common[1] : common[0];
    }
  return frame;
}

MatchingRule icosahedral_rule(int chirality) {
  auto frame = std::make_shared<IcosahedralFrame>(icosahedral_frame(chirality));
  MatchingRule rule;
  rule.name = chirality > 0 ? "icosa" : "icosa-mirror";
  rule.diagonal = true;
  rule.metadata = {{"f", "smallest-index neighbor"},
                   {"chirality", chirality > 0 ? "g_L has positive det[u,v,w]" : "g_L has negative det[u,v,w]"},
                   {"xi ties", "g_L"},
                   {"zeta ties", "g_L"}};
  rule.evaluate = [frame](std::span<const Vertex> x) {
    const auto& F = *frame;
    const auto& d = F.distances;
    const std::size_t k = x.size() - 1;
    auto f = [&](Vertex u) { return F.f[static_cast<std::size_t>(u)]; };
    if (k == 1 && d(x[0], x[1]) == 3) return Outcome::insert(f(x[0]));
    if (k >= 2 && d(x[k - 1], x[k]) == 3) return Outcome::insert(x[k - 2]);
    if (k == 1 && d(x[0], x[1]) == 2) return Outcome::insert(F.gl(x[0], x[1]));
    if (k >= 2 && d(x[k - 1], x[k]) == 2 && d(x[k - 2], x[k]) != 3) {
      return Outcome::insert(F.xi(x[k - 2], x[k - 1], x[k]));
    }
    if (k == 2 && d(x[1], x[2]) == 2 && d(x[0], x[2]) == 3 && x[1] != f(x[0])) return Outcome::insert(F.gl(x[1], x[2]));
    if (k >= 3 && d(x[k - 1], x[k]) == 2 && d(x[k - 2], x[k]) == 3 && x[k - 1] != x[k - 3]) {
      return Outcome::insert(F.zeta(x[k - 3], x[k - 2], x[k - 1], x[k]));
    }
    if (k == 2 && d(x[0], x[2]) == 3 && x[1] == f(x[0])) return Outcome::remove();
    if (k >= 3 && d(x[k - 2], x[k]) == 3 && x[k - 3] == x[k - 1]) return Outcome::remove();
    if (k == 2 && d(x[0], x[2]) == 2 && x[1] == F.gl(x[0], x[2])) return Outcome::remove();
    if (k >= 3 && d(x[k - 2], x[k]) == 2 && d(x[k - 3], x[k]) != 3 && x[k - 1] == F.xi(x[k - 3], x[k - 2], x[k])) {
      return Outcome::remove();
    }
    if (k == 3 && d(x[1], x[3]) == 2 && d(x[0], x[3]) == 3 && x[1] != f(x[0]) && x[2] == F.gl(x[1], x[3])) {
      return Outcome::remove();
    }
    if (k >= 4 && d(x[k - 2], x[k]) == 2 && d(x[k - 3], x[k]) == 3 && x[k - 4] != x[k - 2] &&
        x[k - 1] == F.zeta(x[k - 4], x[k - 3], x[k - 2], x[k])) {
      return Outcome::remove();
    }
    return Outcome::idle();
  };
  return rule;
}

int signed_distance(int n, Vertex u, Vertex v) {
  int r = ((v - u) % n + n) % n;
  if (r > n / 2) r -= n;
  return r;
}

MatchingRule odd_cycle_rule(int m) {
  if (m < 2) throw UsageError("odd-cycle rule needs m >= 2");
  const int n = 2 * m + 1;
  auto d = std::make_shared<DistanceMatrix>(apsp(cycle_graph(static_cast<std::size_t>(n))));
  MatchingRule rule;
  rule.name = "odd-cycle";
  rule.metadata = {{"m", std::to_string(m)}};
  rule.evaluate = [d, n, m](std::span<const Vertex> x) {
    auto delta = [n](Vertex u, Vertex v) { return signed_distance(n, u, v); };
    auto sigma = [&](Vertex u, Vertex v) { return ((u + sgn(delta(u, v))) % n + n) % n; };
    auto chi = [&](Vertex u, Vertex v, Vertex w) {
      return sgn(delta(u, v)) == sgn(delta(v, w)) && (*d)(u, v) == 1 && (*d)(v, w) == m;
    };
    const std::size_t k = x.size() - 1;
    if (k >= 2 && (*d)(x[k - 2], x[k]) >= 2 && x[k - 1] == sigma(x[k - 2], x[k])) return Outcome::remove();
    if (k >= 1 && (*d)(x[k - 1], x[k]) >= 2 && !(k >= 2 && chi(x[k - 2], x[k - 1], x[k]))) {
      return Outcome::insert(sigma(x[k - 1], x[k]));
    }
    return Outcome::idle();
  };
  return rule;
}

bool even_chi(int m, Vertex u, Vertex v, Vertex w) {
  const int n = 2 * m;
  return signed_distance(n, u, v) == -1 && signed_distance(n, v, w) == -m + 1;
}

bool is_special_sequence(int m, std::span<const Vertex> x) {
  if (x.size() % 2 == 0) return false;
  for (std::size_t i = 0; i + 2 < x.size(); i += 2)
    if (!even_chi(m, x[i], x[i + 1], x[i + 2])) return false;
  return true;
}

int special_prefix_length(int m, std::span<const Vertex> x) {
  int j = 0;
  while (static_cast<std::size_t>(j) + 2 < x.size() && even_chi(m, x[j], x[j + 1], x[j + 2])) j += 2;
  return j;
}

MatchingRule even_cycle_rule(int m) {
  if (m < 3) throw UsageError("even-cycle rule needs m >= 3");
  const int n = 2 * m;
  auto d = std::make_shared<DistanceMatrix>(apsp(cycle_graph(static_cast<std::size_t>(n))));
  MatchingRule rule;
  rule.name = "even-cycle";
  rule.metadata = {{"m", std::to_string(m)}};
  rule.evaluate = [d, n, m](std::span<const Vertex> x) {
    auto delta = [n](Vertex u, Vertex v) { return signed_distance(n, u, v); };
    auto sigma = [&](Vertex u, Vertex v) { return ((u + sgn(delta(u, v))) % n + n) % n; };
    auto chi = [m](Vertex u, Vertex v, Vertex w) { return even_chi(m, u, v, w); };
    const std::size_t k = x.size() - 1;
    if (k >= 2 && (*d)(x[k - 2], x[k]) >= 2 && x[k - 1] == sigma(x[k - 2], x[k])) return Outcome::remove();
    if (k >= 3 && delta(x[k - 3], x[k - 2]) == 1 && chi(x[k - 2], x[k - 1], x[k])) return Outcome::remove();
    if (k >= 2 && chi(x[k - 1], x[k - 2], x[k])) return Outcome::insert(x[k - 2]);
    if (k >= 1 && (*d)(x[k - 1], x[k]) >= 2 && !(k >= 2 && chi(x[k - 2], x[k - 1], x[k]))) {
      return Outcome::insert(sigma(x[k - 1], x[k]));
    }
    return Outcome::idle();
  };
  return rule;
}

MatchingRule nonmorse6_rule() {
  // Labels 1..6 map to vertices 0..5.
  using Key = std::vector<Vertex>;
  auto table = std::make_shared<std::map<Key, Outcome>>(std::map<Key, Outcome>{
      {{0, 3}, Outcome::insert(1)},
      {{0, 1, 3}, Outcome::remove()},
      {{0, 4}, Outcome::insert(2)},
      {{0, 2, 4}, Outcome::remove()},
      {{0, 1, 5}, Outcome::insert(4)},
      {{0, 1, 4, 5}, Outcome::remove()},
      {{0, 2, 5}, Outcome::insert(3)},
      {{0, 2, 3, 5}, Outcome::remove()},
  });
  MatchingRule rule;
  rule.name = "nonmorse6";
  rule.evaluate = [table](std::span<const Vertex> x) {
    auto it = table->find(Key(x.begin(), x.end()));
    return it == table->end() ? Outcome::idle() : it->second;
  };
  return rule;
}

std::vector<std::string> rule_names() {
  return {"tree", "geopto", "pawful", "icosa", "icosa-mirror", "odd-cycle", "even-cycle", "nonmorse6", "empty"};
}

MatchingRule make_rule(const std::string& name, const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (name == "tree") return tree_rule(g);
  if (name == "geopto") return geodetic_ptolemaic_rule(g);
  if (name == "pawful") return pawful_rule(g);
  if (name == "empty") return empty_rule();
  if (name == "icosa" || name == "icosa-mirror") {
    if (!(g == icosahedron())) throw PreconditionError(name + " rule needs the built-in icosahedron");
    return icosahedral_rule(name == "icosa" ? 1 : -1);
  }
  if (name == "odd-cycle") {
    if (n < 5 || n % 2 == 0) throw PreconditionError("odd-cycle rule needs C_n with odd n >= 5");
    require_cycle(g, n, name);
    return odd_cycle_rule(static_cast<int>(n / 2));
  }
  if (name == "even-cycle") {
    if (n < 6 || n % 2 == 1) throw PreconditionError("even-cycle rule needs C_n with even n >= 6");
    require_cycle(g, n, name);
    return even_cycle_rule(static_cast<int>(n / 2));
  }
  if (name == "nonmorse6") {
    if (!(g == nonmorse6())) throw PreconditionError("nonmorse6 rule needs the nonmorse6 graph");
    return nonmorse6_rule();
  }
  throw UsageError("unknown rule '" + name + "'");
}

}  // namespace maghom
