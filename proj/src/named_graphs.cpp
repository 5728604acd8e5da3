#include "maghom/error.hpp"
#include "maghom/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

namespace maghom {

namespace {

Graph named(Graph g, std::string name) {
  g.set_name(std::move(name));
  return g;
}

std::string edge_spec_of(int n, const std::vector<Edge>& edges) {
  std::string s = "edges(" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < edges.size(); ++i)
    s += (i ? "," : "") + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  return s + ")";
}

std::string size_name(const char* base, std::size_t n) { return std::string(base) + "(" + std::to_string(n) + ")"; }

template <class Generators>
Graph cayley_z4xz4(const Generators& gens) {
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (const auto& [ga, gb] : gens) {
        int u = 4 * a + b;
        int v = 4 * ((a + ga + 4) % 4) + (b + gb + 4) % 4;
        if (u < v) edges.emplace_back(u, v);
      }
    }
  }
  return build_graph(16, edges);
}

}  // namespace

Graph path_graph(std::size_t n) {
  if (n == 0) throw UsageError("path(n) needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return named(build_graph(n, edges), size_name("path", n));
}

// Vertex i is adjacent to i+1 (mod n); the cycle rules rely on this labeling.
Graph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("cycle(n) needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return named(build_graph(n, edges), size_name("cycle", n));
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw UsageError("complete(n) needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return named(build_graph(n, edges), size_name("complete", n));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return named(build_graph(leaves + 1, edges), size_name("star", leaves));
}

Graph tree_graph(std::span<const Edge> edges) {
  Vertex max_vertex = 0;
  for (const auto& [u, v] : edges) max_vertex = std::max({max_vertex, u, v});
  Graph g = build_graph(static_cast<std::size_t>(max_vertex) + 1, edges);
  if (!g.is_connected() || g.edge_count() + 1 != g.vertex_count()) {
    throw UsageError("tree(...) edges do not form a tree");
  }
  return named(std::move(g), "tree");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto offset = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  return named(build_graph(g.vertex_count() + h.vertex_count(), edges), "union(" + g.name() + "," + h.name() + ")");
}

Graph join(const Graph& g, const Graph& h) {
  const auto offset = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
      edges.emplace_back(static_cast<Vertex>(u), offset + static_cast<Vertex>(v));
  return named(build_graph(g.vertex_count() + h.vertex_count(), edges), "join(" + g.name() + "," + h.name() + ")");
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return named(build_graph(n, edges), "complement(" + g.name() + ")");
}

// Vertex order follows icosahedron_coordinates(): (0,±1,±φ), (±1,±φ,0),
// (±φ,0,±1) with signs enumerated (+,+), (+,-), (-,+), (-,-).
Graph icosahedron() {
  static constexpr std::array<Edge, 30> kEdges{{
      {0, 2},  {0, 4},  {0, 6},  {0, 8},  {0, 10}, {1, 3},  {1, 4},  {1, 6},  {1, 9},  {1, 11},
      {2, 5},  {2, 7},  {2, 8},  {2, 10}, {3, 5},  {3, 7},  {3, 9},  {3, 11}, {4, 6},  {4, 8},
      {4, 9},  {5, 7},  {5, 8},  {5, 9},  {6, 10}, {6, 11}, {7, 10}, {7, 11}, {8, 9},  {10, 11},
  }};
  return named(build_graph(12, kEdges), "icosahedron");
}

std::vector<std::array<double, 3>> icosahedron_coordinates() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pts;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) pts.push_back({0.0, s1, s2 * phi});
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) pts.push_back({s1, s2 * phi, 0.0});
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) pts.push_back({s1 * phi, 0.0, s2});
  return pts;
}

// Cayley graph on Z/4 x Z/4, vertex (a, b) -> 4a + b.
Graph rook44() {
  const std::array<std::pair<int, int>, 6> gens{{{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}}};
  return named(cayley_z4xz4(gens), "rook44");
}

Graph shrikhande() {
  const std::array<std::pair<int, int>, 6> gens{{{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}}};
  return named(cayley_z4xz4(gens), "shrikhande");
}

// LCF [10,7,4,-4,-7,10,-4,7,-7,4]^2 labeling.
Graph dodecahedron() {
  static constexpr std::array<Edge, 30> kEdges{{
      {0, 1},   {0, 10},  {0, 19},  {1, 2},   {1, 8},   {2, 3},   {2, 6},   {3, 4},   {3, 19},  {4, 5},
      {4, 17},  {5, 6},   {5, 15},  {6, 7},   {7, 8},   {7, 14},  {8, 9},   {9, 10},  {9, 13},  {10, 11},
      {11, 12}, {11, 18}, {12, 13}, {12, 16}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
  }};
  return named(build_graph(20, kEdges), "dodecahedron");
}

// LCF [5,-5,9,-9]^5 labeling.
Graph desargues() {
  static constexpr std::array<Edge, 30> kEdges{{
      {0, 1},   {0, 5},   {0, 19},  {1, 2},   {1, 16},  {2, 3},   {2, 11},  {3, 4},   {3, 14},  {4, 5},
      {4, 9},   {5, 6},   {6, 7},   {6, 15},  {7, 8},   {7, 18},  {8, 9},   {8, 13},  {9, 10},  {10, 11},
      {10, 19}, {11, 12}, {12, 13}, {12, 17}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
  }};
  return named(build_graph(20, kEdges), "desargues");
}

// Labels 1..6 sit on vertices 0..5. Edges 1-2, 1-3, 2-4, 2-5, 3-4, 3-5, 4-6, 5-6.
Graph nonmorse6() {
  Graph g = build_graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  g.set_labels({"1", "2", "3", "4", "5", "6"});
  return named(std::move(g), "nonmorse6");
}

Graph block3() {
  return named(build_graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}),
               "block3");
}

Graph bowtie() { return named(build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}), "bowtie"); }

Graph named_graph(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw UsageError(std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
    }
  };
  auto positive = [&](int value) {
    if (value < 0) throw UsageError(std::string(name) + ": negative parameter");
    return static_cast<std::size_t>(value);
  };
  if (name == "path") return need(1), path_graph(positive(params[0]));
  if (name == "cycle") return need(1), cycle_graph(positive(params[0]));
  if (name == "complete") return need(1), complete_graph(positive(params[0]));
  if (name == "star") return need(1), star_graph(positive(params[0]));
  static constexpr std::array<std::string_view, 8> fixed{"icosahedron", "rook44",    "shrikhande", "dodecahedron",
                                                         "desargues",   "nonmorse6", "block3",     "bowtie"};
  if (std::find(fixed.begin(), fixed.end(), name) == fixed.end())
    throw UsageError("unknown graph name '" + std::string(name) + "'");
  need(0);
  if (name == "icosahedron") return icosahedron();
  if (name == "rook44") return rook44();
  if (name == "shrikhande") return shrikhande();
  if (name == "dodecahedron") return dodecahedron();
  if (name == "desargues") return desargues();
  if (name == "nonmorse6") return nonmorse6();
  if (name == "block3") return block3();
  return bowtie();
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = graph();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("bad graph spec '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Graph graph() {
    skip_space();
    if (text_.substr(pos_).starts_with("file:")) {
      std::string path(text_.substr(pos_ + 5));
      pos_ = text_.size();
      return read_edge_list_file(path);
    }
    const std::string name = identifier();
    if (name == "join" || name == "union") {
      expect('(');
      Graph a = graph();
      expect(',');
      Graph b = graph();
      expect(')');
      return name == "join" ? join(a, b) : disjoint_union(a, b);
    }
    if (name == "complement") {
      expect('(');
      Graph a = graph();
      expect(')');
      return complement(a);
    }
    if (name == "tree") {
      expect('(');
      std::vector<Edge> edges;
      do {
        int u = integer();
        expect('-');
        int v = integer();
        edges.emplace_back(u, v);
      } while (accept(','));
      expect(')');
      return tree_graph(edges);
    }
    if (name == "edges") {
      expect('(');
      const int n = integer();
      expect(':');
      std::vector<Edge> edges;
      if (!accept(')')) {
        do {
          int u = integer();
          expect('-');
          int v = integer();
          edges.emplace_back(u, v);
        } while (accept(','));
        expect(')');
      }
      if (n < 1) fail("vertex count must be positive");
      try {
        return named(build_graph(static_cast<std::size_t>(n), edges), edge_spec_of(n, edges));
      } catch (const InvalidGraph& e) {
        fail(e.what());
      }
    }
    std::vector<int> params;
    if (accept('(')) {
      do params.push_back(integer());
      while (accept(','));
      expect(')');
    }
    return named_graph(name, params);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_spec(std::string_view spec) { return SpecParser(spec).parse(); }

std::string edge_spec(const Graph& g) { return edge_spec_of(static_cast<int>(g.vertex_count()), g.edges()); }

}  // namespace maghom
