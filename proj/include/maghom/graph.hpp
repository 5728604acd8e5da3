#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maghom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency lists are sorted and symmetric. Connectivity is not enforced at
/// construction; homology-facing operations call require_connected().
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  void require_connected() const;

  /// Display label; defaults to the decimal index.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& name() const { return name_; }
  Graph& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }
  Graph& set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph from an edge list; duplicate edges are merged.
/// Throws InvalidGraph on self-loops or out-of-range endpoints.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// All-pairs shortest path distances of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return data_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return data_[index(u, v)]; }
  int diameter() const;

  /// Sorted list of distances from v to every vertex (including 0 for v).
  std::vector<int> profile(Vertex v) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  std::size_t n_ = 0;
  std::vector<int> data_;
};

/// Breadth-first search from every source. Throws InvalidGraph when
/// disconnected.
DistanceMatrix apsp(const Graph& g);

// Named constructors. Vertex labelings are fixed and documented in
// named_graphs.cpp; downstream code depends only on the isomorphism type and,
// for the icosahedron, on the embedding returned by icosahedron_coordinates().
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph tree_graph(std::span<const Edge> edges);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Graph icosahedron();
Graph rook44();
Graph shrikhande();
Graph dodecahedron();
Graph desargues();
/// Six-vertex graph carrying a valid prefix matching that is not Morse.
/// Labels are 1..6.
Graph nonmorse6();
/// Three cliques K3, K4, K2 glued in a chain at cut vertices.
Graph block3();
/// Two triangles sharing one vertex.
Graph bowtie();

/// Golden-ratio coordinates of the icosahedron() vertices, indexed by vertex.
std::vector<std::array<double, 3>> icosahedron_coordinates();

/// Graph from a name and integer/graph parameters; see parse_graph_spec for
/// the string form. Throws UsageError on unknown names or invalid parameters.
Graph named_graph(std::string_view name, std::span<const int> params = {});

/// Parses a graph spec such as "cycle(5)", "join(path(2),path(3))",
/// "complement(cycle(6))", "tree(0-1,1-2)", "edges(4:0-1,1-2,2-3)" or
/// "file:edges.txt".
Graph parse_graph_spec(std::string_view spec);
/// The "edges(n:u-v,...)" spec of g.
std::string edge_spec(const Graph& g);

/// Edge-list format: `n <count>` header, then `u v` per line, `#` comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Metric predicates. All require a connected graph.
bool is_tree(const Graph& g);
bool is_pawful(const Graph& g);
bool is_geodetic(const Graph& g);
bool is_ptolemaic(const Graph& g);
/// For y != z on a geodesic x-y-z-w overlap, the concatenation is a geodesic.
bool ptolemaic_char2(const Graph& g);
/// The same condition restricted to d(x,y) = d(y,z) = 1.
bool ptolemaic_char3(const Graph& g);
bool is_chordal(const Graph& g);
bool is_distance_hereditary(const Graph& g);
bool is_block_graph(const Graph& g);

}  // namespace maghom
