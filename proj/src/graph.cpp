#include "maghom/graph.hpp"

#include "maghom/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace maghom {

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

void Graph::require_connected() const {
  if (vertex_count() == 0) throw InvalidGraph("graph has no vertices");
  if (!is_connected()) {
    throw InvalidGraph("graph" + (name_.empty() ? std::string() : " '" + name_ + "'") +
                       " is disconnected");
  }
}

std::string Graph::label(Vertex v) const {
  if (static_cast<std::size_t>(v) < labels_.size()) return labels_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

Graph& Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count()) {
    throw InvalidGraph("label count does not match vertex count");
  }
  labels_ = std::move(labels);
  return *this;
}

int DistanceMatrix::diameter() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

std::vector<int> DistanceMatrix::profile(Vertex v) const {
  std::vector<int> out(data_.begin() + static_cast<std::ptrdiff_t>(index(v, 0)),
                       data_.begin() + static_cast<std::ptrdiff_t>(index(v, 0) + n_));
  std::sort(out.begin(), out.end());
  return out;
}

DistanceMatrix apsp(const Graph& g) {
  g.require_connected();
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n);
  std::vector<int> level(n);
  std::deque<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(level.begin(), level.end(), -1);
    level[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (level[static_cast<std::size_t>(v)] < 0) {
          level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) dist.at(static_cast<Vertex>(s), static_cast<Vertex>(t)) = level[t];
  }
  return dist;
}

}  // namespace maghom
