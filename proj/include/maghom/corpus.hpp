#pragma once

#include "maghom/graph.hpp"

#include <cstdint>
#include <vector>

namespace maghom {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// One representative per isomorphism class of graphs on exactly n vertices,
/// connected or not, n <= 8.
std::vector<Graph> graph_classes(std::size_t n);
/// Isomorphism classes of connected graphs on exactly n vertices.
std::vector<Graph> connected_graph_classes(std::size_t n);
/// Isomorphism classes of trees on exactly n vertices.
std::vector<Graph> tree_classes(std::size_t n);

/// Canonical adjacency code; equal exactly for isomorphic graphs (n <= 8).
std::uint64_t canonical_code(const Graph& g);

/// Connected graphs with n uniform in [min_n, max_n] and edge probability p,
/// resampled until connected. Deterministic in `seed`.
std::vector<Graph> random_connected_graphs(std::size_t count, std::size_t min_n, std::size_t max_n,
                                           double p = 0.4, std::uint64_t seed = kDefaultSeed);

}  // namespace maghom
