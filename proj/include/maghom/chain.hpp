#pragma once

#include "maghom/graph.hpp"
#include "maghom/morse.hpp"
#include "maghom/sparse_matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maghom {

inline constexpr std::size_t kDefaultGeneratorCap = 5'000'000;

/// A generator (x_0, ..., x_k) of the magnitude chain complex.
struct PathSequence {
  std::vector<Vertex> vertices;
  int ell = 0;

  int degree() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const PathSequence& a, const PathSequence& b) { return a.vertices == b.vertices; }
  friend auto operator<=>(const PathSequence& a, const PathSequence& b) { return a.vertices <=> b.vertices; }
};

int length_ell(std::span<const Vertex> vertices, const DistanceMatrix& d);
PathSequence make_sequence(std::vector<Vertex> vertices, const DistanceMatrix& d);

/// "(0,1,2)" using graph labels when given.
std::string format_sequence(std::span<const Vertex> vertices, const Graph* g = nullptr);

/// The generators I_{k,l} in lexicographic order, stored contiguously.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int k, int l) : k_(k), l_(l) {}

  int k() const { return k_; }
  int l() const { return l_; }
  std::size_t size() const { return k_ < 0 ? 0 : data_.size() / width(); }
  bool empty() const { return size() == 0; }

  std::span<const Vertex> operator[](std::size_t i) const {
    return {data_.data() + i * width(), width()};
  }
  PathSequence sequence(std::size_t i) const;
  std::optional<std::size_t> find(std::span<const Vertex> vertices) const;

  /// Appends; caller is responsible for keeping lexicographic order.
  void push_back(std::span<const Vertex> vertices);

 private:
  std::size_t width() const { return static_cast<std::size_t>(k_) + 1; }

  int k_ = 0;
  int l_ = 0;
  std::vector<Vertex> data_;
};

/// Enumerates I_{k,l}(G) by depth-first extension with budget pruning.
/// Throws GeneratorCapExceeded when |I_{k,l}| would exceed `cap`.
IndexSet enumerate_generators(const Graph& g, int k, int l, std::size_t cap = kDefaultGeneratorCap);
IndexSet enumerate_generators(const DistanceMatrix& d, int k, int l, std::size_t cap = kDefaultGeneratorCap);

/// Matrix of MC_{k,l} -> MC_{k-1,l} with columns indexed by `source` and rows
/// by `target`.
SparseIntegerMatrix boundary_matrix(const DistanceMatrix& d, const IndexSet& source, const IndexSet& target);
SparseIntegerMatrix boundary_matrix(const Graph& g, int k, int l, std::size_t cap = kDefaultGeneratorCap);

/// MC_{*,l}(G) with its generator bases; degrees run 0..l.
struct MagnitudeSlice {
  int l = 0;
  std::vector<IndexSet> bases;
  BasedComplex complex;
};

MagnitudeSlice magnitude_slice(const DistanceMatrix& d, int l, std::size_t cap = kDefaultGeneratorCap);

/// `k l rows cols` header followed by `row col value` lines.
void write_matrix_dump(std::ostream& out, int k, int l, const SparseIntegerMatrix& m);

/// Generator cap from MAGHOM_GENERATOR_CAP, or the default.
std::size_t generator_cap_from_env();

}  // namespace maghom
