#include "maghom/chain.hpp"

#include "maghom/error.hpp"
#include "maghom/magnitude.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace maghom {

int length_ell(std::span<const Vertex> vertices, const DistanceMatrix& d) {
  int total = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) total += d(vertices[i - 1], vertices[i]);
  return total;
}

PathSequence make_sequence(std::vector<Vertex> vertices, const DistanceMatrix& d) {
  PathSequence s;
  s.ell = length_ell(vertices, d);
  s.vertices = std::move(vertices);
  return s;
}

std::string format_sequence(std::span<const Vertex> vertices, const Graph* g) {
  std::string out = "(";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += g ? g->label(vertices[i]) : std::to_string(vertices[i]);
  }
  return out + ")";
}

PathSequence IndexSet::sequence(std::size_t i) const {
  auto v = (*this)[i];
  PathSequence s;
  s.vertices.assign(v.begin(), v.end());
  s.ell = l_;
  return s;
}

std::optional<std::size_t> IndexSet::find(std::span<const Vertex> vertices) const {
  if (vertices.size() != width()) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto s = (*this)[mid];
    if (std::lexicographical_compare(s.begin(), s.end(), vertices.begin(), vertices.end())) lo = mid + 1;
    else hi = mid;
  }
  if (lo < size() && std::ranges::equal((*this)[lo], vertices)) return lo;
  return std::nullopt;
}

void IndexSet::push_back(std::span<const Vertex> vertices) {
  if (vertices.size() != width()) throw ConsistencyError("sequence length does not match index set degree");
  data_.insert(data_.end(), vertices.begin(), vertices.end());
}

namespace {

void extend(const DistanceMatrix& d, int k, int l, std::vector<Vertex>& prefix, int used, IndexSet& out) {
  const int steps = static_cast<int>(prefix.size()) - 1;
  if (steps == k) {
    if (used == l) out.push_back(prefix);
    return;
  }
  const int remaining = k - steps;
  const auto n = static_cast<Vertex>(d.size());
  const Vertex last = prefix.back();
  for (Vertex w = 0; w < n; ++w) {
    if (w == last) continue;
    const int next = used + d(last, w);
    // each later step costs at least one
    if (next + (remaining - 1) > l) continue;
    prefix.push_back(w);
    extend(d, k, l, prefix, next, out);
    prefix.pop_back();
  }
}

}  // namespace

IndexSet enumerate_generators(const Graph& g, int k, int l, std::size_t cap) {
  return enumerate_generators(apsp(g), k, l, cap);
}

IndexSet enumerate_generators(const DistanceMatrix& d, int k, int l, std::size_t cap) {
  IndexSet out(k, l);
  if (k < 0 || l < 0 || k > l || (k == 0 && l != 0)) return out;
  const Integer count = generator_count(d, k, l);
  if (count > cap) {
    throw GeneratorCapExceeded("I_{" + std::to_string(k) + "," + std::to_string(l) + "} has " + to_string(count) +
                               " generators, above the cap of " + std::to_string(cap));
  }
  std::vector<Vertex> prefix;
  prefix.reserve(static_cast<std::size_t>(k) + 1);
  for (Vertex v = 0; v < static_cast<Vertex>(d.size()); ++v) {
    prefix.assign(1, v);
    extend(d, k, l, prefix, 0, out);
  }
  return out;
}

SparseIntegerMatrix boundary_matrix(const DistanceMatrix& d, const IndexSet& source, const IndexSet& target) {
  const int k = source.k();
  std::vector<SparseIntegerMatrix::Triplet> triplets;
  std::vector<Vertex> face;
  for (std::size_t c = 0; c < source.size(); ++c) {
    auto x = source[c];
    for (int i = 1; i < k; ++i) {
      const Vertex a = x[i - 1], b = x[i], e = x[i + 1];
      if (d(a, b) + d(b, e) != d(a, e)) continue;
      face.assign(x.begin(), x.end());
      face.erase(face.begin() + i);
      auto row = target.find(face);
      if (!row) throw ConsistencyError("face " + format_sequence(face) + " missing from target basis");
      triplets.emplace_back(static_cast<int>(*row), static_cast<int>(c), Integer(i % 2 == 0 ? 1 : -1));
    }
  }
  return SparseIntegerMatrix::from_triplets(target.size(), source.size(), triplets);
}

SparseIntegerMatrix boundary_matrix(const Graph& g, int k, int l, std::size_t cap) {
  const DistanceMatrix d = apsp(g);
  return boundary_matrix(d, enumerate_generators(d, k, l, cap), enumerate_generators(d, k - 1, l, cap));
}

MagnitudeSlice magnitude_slice(const DistanceMatrix& d, int l, std::size_t cap) {
  MagnitudeSlice slice;
  slice.l = l;
  slice.complex.grading = l;
  for (int k = 0; k <= l; ++k) {
    slice.bases.push_back(enumerate_generators(d, k, l, cap));
    slice.complex.dims.push_back(slice.bases.back().size());
  }
  slice.complex.differentials.emplace_back(0, slice.complex.dims[0]);
  for (int k = 1; k <= l; ++k) {
    slice.complex.differentials.push_back(boundary_matrix(d, slice.bases[static_cast<std::size_t>(k)],
                                                          slice.bases[static_cast<std::size_t>(k) - 1]));
  }
  return slice;
}

void write_matrix_dump(std::ostream& out, int k, int l, const SparseIntegerMatrix& m) {
  out << k << ' ' << l << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& [r, c, v] : m.triplets()) out << r << ' ' << c << ' ' << v << '\n';
}

std::size_t generator_cap_from_env() {
  const char* raw = std::getenv("MAGHOM_GENERATOR_CAP");
  if (!raw || !*raw) return kDefaultGeneratorCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw UsageError("MAGHOM_GENERATOR_CAP must be a positive integer");
  return static_cast<std::size_t>(value);
}

}  // namespace maghom
