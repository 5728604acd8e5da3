#include "maghom/morse.hpp"

#include "maghom/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace maghom {

SparseIntegerMatrix BasedComplex::differential(int k) const {
  if (k >= 0 && k <= top_degree() && static_cast<std::size_t>(k) < differentials.size()) {
    return differentials[static_cast<std::size_t>(k)];
  }
  return SparseIntegerMatrix(dim(k - 1), dim(k));
}

void BasedComplex::validate() const {
  if (differentials.size() != dims.size()) throw ConsistencyError("one differential per degree expected");
  for (int k = 0; k <= top_degree(); ++k) {
    const auto& d = differentials[static_cast<std::size_t>(k)];
    if (d.cols() != dim(k) || d.rows() != dim(k - 1)) {
      throw ConsistencyError("differential in degree " + std::to_string(k) + " has the wrong shape");
    }
    if (k >= 1) require_composite_zero(differentials[static_cast<std::size_t>(k - 1)], d);
  }
}

std::vector<HomologyGroup> complex_homology(const BasedComplex& c) {
  std::vector<SmithForm> forms;
  for (int k = 0; k <= c.top_degree() + 1; ++k) forms.push_back(smith_normal_form(c.differential(k)));
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= c.top_degree(); ++k) {
    out.push_back(homology_from_forms(c.dim(k), forms[static_cast<std::size_t>(k)],
                                      forms[static_cast<std::size_t>(k) + 1]));
  }
  return out;
}

Matching::Matching(const std::vector<std::size_t>& dims) {
  for (std::size_t n : dims) {
    up_.emplace_back(n, kNone);
    down_.emplace_back(n, kNone);
  }
}

void Matching::add(int degree, std::size_t lower, std::size_t upper) {
  const auto k = static_cast<std::size_t>(degree);
  if (degree < 1 || k >= up_.size() || lower >= up_[k - 1].size() || upper >= up_[k].size()) {
    conflicts_.push_back("pair out of range in degree " + std::to_string(degree));
    return;
  }
  auto taken = [&](std::size_t deg, std::size_t id) { return up_[deg][id] != kNone || down_[deg][id] != kNone; };
  if (taken(k - 1, lower) || taken(k, upper)) {
    conflicts_.push_back("generator matched twice: degree " + std::to_string(degree - 1) + " id " +
                         std::to_string(lower) + " / degree " + std::to_string(degree) + " id " +
                         std::to_string(upper));
    return;
  }
  up_[k - 1][lower] = upper;
  down_[k][upper] = lower;
  pairs_.push_back({degree, lower, upper});
}

std::optional<std::size_t> Matching::up_partner(int degree, std::size_t id) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= up_.size()) return std::nullopt;
  const std::size_t p = up_[static_cast<std::size_t>(degree)].at(id);
  return p == kNone ? std::nullopt : std::optional(p);
}

std::optional<std::size_t> Matching::down_partner(int degree, std::size_t id) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= down_.size()) return std::nullopt;
  const std::size_t p = down_[static_cast<std::size_t>(degree)].at(id);
  return p == kNone ? std::nullopt : std::optional(p);
}

std::size_t Matching::unmatched_count(int degree) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= up_.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < up_[static_cast<std::size_t>(degree)].size(); ++i)
    if (!is_matched(degree, i)) ++count;
  return count;
}

MatchingValidation validate_matching(const BasedComplex& c, const Matching& m) {
  if (!m.conflicts().empty()) return {false, m.conflicts().front()};
  for (const auto& p : m.pairs()) {
    if (p.degree < 1 || p.degree > c.top_degree() || p.upper >= c.dim(p.degree) || p.lower >= c.dim(p.degree - 1)) {
      return {false, "pair out of range in degree " + std::to_string(p.degree)};
    }
    const Integer entry = c.differentials[static_cast<std::size_t>(p.degree)].at(static_cast<int>(p.lower),
                                                                                 static_cast<int>(p.upper));
    if (entry == 0) {
      return {false, "matched entry not an edge: degree " + std::to_string(p.degree) + " upper " +
                         std::to_string(p.upper) + " lower " + std::to_string(p.lower)};
    }
    if (entry != 1 && entry != -1) {
      return {false, "matched entry " + to_string(entry) + " is not a unit"};
    }
  }
  return {};
}

namespace {

// Successors of a matched degree-k generator in the modified graph, as
// (lower b, next upper a') pairs.
template <typename Visit>
void for_each_step(const BasedComplex& c, const Matching& m, int k, std::size_t a, Visit&& visit) {
  const auto own = m.down_partner(k, a);
  for (const auto& e : c.differentials[static_cast<std::size_t>(k)].column(a)) {
    const auto b = static_cast<std::size_t>(e.row);
    if (own && *own == b) continue;
    if (auto next = m.up_partner(k - 1, b)) visit(b, *next);
  }
}

std::optional<CycleWitness> find_cycle(const BasedComplex& c, const Matching& m, int k) {
  const std::size_t n = c.dim(k);
  enum Color : unsigned char { White, Gray, Black };
  std::vector<Color> color(n, White);
  struct Frame {
    std::size_t node;
    std::vector<std::pair<std::size_t, std::size_t>> steps;
    std::size_t next = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != White || !m.down_partner(k, root)) continue;
    std::vector<Frame> stack;
    auto open = [&](std::size_t node) {
      Frame f{node, {}, 0};
      for_each_step(c, m, k, node, [&](std::size_t b, std::size_t a) { f.steps.emplace_back(b, a); });
      color[node] = Gray;
      stack.push_back(std::move(f));
    };
    open(root);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.steps.size()) {
        color[top.node] = Black;
        stack.pop_back();
        continue;
      }
      const auto [b, a] = top.steps[top.next++];
      if (color[a] == White) {
        open(a);
      } else if (color[a] == Gray) {
        CycleWitness w;
        w.degree = k;
        std::size_t start = 0;
        while (stack[start].node != a) ++start;
        for (std::size_t i = start; i < stack.size(); ++i) {
          w.upper.push_back(stack[i].node);
          w.lower.push_back(stack[i].steps[stack[i].next - 1].first);
        }
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycleWitness> check_acyclic(const BasedComplex& c, const Matching& m) {
  for (int k = 1; k <= c.top_degree(); ++k)
    if (auto w = find_cycle(c, m, k)) return w;
  return std::nullopt;
}

bool is_valid_witness(const BasedComplex& c, const Matching& m, const CycleWitness& w) {
  const int k = w.degree;
  if (k < 1 || k > c.top_degree() || w.upper.empty() || w.upper.size() != w.lower.size()) return false;
  const auto& d = c.differentials[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < w.upper.size(); ++i) {
    const std::size_t a = w.upper[i], b = w.lower[i];
    const std::size_t next = w.upper[(i + 1) % w.upper.size()];
    if (d.at(static_cast<int>(b), static_cast<int>(a)) == 0) return false;
    if (m.down_partner(k, a) == b) return false;
    if (m.up_partner(k - 1, b) != next) return false;
  }
  return true;
}

namespace {

// Topological positions of the degree-(k-1) generators matched upward, with
// b before b' whenever the partner of b has a boundary term on b'.
std::vector<std::size_t> layer_order(const BasedComplex& c, const Matching& m, int k) {
  const std::size_t n = c.dim(k - 1);
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  std::size_t matched = 0;
  for (std::size_t b = 0; b < n; ++b) {
    auto a = m.up_partner(k - 1, b);
    if (!a) continue;
    ++matched;
    for (const auto& e : c.differentials[static_cast<std::size_t>(k)].column(*a)) {
      const auto b2 = static_cast<std::size_t>(e.row);
      if (b2 == b || !m.up_partner(k - 1, b2)) continue;
      out[b].push_back(b2);
      ++indegree[b2];
    }
  }
  std::vector<std::size_t> position(n, none);
  std::queue<std::size_t> ready;
  for (std::size_t b = 0; b < n; ++b)
    if (m.up_partner(k - 1, b) && indegree[b] == 0) ready.push(b);
  std::size_t next = 0;
  while (!ready.empty()) {
    const std::size_t b = ready.front();
    ready.pop();
    position[b] = next++;
    for (std::size_t b2 : out[b])
      if (--indegree[b2] == 0) ready.push(b2);
  }
  if (next != matched) throw PreconditionError("matching is not acyclic; refusing to reduce");
  return position;
}

}  // namespace

ReducedComplex reduce(const BasedComplex& c, const Matching& m) {
  if (auto v = validate_matching(c, m); !v) throw PreconditionError("invalid matching: " + v.message);
  ReducedComplex r;
  r.complex.grading = c.grading;
  const int top = c.top_degree();
  std::vector<std::vector<long>> new_id(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    auto& ids = r.original_ids.emplace_back();
    auto& map = new_id[static_cast<std::size_t>(k)];
    map.assign(c.dim(k), -1);
    for (std::size_t i = 0; i < c.dim(k); ++i)
      if (!m.is_matched(k, i)) {
        map[i] = static_cast<long>(ids.size());
        ids.push_back(i);
      }
    r.complex.dims.push_back(ids.size());
  }
  r.complex.differentials.emplace_back(0, r.complex.dims.empty() ? 0 : r.complex.dims[0]);
  for (int k = 1; k <= top; ++k) {
    const auto& d = c.differentials[static_cast<std::size_t>(k)];
    const std::vector<std::size_t> position = layer_order(c, m, k);
    const auto& sources = r.original_ids[static_cast<std::size_t>(k)];
    const auto& targets = new_id[static_cast<std::size_t>(k - 1)];
    SparseIntegerMatrix reduced(r.complex.dims[static_cast<std::size_t>(k) - 1], sources.size());
    for (std::size_t col = 0; col < sources.size(); ++col) {
      std::map<std::size_t, Integer> chain;
      using Item = std::pair<std::size_t, std::size_t>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pending;
      auto add_column = [&](std::size_t a, const Integer& factor) {
        for (const auto& e : d.column(a)) {
          const auto b = static_cast<std::size_t>(e.row);
          auto [it, fresh] = chain.try_emplace(b, 0);
          it->second += factor * e.value;
          if (fresh && m.up_partner(k - 1, b)) pending.emplace(position[b], b);
        }
      };
      add_column(sources[col], Integer(1));
      while (!pending.empty()) {
        const std::size_t b = pending.top().second;
        pending.pop();
        auto it = chain.find(b);
        if (it == chain.end() || it->second == 0) continue;
        const std::size_t a = *m.up_partner(k - 1, b);
        const Integer factor = -it->second * d.at(static_cast<int>(b), static_cast<int>(a));
        add_column(a, factor);
        chain.erase(b);
      }
      SparseIntegerMatrix::Column out;
      for (auto& [b, v] : chain)
        if (v != 0 && targets[b] >= 0) out.push_back({static_cast<int>(targets[b]), v});
      std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.row < y.row; });
      reduced.set_column(col, std::move(out));
    }
    r.complex.differentials.push_back(std::move(reduced));
  }
  return r;
}

bool homology_equivalence_check(const BasedComplex& full, const ReducedComplex& reduced) {
  auto a = complex_homology(full);
  auto b = complex_homology(reduced.complex);
  return a == b;
}

}  // namespace maghom
