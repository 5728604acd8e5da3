#include "maghom/rules.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace maghom {

namespace {

Integer recurrence(int k, int l, const Integer& t00, const Integer& t11,
                   const std::function<Integer(const std::function<Integer(int, int)>&, int, int)>& step) {
  std::map<std::pair<int, int>, Integer> memo;
  std::function<Integer(int, int)> t = [&](int a, int b) -> Integer {
    if (a < 0 || b < 0) return 0;
    if (a == 0 && b == 0) return t00;
    if (a == 1 && b == 1) return t11;
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    Integer v = step(t, a, b);
    memo.emplace(std::make_pair(a, b), v);
    return v;
  };
  return t(k, l);
}

int sgn(int x) { return (x > 0) - (x < 0); }

std::vector<PathSequence> finish(std::vector<std::vector<Vertex>> seqs, const DistanceMatrix& d, int k, int l) {
  std::vector<PathSequence> out;
  for (auto& s : seqs)
    if (static_cast<int>(s.size()) == k + 1 && length_ell(s, d) == l) out.push_back(make_sequence(std::move(s), d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Integer t_odd(int m, int k, int l) {
  return recurrence(k, l, 2 * m + 1, 4 * m + 2, [m](const auto& t, int a, int b) {
    return t(a - 1, b - 1) + 2 * t(a - 2, b - (m + 1));
  });
}

Integer t_even(int m, int k, int l) {
  return recurrence(k, l, 2 * m, 4 * m, [m](const auto& t, int a, int b) {
    return std::max(t(a - 1, b - 1), t(a - 2, b - m));
  });
}

std::vector<PathSequence> described_unmatched_tree(const Graph& g, int k, int l) {
  std::vector<std::vector<Vertex>> seqs;
  const DistanceMatrix d = apsp(g);
  if (k == 0) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) seqs.push_back({v});
  } else {
    for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u)
      for (Vertex v : g.neighbors(u)) {
        std::vector<Vertex> s;
        for (int i = 0; i <= k; ++i) s.push_back(i % 2 == 0 ? u : v);
        seqs.push_back(std::move(s));
      }
  }
  return finish(std::move(seqs), d, k, l);
}

std::vector<PathSequence> described_unmatched_odd(int m, int k, int l) {
  const int n = 2 * m + 1;
  const DistanceMatrix d = apsp(cycle_graph(static_cast<std::size_t>(n)));
  auto delta = [n](Vertex u, Vertex v) { return signed_distance(n, u, v); };
  std::vector<std::vector<Vertex>> all;
  std::function<void(std::vector<Vertex>&, int)> grow = [&](std::vector<Vertex>& s, int used) {
    all.push_back(s);
    if (static_cast<int>(s.size()) > k) return;
    const std::size_t j = s.size() - 1;
    const Vertex a = s[j - 1], b = s[j];
    for (Vertex v = 0; v < n; ++v) {
      if (v == b) continue;
      const int step = d(b, v);
      const bool same = sgn(delta(a, b)) == sgn(delta(b, v));
      const bool ok = (d(a, b) == 1 && step == m && same) || (d(a, b) == m && step == 1 && same) || (step == 1 && !same);
      if (!ok || used + step > l) continue;
      s.push_back(v);
      grow(s, used + step);
      s.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    all.push_back({v});
    for (Vertex w = 0; w < n; ++w) {
      if (d(v, w) != 1) continue;
      std::vector<Vertex> s{v, w};
      grow(s, 1);
    }
  }
  return finish(std::move(all), d, k, l);
}

std::vector<PathSequence> described_unmatched_even(int m, int k, int l) {
  const int n = 2 * m;
  const DistanceMatrix d = apsp(cycle_graph(static_cast<std::size_t>(n)));
  auto delta = [n](Vertex u, Vertex v) { return signed_distance(n, u, v); };
  auto wrap = [n](int v) { return ((v % n) + n) % n; };
  std::vector<std::vector<Vertex>> all;
  std::function<void(std::vector<Vertex>&, int)> zigzag = [&](std::vector<Vertex>& s, int used) {
    all.push_back(s);
    if (static_cast<int>(s.size()) > k) return;
    const std::size_t j = s.size() - 1;
    for (Vertex v : {wrap(s[j] + 1), wrap(s[j] - 1)}) {
      if (sgn(delta(s[j - 1], s[j])) == sgn(delta(s[j], v)) || used + 1 > l) continue;
      s.push_back(v);
      zigzag(s, used + 1);
      s.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> special{v};
    int used = 0;
    while (true) {
      all.push_back(special);
      for (Vertex w : {wrap(special.back() + 1), wrap(special.back() - 1)}) {
        if (used + 1 > l) continue;
        std::vector<Vertex> s = special;
        s.push_back(w);
        zigzag(s, used + 1);
      }
      if (used + m > l || static_cast<int>(special.size()) + 1 > k + 1) break;
      const Vertex a = wrap(special.back() - 1);
      special.push_back(a);
      special.push_back(wrap(a - (m - 1)));
      used += m;
    }
  }
  return finish(std::move(all), d, k, l);
}

}  // namespace maghom
