#include "maghom/rules.hpp"

#include "maghom/error.hpp"

#include <algorithm>

namespace maghom {

std::string to_string(const RuleOutcome& outcome, const Graph* g) {
  switch (outcome.kind) {
    case RuleOutcome::Kind::Idle:
      return "idle";
    case RuleOutcome::Kind::Delete:
      return "delete";
    case RuleOutcome::Kind::Insert:
      return "insert(" + (g ? g->label(outcome.vertex) : std::to_string(outcome.vertex)) + ")";
  }
  return "?";
}

MatchState match_state(const MatchingRule& rule, std::span<const Vertex> sequence) {
  for (std::size_t j = 0; j < sequence.size(); ++j) {
    const auto prefix = sequence.first(j + 1);
    const RuleOutcome out = rule.evaluate(prefix);
    if (out.is_idle()) continue;
    const int pos = static_cast<int>(j) - 1;
    if (out.is_insert()) {
      if (j == 0 || out.vertex == sequence[j - 1] || out.vertex == sequence[j]) {
        throw ConsistencyError("rule " + rule.name + " inserts " + std::to_string(out.vertex) + " into " +
                               format_sequence(prefix) + " next to an equal vertex");
      }
      return {MatchState::Kind::InsertAt, pos, out.vertex};
    }
    if (j < 2) {
      throw ConsistencyError("rule " + rule.name + " deletes an endpoint of " + format_sequence(prefix));
    }
    return {MatchState::Kind::DeleteAt, pos, -1};
  }
  return {};
}

std::vector<Vertex> apply_state(std::span<const Vertex> sequence, const MatchState& state) {
  std::vector<Vertex> out(sequence.begin(), sequence.end());
  const auto pos = static_cast<std::size_t>(state.position);
  if (state.kind == MatchState::Kind::InsertAt) out.insert(out.begin() + static_cast<long>(pos) + 1, state.vertex);
  else if (state.kind == MatchState::Kind::DeleteAt) out.erase(out.begin() + static_cast<long>(pos));
  return out;
}

namespace {

class RuleChecker {
 public:
  RuleChecker(const MatchingRule& rule, const DistanceMatrix& d, int lmax, RuleValidation& report)
      : rule_(rule), d_(d), lmax_(lmax), report_(report) {}

  void run() {
    for (Vertex v = 0; v < static_cast<Vertex>(d_.size()) && report_.valid; ++v) {
      seq_.assign(1, v);
      visit(0);
    }
  }

 private:
  bool geodesic(Vertex a, Vertex b, Vertex c) const { return d_(a, b) + d_(b, c) == d_(a, c); }

  void fail(const std::string& what) {
    if (!report_.valid) return;
    report_.valid = false;
    report_.violation = format_sequence(seq_) + ": " + what;
  }

  RuleOutcome eval(std::span<const Vertex> x) {
    try {
      return rule_.evaluate(x);
    } catch (const Error& e) {
      fail(std::string("evaluation failed on ") + format_sequence(x) + ": " + e.what());
      return RuleOutcome::idle();
    }
  }

  void visit(int used) {
    ++report_.sequences_checked;
    const RuleOutcome out = eval(seq_);
    if (!report_.valid) return;
    const std::size_t k = seq_.size() - 1;
    if (out.is_insert()) {
      check_insert(out.vertex);
    } else if (out.is_delete()) {
      check_delete();
    } else if (k >= 1 && d_(seq_[k - 1], seq_[k]) >= 2 && report_.diagonal) {
      report_.diagonal = false;
      report_.first_non_diagonal = format_sequence(seq_);
      if (rule_.diagonal) fail("idle on a step of length >= 2 for a diagonal rule");
    }
    if (!out.is_idle() || !report_.valid) return;
    const Vertex last = seq_.back();
    for (Vertex w = 0; w < static_cast<Vertex>(d_.size()); ++w) {
      if (w == last || used + d_(last, w) > lmax_) continue;
      seq_.push_back(w);
      visit(used + d_(last, w));
      seq_.pop_back();
      if (!report_.valid) return;
    }
  }

  void check_insert(Vertex v) {
    const std::size_t k = seq_.size() - 1;
    if (k < 1) return fail("insert on a single vertex");
    if (v < 0 || v >= static_cast<Vertex>(d_.size())) return fail("insert of an invalid vertex");
    const Vertex a = seq_[k - 1], b = seq_[k];
    if (v == a || v == b || !geodesic(a, v, b)) return fail("inserted vertex " + std::to_string(v) + " off the geodesic");
    std::vector<Vertex> inner(seq_.begin(), seq_.end() - 1);
    inner.push_back(v);
    if (!eval(inner).is_idle()) return fail("not idle after inserting " + std::to_string(v));
    inner.push_back(b);
    if (!eval(inner).is_delete()) return fail("no delete after inserting " + std::to_string(v));
  }

  void check_delete() {
    const std::size_t k = seq_.size() - 1;
    if (k < 2) return fail("delete with fewer than three vertices");
    const Vertex a = seq_[k - 2], b = seq_[k - 1], c = seq_[k];
    if (!geodesic(a, b, c)) return fail("deleted vertex off the geodesic");
    std::vector<Vertex> shorter(seq_.begin(), seq_.end() - 2);
    shorter.push_back(c);
    if (eval(shorter) != RuleOutcome::insert(b)) return fail("deletion not reciprocated by an insert");
  }

  const MatchingRule& rule_;
  const DistanceMatrix& d_;
  int lmax_;
  RuleValidation& report_;
  std::vector<Vertex> seq_;
};

}  // namespace

RuleValidation validate_rule(const MatchingRule& rule, const Graph& g, int lmax) {
  RuleValidation report;
  const DistanceMatrix d = apsp(g);
  RuleChecker(rule, d, lmax, report).run();
  return report;
}

Matching generate_matching(const MatchingRule& rule, const MagnitudeSlice& slice) {
  Matching m(slice.complex.dims);
  const int top = static_cast<int>(slice.bases.size()) - 1;
  for (int k = 0; k <= top; ++k) {
    const IndexSet& basis = slice.bases[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const MatchState state = match_state(rule, basis[i]);
      if (state.is_unmatched()) continue;
      const std::vector<Vertex> partner = apply_state(basis[i], state);
      const int pk = state.kind == MatchState::Kind::InsertAt ? k + 1 : k - 1;
      std::optional<std::size_t> j;
      if (pk >= 0 && pk <= top) j = slice.bases[static_cast<std::size_t>(pk)].find(partner);
      if (!j) {
        throw ConsistencyError("partner " + format_sequence(partner) + " of " + format_sequence(basis[i]) +
                               " is not a generator of the slice");
      }
      const MatchState back = match_state(rule, partner);
      if (back.is_unmatched() || apply_state(partner, back) != std::vector<Vertex>(basis[i].begin(), basis[i].end())) {
        throw ConsistencyError("partner mismatch: " + format_sequence(basis[i]) + " -> " + format_sequence(partner) +
                               " but not back");
      }
      if (state.kind == MatchState::Kind::InsertAt) m.add(k + 1, i, *j);
    }
  }
  if (!m.conflicts().empty()) throw ConsistencyError(m.conflicts().front());
  return m;
}

std::vector<PathSequence> enumerate_unmatched(const MatchingRule& rule, const DistanceMatrix& d, int k, int l) {
  std::vector<PathSequence> out;
  IndexSet basis = enumerate_generators(d, k, l);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (match_state(rule, basis[i]).is_unmatched()) out.push_back(basis.sequence(i));
  return out;
}

WitnessShape annotate_witness(const MagnitudeSlice& slice, const CycleWitness& w) {
  WitnessShape shape;
  const auto& upper_basis = slice.bases.at(static_cast<std::size_t>(w.degree));
  const auto& lower_basis = slice.bases.at(static_cast<std::size_t>(w.degree) - 1);
  const std::size_t p = w.upper.size();
  for (std::size_t i = 0; i < p; ++i) {
    WitnessStep step;
    step.upper = upper_basis.sequence(w.upper[i]);
    step.lower = lower_basis.sequence(w.lower[i]);
    const auto next = upper_basis[w.upper[(i + 1) % p]];
    const auto& a = step.upper.vertices;
    const auto& b = step.lower.vertices;
    std::size_t pos = 0;
    while (pos < b.size() && a[pos] == b[pos]) ++pos;
    step.deletion = static_cast<int>(pos);
    pos = 0;
    while (pos < b.size() && next[pos] == b[pos]) ++pos;
    step.insertion = static_cast<int>(pos) - 1;
    step.inserted = next[pos];
    shape.steps.push_back(std::move(step));
  }
  for (std::size_t i = 0; i < p; ++i) {
    const int c = shape.steps[i].insertion;
    const int d_next = shape.steps[(i + 1) % p].deletion;
    if (d_next == c + 1 || d_next > c + 2 || shape.steps[i].deletion > c + 1) shape.bounds_hold = false;
  }
  return shape;
}

std::string format_witness(const MagnitudeSlice& slice, const CycleWitness& w, const Graph* g) {
  const auto& upper = slice.bases.at(static_cast<std::size_t>(w.degree));
  const auto& lower = slice.bases.at(static_cast<std::size_t>(w.degree) - 1);
  std::string out;
  for (std::size_t i = 0; i < w.upper.size(); ++i) {
    out += format_sequence(upper[w.upper[i]], g) + " -> " + format_sequence(lower[w.lower[i]], g) + " -> ";
  }
  return out + format_sequence(upper[w.upper.front()], g);
}

}  // namespace maghom
