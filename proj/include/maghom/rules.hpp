#pragma once

#include "maghom/chain.hpp"
#include "maghom/graph.hpp"
#include "maghom/morse.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maghom {

struct RuleOutcome {
  enum class Kind { Idle, Insert, Delete };
  Kind kind = Kind::Idle;
  Vertex vertex = -1;

  static RuleOutcome idle() { return {}; }
  static RuleOutcome insert(Vertex v) { return {Kind::Insert, v}; }
  static RuleOutcome remove() { return {Kind::Delete, -1}; }

  bool is_idle() const { return kind == Kind::Idle; }
  bool is_insert() const { return kind == Kind::Insert; }
  bool is_delete() const { return kind == Kind::Delete; }
  friend bool operator==(const RuleOutcome&, const RuleOutcome&) = default;
};

std::string to_string(const RuleOutcome& outcome, const Graph* g = nullptr);

struct MatchState {
  enum class Kind { Unmatched, InsertAt, DeleteAt };
  Kind kind = Kind::Unmatched;
  /// insert(position, vertex) places `vertex` right after x_position;
  /// delete(position) removes x_position.
  int position = -1;
  Vertex vertex = -1;

  bool is_unmatched() const { return kind == Kind::Unmatched; }
  friend bool operator==(const MatchState&, const MatchState&) = default;
};

/// Evaluated only on sequences whose proper prefixes are all idle.
using RuleFunction = std::function<RuleOutcome(std::span<const Vertex>)>;

struct MatchingRule {
  std::string name;
  bool diagonal = false;
  RuleFunction evaluate;
  /// Recorded choices ("f", "smallest index", ...), for reproducibility.
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Scans prefixes; the first non-idle outcome decides the state. Throws
/// ConsistencyError when the outcome cannot be applied to the sequence.
MatchState match_state(const MatchingRule& rule, std::span<const Vertex> sequence);
std::vector<Vertex> apply_state(std::span<const Vertex> sequence, const MatchState& state);

struct RuleValidation {
  bool valid = true;
  /// Whether every idle sequence ends in a step of length one; measured
  /// regardless of the rule's own claim.
  bool diagonal = true;
  std::string first_non_diagonal;
  std::size_t sequences_checked = 0;
  /// First violating sequence and the property it breaks.
  std::string violation;
  explicit operator bool() const { return valid; }
};

/// Exhaustive check of the validity properties (and, if the rule claims it,
/// diagonality) over all sequences with idle proper prefixes and length <= lmax.
RuleValidation validate_rule(const MatchingRule& rule, const Graph& g, int lmax);

/// Prefix matching on one slice. Throws ConsistencyError when a partner is
/// missing or does not point back.
Matching generate_matching(const MatchingRule& rule, const MagnitudeSlice& slice);

std::vector<PathSequence> enumerate_unmatched(const MatchingRule& rule, const DistanceMatrix& d, int k, int l);

// Rule library. Each throws PreconditionError when the graph is outside the
// rule's domain.
MatchingRule empty_rule();
MatchingRule tree_rule(const Graph& g);
MatchingRule geodetic_ptolemaic_rule(const Graph& g);

struct PawfulChoices {
  /// f(u, v) for d(u,v) = 2: a common neighbor.
  std::function<Vertex(Vertex, Vertex)> f;
  /// g(u, v, w) for d(u,v) = d(v,w) = 2, d(u,w) = 1: a common neighbor of all three.
  std::function<Vertex(Vertex, Vertex, Vertex)> g;
};
/// Smallest-index choices.
PawfulChoices default_pawful_choices(const Graph& g);
MatchingRule pawful_rule(const Graph& g, const PawfulChoices& choices);
MatchingRule pawful_rule(const Graph& g);

/// Orientation helpers for the built-in icosahedron().
struct IcosahedralFrame {
  int chirality = 1;
  DistanceMatrix distances;
  std::vector<Vertex> f;
  /// g_left[u * 12 + v] for d(u,v) = 2, else -1.
  std::vector<Vertex> g_left;
  std::vector<Vertex> g_right;

  Vertex gl(Vertex u, Vertex v) const { return g_left[static_cast<std::size_t>(u * 12 + v)]; }
  Vertex gr(Vertex u, Vertex v) const { return g_right[static_cast<std::size_t>(u * 12 + v)]; }
  /// For d(u,v) = 1, d(v,w) = 2; ties resolve to g_L.
  Vertex xi(Vertex u, Vertex v, Vertex w) const;
  /// For d(u,v) = 1, d(w,x) = 2, d(v,x) = 3, u != w; nullopt on a tie.
  std::optional<Vertex> zeta_unique(Vertex u, Vertex v, Vertex w, Vertex x) const;
  /// As zeta_unique with ties resolved to g_L.
  Vertex zeta(Vertex u, Vertex v, Vertex w, Vertex x) const;
};
/// chirality = +1 takes g_L(u,v) to be the common neighbor w with positive
/// det[u, v, w] in the standard embedding; -1 flips the convention.
IcosahedralFrame icosahedral_frame(int chirality = 1);
MatchingRule icosahedral_rule(int chirality = 1);

/// Signed displacement on C_n: the representative of v - u in {-m..m} for
/// n = 2m+1 and in {-m+1..m} for n = 2m.
int signed_distance(int n, Vertex u, Vertex v);
MatchingRule odd_cycle_rule(int m);
MatchingRule even_cycle_rule(int m);
/// chi(u, v, w) of the even-cycle rule on C_{2m}.
bool even_chi(int m, Vertex u, Vertex v, Vertex w);
/// Even length and chi(x_{2i}, x_{2i+1}, x_{2i+2}) for all i.
bool is_special_sequence(int m, std::span<const Vertex> x);
/// Largest j with (x_0..x_j) special.
int special_prefix_length(int m, std::span<const Vertex> x);

/// The four-entry rule carried by nonmorse6().
MatchingRule nonmorse6_rule();

/// Builds the named rule for a graph: tree, geopto, pawful, icosa,
/// icosa-mirror (chirality -1), odd-cycle, even-cycle, nonmorse6, empty. Cycle rules infer m from |V|.
MatchingRule make_rule(const std::string& name, const Graph& g);
std::vector<std::string> rule_names();

// Closed forms for cycle graphs.
Integer t_odd(int m, int k, int l);
Integer t_even(int m, int k, int l);

/// Unmatched sequences described inductively (trees, odd and even cycles);
/// sorted lexicographically, restricted to (k, l).
std::vector<PathSequence> described_unmatched_tree(const Graph& g, int k, int l);
std::vector<PathSequence> described_unmatched_odd(int m, int k, int l);
std::vector<PathSequence> described_unmatched_even(int m, int k, int l);

/// Structural reading of a zig-zag cycle in a magnitude slice: a_i loses the
/// vertex at position d_i to become b_i, and b_i gains u_i after position c_i
/// to become a_{i+1}.
struct WitnessStep {
  PathSequence upper;
  PathSequence lower;
  int deletion = 0;
  int insertion = 0;
  Vertex inserted = -1;
};
struct WitnessShape {
  std::vector<WitnessStep> steps;
  /// d_{i+1} != c_i + 1, d_{i+1} <= c_i + 2 and d_i <= c_i + 1 for all i.
  bool bounds_hold = true;
};
WitnessShape annotate_witness(const MagnitudeSlice& slice, const CycleWitness& w);
/// "(a) -> (b) -> ... -> (a)" with graph labels.
std::string format_witness(const MagnitudeSlice& slice, const CycleWitness& w, const Graph* g = nullptr);

}  // namespace maghom
