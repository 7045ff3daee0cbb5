#pragma once

#include <optional>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

// A vertex set B with o(G-B) = |B|, together with the odd components of G-B
// ordered by smallest member.
struct Barrier {
  VertexSet members;
  std::vector<VertexSet> odd_parts;

  [[nodiscard]] bool nontrivial() const { return members.size() >= 2; }
  friend bool operator==(const Barrier&, const Barrier&) = default;
};

// {u, v} splitting G into two even-order pieces sharing exactly u and v.
struct TwoSeparation {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet side1;
  VertexSet side2;

  friend bool operator==(const TwoSeparation&, const TwoSeparation&) = default;
};

struct DMBarrier {
  Barrier barrier;
  Graph core;
};

// Barrier witness when o(g-b) = |b|, else nullopt. Matchability of g is the
// caller's precondition and is not re-checked here. Throws PreconditionError
// for an empty or non-proper b.
std::optional<Barrier> is_barrier(const Graph& g, const VertexSet& b);

// One cut ∂(V(H)) per odd component H, in odd_parts order.
std::vector<Cut> barrier_cuts(const Graph& g, const Barrier& b);

// Structural validity: sides cover V, meet in {u,v}, are even, and no edge
// joins side1-{u,v} to side2-{u,v}.
bool is_two_separation(const Graph& g, const TwoSeparation& s);

// All 2-separations of an even-order graph, one witness per distinct pair of
// sides, side1 holding the smallest vertex outside {u,v}.
std::vector<TwoSeparation> find_2separations(const Graph& g);

// The distinct canonical cuts ∂(side1-u), ∂(side1-v) (equal to ∂(side2-v),
// ∂(side2-u)). Trivial cuts are included; check Cut::trivial().
std::vector<Cut> two_separation_cuts(const Graph& g, const TwoSeparation& s);

// H(B): even components deleted, every odd component contracted to a fresh
// vertex, edges inside B deleted. Parallel edges are kept.
Graph core(const Graph& g, const Barrier& b);

// Witness iff every odd component is critical (single vertices count) and the
// core is matching covered.
std::optional<DMBarrier> is_dm_barrier(const Graph& g, const Barrier& b);

enum class DMStrategy {
  kConstructive,  // Gallai–Edmonds sets of g-w refined to an elementary piece of the core
  kExhaustive,    // increasing-size subsets of each shore
};

struct DMBarrierFinding {
  DMBarrier dm;
  VertexSet shore;        // the shore (x or its complement) holding B and its odd parts
  bool in_given_shore{};  // shore == x
};

// For matchable g where g[x], g[x̄] are connected and no edge of ∂(x) is
// admissible: a DM-barrier inside one shore whose odd components lie in that
// same shore. Throws PreconditionError on violated preconditions and
// InternalError when the chosen strategy finds no verified witness.
DMBarrierFinding find_dm_barrier(const Graph& g, const VertexSet& x,
                                 DMStrategy strategy = DMStrategy::kConstructive);

// b is a barrier of g, y an odd component of g-b, and b_prime a barrier of
// g/(ȳ→contracted_label). Returns b ∪ (b_prime - ȳ) when the contracted
// vertex is in b_prime, otherwise b_prime, re-verified as a barrier of g.
Barrier lift_barrier_over_odd_component(const Graph& g, const Barrier& b, const VertexSet& y,
                                        Vertex contracted_label, const VertexSet& b_prime);

// kept_shore is the shore Y of a cut of s holding exactly one vertex of the
// pair; b is a barrier of g/(Ȳ→contracted_label). Returns (b - ȳ) + v when
// the contracted vertex is in b (v the pair vertex in Ȳ), otherwise b.
Barrier lift_barrier_over_2sep(const Graph& g, const TwoSeparation& s, const VertexSet& kept_shore,
                               Vertex contracted_label, const VertexSet& b);

// Every nontrivial barrier of g that is a proper subset of `shore`, in
// increasing size then lexicographic order.
std::vector<Barrier> nontrivial_barriers_inside(const Graph& g, const VertexSet& shore);

}  // namespace tightcut
