#pragma once

#include <optional>
#include <vector>

#include "tightcut/graph.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/structure.hpp"

namespace tightcut {

// Caches the perfect matchings of one graph so that many shores can be tested
// for tightness. Tightness is defined by enumeration: every perfect matching
// meets the cut in exactly one edge.
class TightnessOracle {
 public:
  explicit TightnessOracle(const Graph& g, int max_vertices = enumeration_limit());

  [[nodiscard]] bool is_tight(const VertexSet& shore) const;
  [[nodiscard]] std::size_t matching_count() const { return matchings_.size(); }

 private:
  friend std::vector<Cut> enumerate_tight_cuts(const Graph&, bool, int);
  [[nodiscard]] bool tight_mask(const std::vector<char>& in_shore) const;

  const Graph* graph_;
  std::vector<std::vector<std::pair<int, int>>> matchings_;  // dense endpoint pairs
};

bool is_tight(const Graph& g, const Cut& c);

// Every canonical tight cut; shores are scanned exhaustively (2^(n-1)).
// Throws GuardExceededError above max_vertices.
std::vector<Cut> enumerate_tight_cuts(const Graph& g, bool nontrivial_only, int max_vertices = 16);

struct BarrierWitness {
  Barrier barrier;
  int component = 0;  // index into barrier.odd_parts whose boundary is the cut
  friend bool operator==(const BarrierWitness&, const BarrierWitness&) = default;
};

struct CutClassification {
  bool tight = false;
  bool trivial = false;
  bool elp = false;
  std::vector<BarrierWitness> barrier_witnesses;
  std::vector<TwoSeparation> twosep_witnesses;
};

// Barrier witnesses for ∂(x): for each shore S, barriers B ⊆ S̄ containing the
// attachment set of S with S an odd component of G-B.
std::vector<BarrierWitness> barrier_witnesses(const Graph& g, const Cut& c);

// A 2-separation generating ∂(x) when one exists. A nontrivial cut ∂(X) is a
// 2-separation cut iff some a ∈ X and b ∈ X̄ cover every cut edge.
std::optional<TwoSeparation> two_separation_witness(const Graph& g, const VertexSet& x);

// Classification of a cut of a matching covered graph (not re-checked).
CutClassification classify_cut(const Graph& g, const Cut& c);

// Whether the witness is valid for g and generates c.
bool witness_generates(const Graph& g, const BarrierWitness& w, const Cut& c);
bool witness_generates(const Graph& g, const TwoSeparation& s, const Cut& c);

}  // namespace tightcut
