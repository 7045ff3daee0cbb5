#pragma once

#include <optional>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

class Matching {
 public:
  Matching() = default;
  // Throws PreconditionError when two edges share an endpoint.
  Matching(const Graph& g, std::vector<EdgeId> edges);

  [[nodiscard]] const std::vector<EdgeId>& edges() const { return edges_; }
  [[nodiscard]] bool perfect() const { return perfect_; }
  [[nodiscard]] bool contains(EdgeId e) const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges_ <=> b.edges_; }

 private:
  std::vector<EdgeId> edges_;  // sorted
  bool perfect_ = false;
};

// Edmonds' blossom algorithm. Deterministic for a fixed graph.
std::optional<Matching> find_perfect_matching(const Graph& g);

// Matchability of g - removed, without building the subgraph.
bool has_perfect_matching(const Graph& g, const VertexSet& removed = {});

// Size of a maximum matching of g - removed.
int maximum_matching_size(const Graph& g, const VertexSet& removed = {});

// Enumeration guard: TIGHTCUT_MAX_ENUM when set, otherwise 24 vertices.
int enumeration_limit();

// Every perfect matching, by backtracking on the lowest uncovered vertex with
// matchability pruning. Throws GuardExceededError above max_vertices.
std::vector<Matching> all_perfect_matchings(const Graph& g, int max_vertices = enumeration_limit());

// Whether some perfect matching contains e. Throws UnknownEdgeError.
bool is_admissible(const Graph& g, EdgeId e);

bool is_matching_covered(const Graph& g);
bool is_critical(const Graph& g);
bool is_bicritical(const Graph& g);

}  // namespace tightcut
