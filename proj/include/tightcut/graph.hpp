#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tightcut/vertex_set.hpp"

namespace tightcut {

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;

  [[nodiscard]] Vertex other(Vertex w) const { return w == u ? v : u; }
  [[nodiscard]] bool touches(Vertex w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;  // dense index of the other endpoint
  EdgeId edge;
};

// Finite loopless multigraph with stable vertex and edge ids.
//
// Values are immutable once built. Derived graphs (deletions, contractions)
// keep the ids of every surviving vertex and edge, and draw fresh vertex ids
// from a counter inherited along the derivation chain, so an id is never
// reused. Contracted vertices carry a provenance tag: the set of input
// vertices they stand for.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on loops, duplicate edge ids, or endpoints that
  // are not vertices.
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  // Vertices 0..n-1, edge i joins pairs[i].
  static Graph from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_pairs(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_pairs(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  [[nodiscard]] int num_vertices() const { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] int num_edges() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const VertexSet& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] bool has_vertex(Vertex v) const { return vertices_.contains(v); }
  [[nodiscard]] std::optional<Edge> find_edge(EdgeId id) const;
  [[nodiscard]] const Edge& edge(EdgeId id) const;  // throws UnknownEdgeError

  // Dense index of a vertex (position in sorted order); -1 if absent.
  [[nodiscard]] int index_of(Vertex v) const;
  [[nodiscard]] Vertex vertex_at(int index) const { return vertices_.members()[index]; }
  [[nodiscard]] const std::vector<Incidence>& incidences(int index) const { return adjacency_[index]; }
  [[nodiscard]] const std::vector<Incidence>& incidences_of(Vertex v) const;

  // Distinct neighbours of v.
  [[nodiscard]] VertexSet neighbors(Vertex v) const;
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;

  [[nodiscard]] VertexSet complement(const VertexSet& x) const { return vertices_.minus(x); }

  // Original vertices represented by v (v itself when never contracted).
  [[nodiscard]] VertexSet origin(Vertex v) const;
  [[nodiscard]] const std::map<Vertex, VertexSet>& provenance() const { return provenance_; }

  [[nodiscard]] Vertex next_fresh_vertex() const { return next_vertex_; }

  [[nodiscard]] Graph induced(const VertexSet& keep) const;
  [[nodiscard]] Graph remove_vertices(const VertexSet& drop) const { return induced(complement(drop)); }
  [[nodiscard]] Graph remove_edges(const std::vector<EdgeId>& drop) const;

  // Same vertex ids, same edge ids and endpoints (provenance ignored).
  [[nodiscard]] bool same_structure(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  friend Graph contract(const Graph& g, const VertexSet& x, Vertex new_label);
  void rebuild_adjacency();

  VertexSet vertices_;
  std::vector<Edge> edges_;  // sorted by id
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<Vertex, VertexSet> provenance_;
  Vertex next_vertex_ = 0;
};

// Canonical edge cut. The stored shore is the lexicographically smaller of X
// and its complement, so the cut of X and of its complement compare equal.
class Cut {
 public:
  [[nodiscard]] const VertexSet& shore() const { return shore_; }
  [[nodiscard]] const VertexSet& other_shore() const { return other_; }
  [[nodiscard]] const std::vector<EdgeId>& edges() const { return boundary_; }
  [[nodiscard]] bool trivial() const { return shore_.size() == 1 || other_.size() == 1; }
  // The shore among the two that contains v.
  [[nodiscard]] const VertexSet& shore_containing(Vertex v) const {
    return shore_.contains(v) ? shore_ : other_;
  }
  [[nodiscard]] bool has_shore(const VertexSet& s) const { return s == shore_ || s == other_; }

  friend bool operator==(const Cut& a, const Cut& b) { return a.shore_ == b.shore_ && a.other_ == b.other_; }
  friend auto operator<=>(const Cut& a, const Cut& b) { return a.shore_ <=> b.shore_; }

 private:
  friend Cut boundary(const Graph& g, const VertexSet& x);
  VertexSet shore_;
  VertexSet other_;
  std::vector<EdgeId> boundary_;
};

// ∂(X). Throws InvalidShoreError unless X is a nonempty proper subset of V(g).
Cut boundary(const Graph& g, const VertexSet& x);

// g/(X→new_label). Edges inside X vanish, edges of ∂(X) keep their ids with
// the X endpoint replaced by new_label. new_label must not already be a vertex
// of g outside X; Graph::next_fresh_vertex() is always safe.
Graph contract(const Graph& g, const VertexSet& x, Vertex new_label);

// (g/X̄, g/X) for a nontrivial cut, with fresh labels.
std::pair<Graph, Graph> cut_contractions(const Graph& g, const Cut& c);

// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
// Components of g - removed, without materialising the subgraph.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

struct ParitySplit {
  std::vector<VertexSet> odd;
  std::vector<VertexSet> even;
};
ParitySplit odd_even_split(const std::vector<VertexSet>& parts);

bool is_connected(const Graph& g);
// Connectivity of the subgraph induced by s (the empty set counts as connected).
bool is_connected_subset(const Graph& g, const VertexSet& s);
bool is_2connected(const Graph& g);
VertexSet cut_vertices(const Graph& g);
// Maximal 2-connected subgraphs and bridges, as vertex sets, sorted.
std::vector<VertexSet> blocks(const Graph& g);

// True iff all four quadrants X∩Y, X∩Ȳ, X̄∩Y, X̄∩Ȳ are nonempty.
bool crosses(const Graph& g, const Cut& c, const Cut& d);

}  // namespace tightcut
