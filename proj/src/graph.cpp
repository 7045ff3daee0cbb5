#include "tightcut/graph.hpp"

#include <algorithm>
#include <string>

#include "tightcut/errors.hpp"

namespace tightcut {

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id)
      throw PreconditionError("duplicate edge id " + std::to_string(e.id));
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    if (!vertices_.contains(e.u) || !vertices_.contains(e.v))
      throw PreconditionError("edge " + std::to_string(e.id) + " has an endpoint outside the vertex set");
  }
  next_vertex_ = vertices_.empty() ? 0 : vertices_.members().back() + 1;
  rebuild_adjacency();
}

Graph Graph::from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    es.push_back({static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
  return Graph(std::move(vs), std::move(es));
}

void Graph::rebuild_adjacency() {
  adjacency_.assign(vertices_.size(), {});
  for (const Edge& e : edges_) {
    int a = index_of(e.u);
    int b = index_of(e.v);
    adjacency_[a].push_back({b, e.id});
    adjacency_[b].push_back({a, e.id});
  }
}

int Graph::index_of(Vertex v) const {
  const auto& m = vertices_.members();
  auto it = std::lower_bound(m.begin(), m.end(), v);
  if (it == m.end() || *it != v) return -1;
  return static_cast<int>(it - m.begin());
}

std::optional<Edge> Graph::find_edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return *it;
}

const Edge& Graph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) throw UnknownEdgeError("unknown edge id " + std::to_string(id));
  return *it;
}

const std::vector<Incidence>& Graph::incidences_of(Vertex v) const {
  int i = index_of(v);
  if (i < 0) throw PreconditionError("unknown vertex " + std::to_string(v));
  return adjacency_[i];
}

VertexSet Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Incidence& inc : incidences_of(v)) out.push_back(vertex_at(inc.neighbor));
  return VertexSet(std::move(out));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  int ib = index_of(b);
  for (const Incidence& inc : incidences_of(a))
    if (inc.neighbor == ib) return true;
  return false;
}

VertexSet Graph::origin(Vertex v) const {
  auto it = provenance_.find(v);
  if (it != provenance_.end()) return it->second;
  return VertexSet{v};
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph out;
  out.vertices_ = keep.intersect(vertices_);
  for (const Edge& e : edges_)
    if (out.vertices_.contains(e.u) && out.vertices_.contains(e.v)) out.edges_.push_back(e);
  for (const auto& [v, tag] : provenance_)
    if (out.vertices_.contains(v)) out.provenance_.emplace(v, tag);
  out.next_vertex_ = next_vertex_;
  out.rebuild_adjacency();
  return out;
}

Graph Graph::remove_edges(const std::vector<EdgeId>& drop) const {
  std::vector<EdgeId> sorted = drop;
  std::sort(sorted.begin(), sorted.end());
  Graph out = *this;
  out.edges_.clear();
  for (const Edge& e : edges_)
    if (!std::binary_search(sorted.begin(), sorted.end(), e.id)) out.edges_.push_back(e);
  out.rebuild_adjacency();
  return out;
}

Cut boundary(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw InvalidShoreError("empty shore");
  if (!x.subset_of(g.vertices())) throw InvalidShoreError("shore " + x.to_string() + " is not a vertex subset");
  if (x.size() == g.vertices().size()) throw InvalidShoreError("shore equals the whole vertex set");
  Cut c;
  VertexSet y = g.complement(x);
  if (x < y) {
    c.shore_ = x;
    c.other_ = std::move(y);
  } else {
    c.shore_ = std::move(y);
    c.other_ = x;
  }
  for (const Edge& e : g.edges())
    if (x.contains(e.u) != x.contains(e.v)) c.boundary_.push_back(e.id);
  return c;
}

Graph contract(const Graph& g, const VertexSet& x, Vertex new_label) {
  if (x.empty() || !x.subset_of(g.vertices()) || x.size() == g.vertices().size())
    throw InvalidShoreError("cannot contract shore " + x.to_string());
  if (g.has_vertex(new_label) && !x.contains(new_label))
    throw PreconditionError("contraction label " + std::to_string(new_label) + " clashes with a kept vertex");
  Graph out;
  out.vertices_ = g.complement(x).with(new_label);
  for (const Edge& e : g.edges()) {
    bool in_u = x.contains(e.u);
    bool in_v = x.contains(e.v);
    if (in_u && in_v) continue;
    Edge kept = e;
    if (in_u) kept.u = new_label;
    if (in_v) kept.v = new_label;
    out.edges_.push_back(kept);
  }
  VertexSet tag;
  for (Vertex v : x) tag = tag.unite(g.origin(v));
  for (const auto& [v, t] : g.provenance())
    if (!x.contains(v)) out.provenance_.emplace(v, t);
  out.provenance_[new_label] = std::move(tag);
  out.next_vertex_ = std::max(g.next_fresh_vertex(), new_label + 1);
  out.rebuild_adjacency();
  return out;
}

std::pair<Graph, Graph> cut_contractions(const Graph& g, const Cut& c) {
  if (c.trivial()) throw PreconditionError("cut contractions of a trivial cut are not taken");
  Vertex fresh = g.next_fresh_vertex();
  return {contract(g, c.other_shore(), fresh), contract(g, c.shore(), fresh + 1)};
}

namespace {

std::vector<VertexSet> components_masked(const Graph& g, const std::vector<char>& alive) {
  int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      members.push_back(g.vertex_at(a));
      for (const Incidence& inc : g.incidences(a)) {
        if (alive[inc.neighbor] && comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = id;
          stack.push_back(inc.neighbor);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  // Dense order equals id order, so components are already ordered by
  // their smallest member.
  return out;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g) {
  return components_masked(g, std::vector<char>(g.num_vertices(), 1));
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  std::vector<char> alive(g.num_vertices(), 1);
  for (Vertex v : removed) {
    int i = g.index_of(v);
    if (i >= 0) alive[i] = 0;
  }
  return components_masked(g, alive);
}

ParitySplit odd_even_split(const std::vector<VertexSet>& parts) {
  ParitySplit out;
  for (const VertexSet& p : parts) (p.size() % 2 ? out.odd : out.even).push_back(p);
  auto by_min = [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); };
  std::stable_sort(out.odd.begin(), out.odd.end(), by_min);
  std::stable_sort(out.even.begin(), out.even.end(), by_min);
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  return components_without(g, g.complement(s)).size() <= 1;
}

namespace {

// Hopcroft–Tarjan biconnected components over edge ids, so parallel edges are
// handled by skipping only the tree edge itself.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> edge_stack;
  std::vector<VertexSet> found;
  std::vector<char> is_cut;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.num_vertices(), -1), low(graph.num_vertices(), 0), is_cut(graph.num_vertices(), 0) {}

  void pop_block(EdgeId until) {
    std::vector<Vertex> members;
    while (true) {
      EdgeId id = edge_stack.back();
      edge_stack.pop_back();
      const Edge& e = g.edge(id);
      members.push_back(e.u);
      members.push_back(e.v);
      if (id == until) break;
    }
    found.emplace_back(std::move(members));
  }

  void visit(int a, EdgeId parent_edge) {
    disc[a] = low[a] = timer++;
    int children = 0;
    for (const Incidence& inc : g.incidences(a)) {
      if (inc.edge == parent_edge) continue;
      int b = inc.neighbor;
      if (disc[b] < 0) {
        ++children;
        edge_stack.push_back(inc.edge);
        visit(b, inc.edge);
        low[a] = std::min(low[a], low[b]);
        if (low[b] >= disc[a]) {
          if (parent_edge >= 0 || children > 1) is_cut[a] = 1;
          pop_block(inc.edge);
        }
      } else if (disc[b] < disc[a]) {
        edge_stack.push_back(inc.edge);
        low[a] = std::min(low[a], disc[b]);
      }
    }
    if (parent_edge < 0 && children > 1) is_cut[a] = 1;
  }

  void run() {
    for (int s = 0; s < g.num_vertices(); ++s) {
      if (disc[s] >= 0) continue;
      if (g.incidences(s).empty()) {
        disc[s] = timer++;
        found.push_back(VertexSet{g.vertex_at(s)});
        continue;
      }
      visit(s, -1);
    }
    std::sort(found.begin(), found.end());
  }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  BlockFinder f(g);
  f.run();
  std::vector<Vertex> out;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (f.is_cut[i]) out.push_back(g.vertex_at(i));
  return VertexSet(std::move(out));
}

std::vector<VertexSet> blocks(const Graph& g) {
  BlockFinder f(g);
  f.run();
  return f.found;
}

bool is_2connected(const Graph& g) {
  return g.num_vertices() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

bool crosses(const Graph& g, const Cut& c, const Cut& d) {
  if (c.shore().unite(c.other_shore()) != g.vertices() || d.shore().unite(d.other_shore()) != g.vertices())
    throw PreconditionError("cuts belong to different host graphs");
  const VertexSet& x = c.shore();
  const VertexSet& xb = c.other_shore();
  const VertexSet& y = d.shore();
  const VertexSet& yb = d.other_shore();
  return x.intersects(y) && x.intersects(yb) && xb.intersects(y) && xb.intersects(yb);
}

}  // namespace tightcut
