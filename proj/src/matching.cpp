#include "tightcut/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "tightcut/errors.hpp"

namespace tightcut {

Matching::Matching(const Graph& g, std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  std::vector<char> covered(g.num_vertices(), 0);
  for (EdgeId id : edges_) {
    const Edge& e = g.edge(id);
    for (Vertex w : {e.u, e.v}) {
      int i = g.index_of(w);
      if (covered[i]) throw PreconditionError("edges of a matching share vertex " + std::to_string(w));
      covered[i] = 1;
    }
  }
  perfect_ = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool Matching::contains(EdgeId e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

namespace {

// Classic O(V^3) Edmonds blossom search on the dense indices of a Graph,
// restricted to the vertices marked alive.
class Blossom {
 public:
  Blossom(const Graph& g, const std::vector<char>& alive)
      : g_(g), alive_(alive), n_(g.num_vertices()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  int run() {
    int size = 0;
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || mate_[v] >= 0) continue;
      for (const Incidence& inc : g_.incidences(v)) {
        int w = inc.neighbor;
        if (alive_[w] && mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || mate_[v] >= 0) continue;
      int end = find_path(v);
      if (end < 0) continue;
      ++size;
      while (end >= 0) {
        int pv = parent_[end];
        int ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

  [[nodiscard]] const std::vector<int>& mate() const { return mate_; }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g_.incidences(v)) {
        int to = inc.neighbor;
        if (!alive_[to] || base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (alive_[i] && in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  const std::vector<char>& alive_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

std::vector<char> alive_mask(const Graph& g, const VertexSet& removed) {
  std::vector<char> alive(g.num_vertices(), 1);
  for (Vertex v : removed) {
    int i = g.index_of(v);
    if (i >= 0) alive[i] = 0;
  }
  return alive;
}

bool perfect_on(const Graph& g, const std::vector<char>& alive) {
  int count = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
  if (count % 2) return false;
  Blossom b(g, alive);
  return 2 * b.run() == count;
}

void enumerate(const Graph& g, std::vector<char>& alive, std::vector<EdgeId>& chosen, std::vector<Matching>& out) {
  int first = -1;
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (alive[i]) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    out.emplace_back(g, chosen);
    return;
  }
  alive[first] = 0;
  for (const Incidence& inc : g.incidences(first)) {
    int w = inc.neighbor;
    if (!alive[w]) continue;
    alive[w] = 0;
    if (perfect_on(g, alive)) {
      chosen.push_back(inc.edge);
      enumerate(g, alive, chosen, out);
      chosen.pop_back();
    }
    alive[w] = 1;
  }
  alive[first] = 1;
}

}  // namespace

std::optional<Matching> find_perfect_matching(const Graph& g) {
  std::vector<char> alive(g.num_vertices(), 1);
  if (g.num_vertices() % 2) return std::nullopt;
  Blossom b(g, alive);
  if (2 * b.run() != g.num_vertices()) return std::nullopt;
  std::vector<EdgeId> edges;
  const auto& mate = b.mate();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] < v) continue;
    EdgeId best = -1;
    for (const Incidence& inc : g.incidences(v))
      if (inc.neighbor == mate[v] && (best < 0 || inc.edge < best)) best = inc.edge;
    edges.push_back(best);
  }
  return Matching(g, std::move(edges));
}

bool has_perfect_matching(const Graph& g, const VertexSet& removed) {
  return perfect_on(g, alive_mask(g, removed));
}

int maximum_matching_size(const Graph& g, const VertexSet& removed) {
  auto alive = alive_mask(g, removed);
  Blossom b(g, alive);
  return b.run();
}

int enumeration_limit() {
  if (const char* env = std::getenv("TIGHTCUT_MAX_ENUM")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return 24;
}

std::vector<Matching> all_perfect_matchings(const Graph& g, int max_vertices) {
  if (g.num_vertices() > max_vertices)
    throw GuardExceededError("perfect matching enumeration refused: " + std::to_string(g.num_vertices()) +
                             " vertices exceeds limit " + std::to_string(max_vertices));
  std::vector<Matching> out;
  std::vector<char> alive(g.num_vertices(), 1);
  if (!perfect_on(g, alive)) return out;
  std::vector<EdgeId> chosen;
  enumerate(g, alive, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const Graph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return has_perfect_matching(g, VertexSet{edge.u, edge.v});
}

bool is_matching_covered(const Graph& g) {
  if (g.num_vertices() < 2 || g.num_edges() < 1 || !is_connected(g)) return false;
  if (!has_perfect_matching(g)) return false;
  // Admissibility depends only on the endpoint pair.
  std::set<std::pair<Vertex, Vertex>> checked;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    if (!checked.insert(key).second) continue;
    if (!has_perfect_matching(g, VertexSet{e.u, e.v})) return false;
  }
  return true;
}

bool is_critical(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  for (Vertex v : g.vertices())
    if (!has_perfect_matching(g, VertexSet{v})) return false;
  return true;
}

bool is_bicritical(const Graph& g) {
  if (g.num_vertices() < 2) return false;
  const auto& vs = g.vertices().members();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!has_perfect_matching(g, VertexSet{vs[i], vs[j]})) return false;
  return true;
}

}  // namespace tightcut
