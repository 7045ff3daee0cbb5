#pragma once

// Brute-force reference implementations used as test oracles. They read only
// the raw vertex and edge lists, never the library's algorithms.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "tightcut/graph.hpp"

namespace oracle {

using tightcut::EdgeId;
using tightcut::Graph;
using tightcut::Vertex;

// Every perfect matching as a sorted list of edge ids, by trying all edge
// subsets of size n/2 in index order.
inline std::vector<std::vector<EdgeId>> perfect_matchings(const Graph& g) {
  std::vector<std::vector<EdgeId>> out;
  const auto& edges = g.edges();
  const int n = g.num_vertices();
  if (n % 2) return out;
  std::vector<EdgeId> chosen;
  std::set<Vertex> used;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) * 2 == n) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
      if (used.count(edges[i].u) || used.count(edges[i].v)) continue;
      used.insert(edges[i].u);
      used.insert(edges[i].v);
      chosen.push_back(edges[i].id);
      rec(i + 1);
      chosen.pop_back();
      used.erase(edges[i].u);
      used.erase(edges[i].v);
    }
  };
  rec(0);
  return out;
}

// Connected components of g minus `removed`, as sorted vertex lists.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const std::set<Vertex>& removed = {}) {
  std::map<Vertex, Vertex> parent;
  for (Vertex v : g.vertices())
    if (!removed.count(v)) parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : g.edges())
    if (parent.count(e.u) && parent.count(e.v)) parent[find(e.u)] = find(e.v);
  std::map<Vertex, std::vector<Vertex>> groups;
  for (auto& [v, p] : parent) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [r, vs] : groups) out.push_back(vs);
  return out;
}

inline bool connected(const Graph& g) { return oracle::components(g, {}).size() == 1; }

inline int odd_components(const Graph& g, const std::set<Vertex>& removed) {
  int odd = 0;
  for (const auto& c : oracle::components(g, removed)) odd += static_cast<int>(c.size() % 2);
  return odd;
}

inline bool is_barrier(const Graph& g, const std::set<Vertex>& b) {
  return !b.empty() && odd_components(g, b) == static_cast<int>(b.size());
}

inline int crossing_count(const Graph& g, const std::vector<EdgeId>& pm, const std::set<Vertex>& x) {
  int k = 0;
  for (EdgeId id : pm) {
    for (const auto& e : g.edges())
      if (e.id == id && x.count(e.u) != x.count(e.v)) ++k;
  }
  return k;
}

inline bool is_tight(const Graph& g, const std::set<Vertex>& x) {
  for (const auto& pm : perfect_matchings(g))
    if (crossing_count(g, pm, x) != 1) return false;
  return true;
}

inline bool is_matching_covered(const Graph& g) {
  if (!connected(g)) return false;
  std::set<EdgeId> covered;
  for (const auto& pm : perfect_matchings(g)) covered.insert(pm.begin(), pm.end());
  return static_cast<int>(covered.size()) == g.num_edges() && g.num_edges() > 0;
}

// Nontrivial tight cuts as canonical shores (the side holding the smallest
// vertex), over all subsets.
inline std::set<std::set<Vertex>> nontrivial_tight_shores(const Graph& g) {
  std::set<std::set<Vertex>> out;
  const auto& vs = g.vertices().members();
  const int n = static_cast<int>(vs.size());
  const auto pms = perfect_matchings(g);
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::set<Vertex> x{vs[0]};
    for (int i = 1; i < n; ++i)
      if ((mask >> (i - 1)) & 1U) x.insert(vs[i]);
    if (x.size() < 3 || static_cast<int>(x.size()) > n - 3) continue;
    bool tight = !pms.empty();
    for (const auto& pm : pms) tight = tight && crossing_count(g, pm, x) == 1;
    if (tight) out.insert(x);
  }
  return out;
}

inline std::set<Vertex> to_set(const tightcut::VertexSet& s) { return {s.begin(), s.end()}; }

}  // namespace oracle
