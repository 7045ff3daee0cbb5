#include "tightcut/tightcuts.hpp"

#include <algorithm>
#include <string>

#include "detail/subsets.hpp"
#include "tightcut/errors.hpp"

namespace tightcut {

TightnessOracle::TightnessOracle(const Graph& g, int max_vertices) : graph_(&g) {
  for (const Matching& m : all_perfect_matchings(g, max_vertices)) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m.edges().size());
    for (EdgeId id : m.edges()) {
      const Edge& e = g.edge(id);
      pairs.emplace_back(g.index_of(e.u), g.index_of(e.v));
    }
    matchings_.push_back(std::move(pairs));
  }
}

bool TightnessOracle::tight_mask(const std::vector<char>& in_shore) const {
  for (const auto& m : matchings_) {
    int crossing = 0;
    for (auto [a, b] : m)
      if (in_shore[a] != in_shore[b]) ++crossing;
    if (crossing != 1) return false;
  }
  return true;
}

bool TightnessOracle::is_tight(const VertexSet& shore) const {
  std::vector<char> in_shore(graph_->num_vertices(), 0);
  for (Vertex v : shore) in_shore[graph_->index_of(v)] = 1;
  return tight_mask(in_shore);
}

bool is_tight(const Graph& g, const Cut& c) { return TightnessOracle(g).is_tight(c.shore()); }

std::vector<Cut> enumerate_tight_cuts(const Graph& g, bool nontrivial_only, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices)
    throw GuardExceededError("tight cut enumeration refused: " + std::to_string(n) + " vertices exceeds limit " +
                             std::to_string(max_vertices));
  std::vector<Cut> out;
  if (n < 2) return out;
  TightnessOracle oracle(g);
  // The canonical shore is the one holding the smallest vertex (dense index 0).
  std::vector<char> in_shore(n, 0);
  const unsigned long long total = 1ULL << (n - 1);
  for (unsigned long long mask = 0; mask + 1 < total; ++mask) {
    int size = 1 + __builtin_popcountll(mask);
    if (size % 2 == 0) continue;  // a perfect matching meets an even shore's cut evenly
    if (nontrivial_only && (size == 1 || n - size == 1)) continue;
    in_shore[0] = 1;
    for (int i = 1; i < n; ++i) in_shore[i] = static_cast<char>((mask >> (i - 1)) & 1ULL);
    if (!oracle.tight_mask(in_shore)) continue;
    std::vector<Vertex> shore;
    for (int i = 0; i < n; ++i)
      if (in_shore[i]) shore.push_back(g.vertex_at(i));
    out.push_back(boundary(g, VertexSet(std::move(shore))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BarrierWitness> barrier_witnesses(const Graph& g, const Cut& c) {
  std::vector<BarrierWitness> out;
  for (const VertexSet* s : {&c.shore(), &c.other_shore()}) {
    if (!is_connected_subset(g, *s)) continue;
    VertexSet outside = g.complement(*s);
    std::vector<Vertex> attach;
    for (EdgeId id : c.edges()) {
      const Edge& e = g.edge(id);
      attach.push_back(s->contains(e.u) ? e.v : e.u);
    }
    VertexSet base(std::move(attach));
    VertexSet optional = outside.minus(base);
    // Smallest candidate (the attachment set itself) first.
    detail::for_each_subset(optional, 0, optional.size(), [&](const VertexSet& extra) {
      VertexSet candidate = base.unite(extra);
      if (candidate.empty() || candidate.size() == g.vertices().size()) return true;
      auto b = is_barrier(g, candidate);
      if (!b) return true;
      auto it = std::find(b->odd_parts.begin(), b->odd_parts.end(), *s);
      if (it != b->odd_parts.end()) {
        int idx = static_cast<int>(it - b->odd_parts.begin());
        out.push_back({std::move(*b), idx});
      }
      return true;
    });
  }
  return out;
}

std::optional<TwoSeparation> two_separation_witness(const Graph& g, const VertexSet& x) {
  VertexSet xbar = g.complement(x);
  if (x.size() < 2 || xbar.size() < 2) return std::nullopt;
  std::vector<Edge> cut_edges;
  for (const Edge& e : g.edges())
    if (x.contains(e.u) != x.contains(e.v)) cut_edges.push_back(e);
  for (Vertex a : x) {
    for (Vertex b : xbar) {
      bool covered = std::all_of(cut_edges.begin(), cut_edges.end(),
                                 [&](const Edge& e) { return e.touches(a) || e.touches(b); });
      if (!covered) continue;
      TwoSeparation s{a, b, x.with(b), xbar.with(a)};
      if (s.side1 > s.side2) std::swap(s.side1, s.side2);
      if (is_two_separation(g, s)) return s;
    }
  }
  return std::nullopt;
}

bool witness_generates(const Graph& g, const BarrierWitness& w, const Cut& c) {
  if (w.barrier.members.empty() || w.barrier.members.size() >= g.vertices().size()) return false;
  if (!w.barrier.members.subset_of(g.vertices())) return false;
  auto b = is_barrier(g, w.barrier.members);
  if (!b || b->odd_parts != w.barrier.odd_parts) return false;
  if (w.component < 0 || w.component >= static_cast<int>(b->odd_parts.size())) return false;
  return c.has_shore(b->odd_parts[w.component]);
}

bool witness_generates(const Graph& g, const TwoSeparation& s, const Cut& c) {
  if (!is_two_separation(g, s)) return false;
  auto cuts = two_separation_cuts(g, s);
  return std::find(cuts.begin(), cuts.end(), c) != cuts.end();
}

CutClassification classify_cut(const Graph& g, const Cut& c) {
  CutClassification out;
  out.trivial = c.trivial();
  out.tight = is_tight(g, c);
  out.barrier_witnesses = barrier_witnesses(g, c);
  for (TwoSeparation& s : find_2separations(g))
    if (witness_generates(g, s, c)) out.twosep_witnesses.push_back(std::move(s));
  out.elp = out.tight && (!out.barrier_witnesses.empty() || !out.twosep_witnesses.empty());
  return out;
}

}  // namespace tightcut
