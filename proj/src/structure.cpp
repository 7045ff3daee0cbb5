#include "tightcut/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "detail/subsets.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

std::optional<Barrier> is_barrier(const Graph& g, const VertexSet& b) {
  if (b.empty()) throw PreconditionError("barrier candidate is empty");
  if (!b.subset_of(g.vertices())) throw PreconditionError("barrier candidate " + b.to_string() + " is not a vertex subset");
  if (b.size() == g.vertices().size()) throw PreconditionError("barrier candidate is the whole vertex set");
  auto split = odd_even_split(components_without(g, b));
  if (split.odd.size() != b.size()) return std::nullopt;
  return Barrier{b, std::move(split.odd)};
}

std::vector<Cut> barrier_cuts(const Graph& g, const Barrier& b) {
  std::vector<Cut> out;
  out.reserve(b.odd_parts.size());
  for (const VertexSet& part : b.odd_parts) out.push_back(boundary(g, part));
  return out;
}

bool is_two_separation(const Graph& g, const TwoSeparation& s) {
  if (s.u == s.v || !g.has_vertex(s.u) || !g.has_vertex(s.v)) return false;
  VertexSet pair{s.u, s.v};
  if (s.side1.unite(s.side2) != g.vertices()) return false;
  if (s.side1.intersect(s.side2) != pair) return false;
  if (s.side1.size() % 2 || s.side2.size() % 2) return false;
  VertexSet left = s.side1.minus(pair);
  VertexSet right = s.side2.minus(pair);
  if (left.empty() || right.empty()) return false;
  for (const Edge& e : g.edges()) {
    if ((left.contains(e.u) && right.contains(e.v)) || (left.contains(e.v) && right.contains(e.u))) return false;
  }
  return true;
}

std::vector<TwoSeparation> find_2separations(const Graph& g) {
  std::vector<TwoSeparation> out;
  if (g.num_vertices() % 2) return out;
  const auto& vs = g.vertices().members();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      VertexSet pair{vs[i], vs[j]};
      auto parts = components_without(g, pair);
      const std::size_t k = parts.size();
      if (k < 2) continue;
      // parts[0] always goes to side1; the mask picks the rest of side1.
      const unsigned long long rest = 1ULL << (k - 1);
      for (unsigned long long mask = 0; mask < rest; ++mask) {
        if (mask == rest - 1) continue;  // side2 would be empty
        std::vector<Vertex> one(parts[0].begin(), parts[0].end());
        std::vector<Vertex> two;
        for (std::size_t p = 1; p < k; ++p) {
          auto& dst = (mask >> (p - 1)) & 1ULL ? one : two;
          dst.insert(dst.end(), parts[p].begin(), parts[p].end());
        }
        if (one.size() % 2 || two.size() % 2) continue;
        out.push_back({vs[i], vs[j], VertexSet(std::move(one)).unite(pair), VertexSet(std::move(two)).unite(pair)});
      }
    }
  }
  return out;
}

std::vector<Cut> two_separation_cuts(const Graph& g, const TwoSeparation& s) {
  std::vector<Cut> out{boundary(g, s.side1.without(s.u)), boundary(g, s.side1.without(s.v))};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph core(const Graph& g, const Barrier& b) {
  VertexSet keep = b.members;
  for (const VertexSet& part : b.odd_parts) keep = keep.unite(part);
  Graph h = g.induced(keep);
  std::vector<EdgeId> inside;
  for (const Edge& e : h.edges())
    if (b.members.contains(e.u) && b.members.contains(e.v)) inside.push_back(e.id);
  h = h.remove_edges(inside);
  for (const VertexSet& part : b.odd_parts) h = contract(h, part, h.next_fresh_vertex());
  return h;
}

std::optional<DMBarrier> is_dm_barrier(const Graph& g, const Barrier& b) {
  for (const VertexSet& part : b.odd_parts)
    if (part.size() > 1 && !is_critical(g.induced(part))) return std::nullopt;
  Graph h = core(g, b);
  if (!is_matching_covered(h)) return std::nullopt;
  return DMBarrier{b, std::move(h)};
}

namespace {

// Shore among {x, x̄} containing the barrier and all its odd parts, if any.
std::optional<VertexSet> containing_shore(const Barrier& b, const VertexSet& x, const VertexSet& xbar) {
  for (const VertexSet* s : {&x, &xbar}) {
    if (!b.members.subset_of(*s)) continue;
    bool all = std::all_of(b.odd_parts.begin(), b.odd_parts.end(),
                           [&](const VertexSet& part) { return part.subset_of(*s); });
    if (all) return *s;
  }
  return std::nullopt;
}

// A(G-w) + w, where D(G-w) is the set of vertices y with G-w-y matchable
// and A(G-w) its neighbourhood outside D. For matchable G this is a barrier
// whose odd components are the (factor-critical) components of G[D].
VertexSet gallai_edmonds_barrier(const Graph& g, Vertex w) {
  std::vector<Vertex> deficient;
  for (Vertex y : g.vertices())
    if (y != w && has_perfect_matching(g, VertexSet{w, y})) deficient.push_back(y);
  VertexSet d(std::move(deficient));
  std::vector<Vertex> attach{w};
  for (Vertex y : d)
    for (Vertex z : g.neighbors(y))
      if (z != w && !d.contains(z)) attach.push_back(z);
  return VertexSet(std::move(attach));
}

// Sub-barriers of b obtained from the sink elementary pieces of its core.
// In the core, orient matched edges barrier→component and the others
// component→barrier, and merge each matched pair into one node. A sink
// strongly connected piece K has every component vertex adjacent only to
// barrier vertices of K, so B∩K is a barrier of G whose core is H[K], which
// is matching covered.
std::vector<VertexSet> sink_refinements(const Graph& g, const Barrier& b) {
  Graph h = core(g, b);
  auto pm = find_perfect_matching(h);
  if (!pm) return {};
  std::map<Vertex, int> pair_of;  // core vertex -> pair index
  std::vector<Vertex> barrier_vertex_of_pair;
  for (EdgeId id : pm->edges()) {
    const Edge& e = h.edge(id);
    Vertex bv = b.members.contains(e.u) ? e.u : e.v;
    int p = static_cast<int>(barrier_vertex_of_pair.size());
    barrier_vertex_of_pair.push_back(bv);
    pair_of[e.u] = p;
    pair_of[e.v] = p;
  }
  const int np = static_cast<int>(barrier_vertex_of_pair.size());
  std::vector<std::vector<int>> out_edges(np);
  for (const Edge& e : h.edges()) {
    if (pm->contains(e.id)) continue;
    Vertex bv = b.members.contains(e.u) ? e.u : e.v;
    Vertex cv = e.other(bv);
    int from = pair_of.at(cv);
    int to = pair_of.at(bv);
    if (from != to) out_edges[from].push_back(to);
  }

  // Tarjan SCC.
  std::vector<int> index(np, -1), low(np, 0), comp(np, -1);
  std::vector<char> on_stack(np, 0);
  std::vector<int> stack;
  int counter = 0;
  int ncomp = 0;
  std::function<void(int)> strong = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : out_edges[v]) {
      if (index[w] < 0) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (int v = 0; v < np; ++v)
    if (index[v] < 0) strong(v);

  std::vector<char> has_exit(ncomp, 0);
  for (int v = 0; v < np; ++v)
    for (int w : out_edges[v])
      if (comp[v] != comp[w]) has_exit[comp[v]] = 1;
  std::vector<std::vector<Vertex>> members(ncomp);
  for (int v = 0; v < np; ++v) members[comp[v]].push_back(barrier_vertex_of_pair[v]);
  std::vector<VertexSet> out;
  for (int c = 0; c < ncomp; ++c)
    if (!has_exit[c]) out.emplace_back(std::move(members[c]));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DMBarrierFinding> accept(const Graph& g, const VertexSet& candidate, const VertexSet& x,
                                       const VertexSet& xbar) {
  if (candidate.empty() || candidate.size() >= g.vertices().size()) return std::nullopt;
  auto barrier = is_barrier(g, candidate);
  if (!barrier) return std::nullopt;
  auto shore = containing_shore(*barrier, x, xbar);
  if (!shore) return std::nullopt;
  auto dm = is_dm_barrier(g, *barrier);
  if (!dm) return std::nullopt;
  bool given = *shore == x;
  return DMBarrierFinding{std::move(*dm), std::move(*shore), given};
}

std::optional<DMBarrierFinding> constructive_search(const Graph& g, const VertexSet& x, const VertexSet& xbar) {
  // Endpoints of cut edges first, then every other vertex.
  std::vector<Vertex> order;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) != x.contains(e.v)) {
      order.push_back(e.u);
      order.push_back(e.v);
    }
  }
  VertexSet first(order);
  order.assign(first.begin(), first.end());
  for (Vertex v : g.vertices())
    if (!first.contains(v)) order.push_back(v);

  for (Vertex w : order) {
    VertexSet b0 = gallai_edmonds_barrier(g, w);
    if (b0.size() >= g.vertices().size()) continue;
    auto barrier = is_barrier(g, b0);
    if (!barrier) continue;
    for (const VertexSet& refined : sink_refinements(g, *barrier))
      if (auto found = accept(g, refined, x, xbar)) return found;
    if (auto found = accept(g, b0, x, xbar)) return found;
  }
  return std::nullopt;
}

std::optional<DMBarrierFinding> exhaustive_search(const Graph& g, const VertexSet& x, const VertexSet& xbar) {
  std::optional<DMBarrierFinding> result;
  const std::size_t largest = std::max(x.size(), xbar.size());
  for (std::size_t k = 1; k < largest && !result; ++k) {
    for (const VertexSet* s : {&x, &xbar}) {
      if (k >= s->size()) continue;
      detail::for_each_subset(*s, k, k, [&](const VertexSet& candidate) {
        result = accept(g, candidate, x, xbar);
        return !result;
      });
      if (result) break;
    }
  }
  return result;
}

}  // namespace

DMBarrierFinding find_dm_barrier(const Graph& g, const VertexSet& x, DMStrategy strategy) {
  if (x.empty() || !x.subset_of(g.vertices()) || x.size() == g.vertices().size())
    throw PreconditionError("find_dm_barrier: shore " + x.to_string() + " is not a proper nonempty vertex subset");
  VertexSet xbar = g.complement(x);
  if (!has_perfect_matching(g)) throw PreconditionError("find_dm_barrier: graph is not matchable");
  if (!is_connected_subset(g, x) || !is_connected_subset(g, xbar))
    throw PreconditionError("find_dm_barrier: a shore induces a disconnected subgraph");
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) != x.contains(e.v) && has_perfect_matching(g, VertexSet{e.u, e.v}))
      throw PreconditionError("find_dm_barrier: cut edge " + std::to_string(e.id) + " is admissible");
  }
  auto found = strategy == DMStrategy::kConstructive ? constructive_search(g, x, xbar) : exhaustive_search(g, x, xbar);
  if (!found)
    throw InternalError(std::string("find_dm_barrier: ") +
                        (strategy == DMStrategy::kConstructive ? "constructive" : "exhaustive") +
                        " search produced no verified DM-barrier for shore " + x.to_string());
  return std::move(*found);
}

Barrier lift_barrier_over_odd_component(const Graph& g, const Barrier& b, const VertexSet& y,
                                        Vertex contracted_label, const VertexSet& b_prime) {
  auto checked = is_barrier(g, b.members);
  if (!checked || checked->odd_parts != b.odd_parts) throw PreconditionError("lift: b is not a barrier of g");
  if (std::find(b.odd_parts.begin(), b.odd_parts.end(), y) == b.odd_parts.end())
    throw PreconditionError("lift: " + y.to_string() + " is not an odd component of g - b");
  if (!is_matching_covered(g)) throw PreconditionError("lift: g is not matching covered");
  Graph contracted = contract(g, g.complement(y), contracted_label);
  if (b_prime.empty() || !b_prime.subset_of(contracted.vertices()) || b_prime == contracted.vertices() ||
      !is_barrier(contracted, b_prime))
    throw PreconditionError("lift: " + b_prime.to_string() + " is not a barrier of the contraction");
  VertexSet lifted =
      b_prime.contains(contracted_label) ? b.members.unite(b_prime.without(contracted_label)) : b_prime;
  auto out = is_barrier(g, lifted);
  if (!out) throw InternalError("lift over odd component produced non-barrier " + lifted.to_string());
  return std::move(*out);
}

Barrier lift_barrier_over_2sep(const Graph& g, const TwoSeparation& s, const VertexSet& kept_shore,
                               Vertex contracted_label, const VertexSet& b) {
  if (!is_two_separation(g, s)) throw PreconditionError("lift: invalid 2-separation");
  bool is_cut_shore = false;
  for (const Cut& c : two_separation_cuts(g, s)) is_cut_shore = is_cut_shore || c.has_shore(kept_shore);
  if (!is_cut_shore) throw PreconditionError("lift: " + kept_shore.to_string() + " is not a shore of a 2-separation cut");
  if (!is_matching_covered(g)) throw PreconditionError("lift: g is not matching covered");
  Vertex far = kept_shore.contains(s.u) ? s.v : s.u;
  Graph contracted = contract(g, g.complement(kept_shore), contracted_label);
  if (b.empty() || !b.subset_of(contracted.vertices()) || b == contracted.vertices() || !is_barrier(contracted, b))
    throw PreconditionError("lift: " + b.to_string() + " is not a barrier of the contraction");
  VertexSet lifted = b.contains(contracted_label) ? b.without(contracted_label).with(far) : b;
  auto out = is_barrier(g, lifted);
  if (!out) throw InternalError("lift over 2-separation produced non-barrier " + lifted.to_string());
  return std::move(*out);
}

std::vector<Barrier> nontrivial_barriers_inside(const Graph& g, const VertexSet& shore) {
  std::vector<Barrier> out;
  if (shore.size() < 3) return out;
  detail::for_each_subset(shore, 2, shore.size() - 1, [&](const VertexSet& candidate) {
    if (auto b = is_barrier(g, candidate)) out.push_back(std::move(*b));
    return true;
  });
  return out;
}

}  // namespace tightcut
