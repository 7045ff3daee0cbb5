#include "tightcut/decompose.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "tightcut/errors.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

std::string_view branch_name(ProofBranch b) {
  switch (b) {
    case ProofBranch::kEdgeCase1: return "edge.case1";
    case ProofBranch::kEdgeCase2InnerShore: return "edge.case2.inner-shore";
    case ProofBranch::kEdgeSubcase21: return "edge.case2.even-component";
    case ProofBranch::kEdgeSubcase22Barrier: return "edge.case2.odd-component.barrier";
    case ProofBranch::kEdgeSubcase22TwoSep: return "edge.case2.odd-component.twosep";
    case ProofBranch::kGoodEdge: return "noncrossing.good-edge";
    case ProofBranch::kBlockBarrier: return "noncrossing.block.barrier";
    case ProofBranch::kBlockTwoSep: return "noncrossing.block.twosep";
    case ProofBranch::kTwoSepContraction: return "reduce.twosep-contraction";
    case ProofBranch::kBarrierContraction: return "reduce.barrier-contraction";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bug(const std::string& what) { throw InternalError(what); }

Cut require_tight_cut(const Graph& g, const VertexSet& x, const std::string& op) {
  if (x.empty() || !x.subset_of(g.vertices()) || x.size() == g.vertices().size())
    throw InvalidShoreError(op + ": invalid shore " + x.to_string());
  if (!is_matching_covered(g)) throw PreconditionError(op + ": graph is not matching covered");
  Cut c = boundary(g, x);
  if (c.trivial()) throw PreconditionError(op + ": cut is trivial");
  if (!is_tight(g, c)) throw PreconditionError(op + ": not a tight cut");
  return c;
}

ElpFinding barrier_finding(const Graph& g, const VertexSet& x, const VertexSet& members, std::vector<ProofBranch> path) {
  auto b = is_barrier(g, members);
  if (!b || !b->nontrivial()) bug("constructed set " + members.to_string() + " is not a nontrivial barrier");
  VertexSet xbar = g.complement(x);
  VertexSet shore;
  if (members.proper_subset_of(x))
    shore = x;
  else if (members.proper_subset_of(xbar))
    shore = xbar;
  else
    bug("barrier " + members.to_string() + " is not properly inside a shore");
  VertexSet other = g.complement(shore);
  int index = -1;
  for (std::size_t i = 0; i < b->odd_parts.size(); ++i)
    if (other.subset_of(b->odd_parts[i])) index = static_cast<int>(i);
  if (index < 0) bug("no odd component of G-B holds the opposite shore");
  Cut ref = boundary(g, x);
  Cut cut = boundary(g, b->odd_parts[index]);
  if (cut.trivial() || crosses(g, cut, ref)) bug("derived barrier cut is trivial or crosses the reference cut");
  ElpFinding f;
  f.kind = ElpKind::kBarrier;
  f.barrier = {std::move(*b), index};
  f.barrier_shore = std::move(shore);
  f.is_reference = cut == ref;
  f.cut = std::move(cut);
  f.path = std::move(path);
  return f;
}

ElpFinding twosep_finding(const Graph& g, const VertexSet& x, TwoSeparation s, const VertexSet& cut_shore,
                          std::vector<ProofBranch> path) {
  if (s.side1 > s.side2) std::swap(s.side1, s.side2);
  Cut cut = boundary(g, cut_shore);
  if (!witness_generates(g, s, cut)) bug("constructed 2-separation does not generate " + cut_shore.to_string());
  Cut ref = boundary(g, x);
  if (cut.trivial() || crosses(g, cut, ref)) bug("2-separation cut is trivial or crosses the reference cut");
  ElpFinding f;
  f.kind = ElpKind::kTwoSeparation;
  f.twosep = std::move(s);
  f.is_reference = cut == ref;
  f.cut = std::move(cut);
  f.path = std::move(path);
  return f;
}

VertexSet part_containing(const std::vector<VertexSet>& parts, Vertex v) {
  for (const VertexSet& p : parts)
    if (p.contains(v)) return p;
  bug("vertex " + std::to_string(v) + " lies in no component");
}

}  // namespace

ElpFinding elp_from_edge(const Graph& g, const VertexSet& x, EdgeId id) {
  require_tight_cut(g, x, "elp_from_edge");
  auto found = g.find_edge(id);
  if (!found) throw UnknownEdgeError("unknown edge id " + std::to_string(id));
  const Edge e = *found;
  if (x.contains(e.u) == x.contains(e.v)) throw PreconditionError("elp_from_edge: edge is not in the cut");
  const Vertex u = x.contains(e.u) ? e.u : e.v;
  const Vertex v = e.other(u);
  const VertexSet xbar = g.complement(x);
  if (!is_connected_subset(g, x.without(u)) || !is_connected_subset(g, xbar.without(v)))
    throw PreconditionError("elp_from_edge: a shore minus its edge endpoint is disconnected");

  const VertexSet across_u = g.neighbors(u).intersect(xbar);
  const VertexSet across_v = g.neighbors(v).intersect(x);

  if (across_u == VertexSet{v} && across_v == VertexSet{u}) {
    // G-u-v with the cut between x-u and x̄-v; every remaining cut edge is
    // inadmissible there.
    Graph rest = g.remove_vertices(VertexSet{u, v});
    DMBarrierFinding dm = find_dm_barrier(rest, x.without(u));
    VertexSet b = dm.dm.barrier.members.with(dm.in_given_shore ? u : v);
    return barrier_finding(g, x, b, {ProofBranch::kEdgeCase1});
  }

  const bool mirrored = across_u.size() < 2;
  const Vertex a = mirrored ? v : u;
  const VertexSet& home = mirrored ? xbar : x;
  const VertexSet& away = mirrored ? x : xbar;

  // Drop the edges from a into its own shore; a then only reaches across.
  std::vector<EdgeId> inner;
  for (const Incidence& inc : g.incidences_of(a))
    if (home.contains(g.vertex_at(inc.neighbor))) inner.push_back(inc.edge);
  Graph h = g.remove_edges(inner);
  const VertexSet home_rest = home.without(a);
  DMBarrierFinding dm = find_dm_barrier(h, home_rest);
  const Barrier& b2 = dm.dm.barrier;

  if (dm.in_given_shore) return barrier_finding(g, x, b2.members.with(a), {ProofBranch::kEdgeCase2InnerShore});

  if (b2.members.contains(a)) bug("split vertex lies in the DM-barrier");
  auto parts = components_without(h, b2.members);
  VertexSet holder = part_containing(parts, a);
  if (holder.size() % 2 == 0) {
    if (!home_rest.subset_of(holder)) bug("even component of the split vertex misses its shore");
    VertexSet candidates = holder.intersect(away);
    if (candidates.empty()) bug("even component of the split vertex has no vertex across the cut");
    return barrier_finding(g, x, b2.members.with(candidates.front()), {ProofBranch::kEdgeSubcase21});
  }
  if (b2.nontrivial()) return barrier_finding(g, x, b2.members, {ProofBranch::kEdgeSubcase22Barrier});

  const Vertex z = b2.members.front();
  TwoSeparation s{a, z, holder.with(z), g.complement(holder.without(a))};
  return twosep_finding(g, x, std::move(s), holder.without(a).with(z), {ProofBranch::kEdgeSubcase22TwoSep});
}

ElpFinding find_noncrossing_elp(const Graph& g, const VertexSet& x) {
  const Cut ref = require_tight_cut(g, x, "find_noncrossing_elp");
  const VertexSet xbar = g.complement(x);

  for (EdgeId id : ref.edges()) {
    const Edge& e = g.edge(id);
    Vertex u = x.contains(e.u) ? e.u : e.v;
    Vertex v = e.other(u);
    if (is_connected_subset(g, x.without(u)) && is_connected_subset(g, xbar.without(v))) {
      ElpFinding f = elp_from_edge(g, x, id);
      f.path.insert(f.path.begin(), ProofBranch::kGoodEdge);
      return f;
    }
  }

  // Every cut edge has an endpoint that is a cut vertex of its shore. Pick a
  // cut vertex v of g[x] on the cut and a component F1 of g[x]-v free of
  // such vertices.
  const Graph gx = g.induced(x);
  std::vector<Vertex> touching;
  for (EdgeId id : ref.edges()) {
    const Edge& e = g.edge(id);
    touching.push_back(x.contains(e.u) ? e.u : e.v);
  }
  const VertexSet bad = cut_vertices(gx).intersect(VertexSet(std::move(touching)));
  Vertex pivot = -1;
  VertexSet f1;
  for (Vertex v : bad) {
    for (const VertexSet& part : components_without(gx, VertexSet{v})) {
      if (!part.intersects(bad)) {
        pivot = v;
        f1 = part;
        break;
      }
    }
    if (pivot >= 0) break;
  }
  if (pivot < 0) bug("no cut vertex of the shore with a clean component");

  const VertexSet f2 = x.minus(f1);
  const Vertex s = g.next_fresh_vertex();
  const Graph g2 = contract(g, f2, s);
  const VertexSet x2 = f1.with(s);
  if (!is_2connected(g2.induced(xbar.with(s)))) bug("contracted opposite shore plus s is not 2-connected");
  const VertexSet xbar_cuts = cut_vertices(g.induced(xbar));
  Vertex w = -1;
  for (Vertex c : g2.neighbors(s).intersect(xbar)) {
    if (!xbar_cuts.contains(c)) {
      w = c;
      break;
    }
  }
  if (w < 0) bug("no non-cut neighbour of the contracted vertex");
  EdgeId sw = -1;
  for (const Incidence& inc : g2.incidences_of(s))
    if (g2.vertex_at(inc.neighbor) == w && (sw < 0 || inc.edge < sw)) sw = inc.edge;

  ElpFinding inner = elp_from_edge(g2, x2, sw);
  std::vector<ProofBranch> path{ProofBranch::kBlockBarrier};
  if (inner.kind == ElpKind::kBarrier) {
    VertexSet b = inner.barrier.barrier.members;
    if (b.contains(s)) b = b.without(s).with(pivot);
    path.insert(path.end(), inner.path.begin(), inner.path.end());
    return barrier_finding(g, x, b, std::move(path));
  }
  if (!inner.is_reference) bug("2-separation outcome in the block contraction is not the reference cut");
  const Vertex z = inner.twosep.u == s ? inner.twosep.v : inner.twosep.u;
  if (!xbar.contains(z)) bug("2-separation partner of the contracted vertex is not across the cut");
  path.front() = ProofBranch::kBlockTwoSep;
  path.insert(path.end(), inner.path.begin(), inner.path.end());
  TwoSeparation sep{pivot, z, f1.with(pivot).with(z), g.complement(f1)};
  return twosep_finding(g, x, std::move(sep), f1.with(pivot), std::move(path));
}

DecompositionCertificate decompose_tight_cut(const Graph& g, const VertexSet& x) {
  const Cut ref = require_tight_cut(g, x, "decompose_tight_cut");
  DecompositionCertificate cert;
  cert.input = g;
  cert.input_shore = x;

  CutClassification initial = classify_cut(g, ref);
  if (initial.elp) {
    cert.final_graph = g;
    cert.final_classification = std::move(initial);
    cert.r = 1;
    return cert;
  }

  Graph cur = g;
  VertexSet xc = x;

  // Barrier phase: while a nontrivial barrier lies properly inside a shore
  // (x̄ side first), contract the barrier cut whose odd component Y ⊇ opposite
  // shore is smallest. One pass per side does not always suffice: two
  // barriers with incomparable Y of equal size leave the second one behind,
  // with the contracted vertex in its odd component.
  while (true) {
    const VertexSet xbar_now = cur.complement(xc);
    auto inside = nontrivial_barriers_inside(cur, xbar_now);
    bool complement_side = !inside.empty();
    if (!complement_side) inside = nontrivial_barriers_inside(cur, xc);
    if (inside.empty()) break;
    const VertexSet opposite = complement_side ? xc : xbar_now;
    std::optional<std::tuple<std::size_t, VertexSet, VertexSet>> best;
    BarrierWitness best_witness;
    for (Barrier& b : inside) {
      for (std::size_t i = 0; i < b.odd_parts.size(); ++i) {
        if (!opposite.subset_of(b.odd_parts[i])) continue;
        auto key = std::make_tuple(b.odd_parts[i].size(), b.odd_parts[i], b.members);
        if (!best || key < *best) {
          best = key;
          best_witness = {b, static_cast<int>(i)};
        }
      }
    }
    if (!best) bug("barrier inside a shore without an odd component holding the other shore");
    const VertexSet& y = std::get<1>(*best);
    CertificateStep step;
    step.graph = cur;
    step.cut_shore = boundary(cur, y).shore();
    step.witness = {ElpKind::kBarrier, best_witness, {}};
    step.contracted_shore = cur.complement(y);
    step.new_vertex = cur.next_fresh_vertex();
    Graph next = contract(cur, step.contracted_shore, step.new_vertex);
    if (!complement_side) xc = xc.minus(step.contracted_shore).with(step.new_vertex);
    cert.steps.push_back(std::move(step));
    cert.path.push_back(ProofBranch::kBarrierContraction);
    cur = std::move(next);
  }

  // 2-separation phase.
  while (!two_separation_witness(cur, xc)) {
    ElpFinding f = find_noncrossing_elp(cur, xc);
    if (f.kind != ElpKind::kTwoSeparation) bug("barrier finding while no barrier lies inside a shore");
    if (f.is_reference) bug("finding returned the reference cut although it is not a 2-separation cut");
    const VertexSet xbar = cur.complement(xc);
    VertexSet contracted;
    for (const VertexSet* s : {&f.cut.shore(), &f.cut.other_shore()})
      if (s->subset_of(xc) || s->subset_of(xbar)) contracted = *s;
    if (contracted.empty()) bug("2-separation cut has no shore inside a shore of the reference cut");
    CertificateStep step;
    step.graph = cur;
    step.cut_shore = f.cut.shore();
    step.witness = {ElpKind::kTwoSeparation, {}, f.twosep};
    step.contracted_shore = contracted;
    step.new_vertex = cur.next_fresh_vertex();
    Graph next = contract(cur, contracted, step.new_vertex);
    if (contracted.subset_of(xc)) xc = xc.minus(contracted).with(step.new_vertex);
    cert.steps.push_back(std::move(step));
    cert.path.push_back(ProofBranch::kTwoSepContraction);
    cert.path.insert(cert.path.end(), f.path.begin(), f.path.end());
    cur = std::move(next);
  }

  cert.final_classification = classify_cut(cur, boundary(cur, xc));
  if (!cert.final_classification.tight || cert.final_classification.twosep_witnesses.empty())
    bug("final graph does not certify the reference cut as a 2-separation cut");
  cert.final_graph = std::move(cur);
  cert.r = static_cast<int>(cert.steps.size()) + 1;
  return cert;
}

}  // namespace tightcut
