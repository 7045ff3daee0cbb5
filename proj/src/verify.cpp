#include <algorithm>
#include <string>

#include "tightcut/decompose.hpp"

namespace tightcut {

std::string_view reason_name(VerifyReason r) {
  switch (r) {
    case VerifyReason::kOk: return "ok";
    case VerifyReason::kInputMismatch: return "input mismatch";
    case VerifyReason::kReferenceNotTight: return "reference cut not a nontrivial tight cut";
    case VerifyReason::kStepCountMismatch: return "step count mismatch";
    case VerifyReason::kCutInvalid: return "cut shore invalid";
    case VerifyReason::kCutTrivial: return "cut trivial";
    case VerifyReason::kWitnessNotBarrier: return "witness not a barrier";
    case VerifyReason::kWitnessNotTwoSeparation: return "witness not a 2-separation";
    case VerifyReason::kWitnessCutMismatch: return "witness does not generate cut";
    case VerifyReason::kCutNotTight: return "cut not tight";
    case VerifyReason::kCutCrosses: return "cut crosses reference";
    case VerifyReason::kContractedShoreInvalid: return "contracted shore invalid";
    case VerifyReason::kContractionMismatch: return "contraction mismatch";
    case VerifyReason::kReferenceCutLost: return "reference cut lost";
    case VerifyReason::kFinalGraphMismatch: return "final graph mismatch";
    case VerifyReason::kFinalNotElp: return "reference cut not elp";
    case VerifyReason::kFinalNotTwoSeparation: return "final not a 2-separation cut";
    case VerifyReason::kClassificationInvalid: return "classification invalid";
  }
  return "unknown";
}

namespace {

bool proper_shore(const Graph& g, const VertexSet& s) {
  return !s.empty() && s.size() < g.vertices().size() && s.subset_of(g.vertices());
}

// Edge-id accounting of next against cur/(s → label).
bool is_contraction_of(const Graph& cur, const VertexSet& s, Vertex label, const Graph& next, std::string& why) {
  if (next.vertices() != cur.vertices().minus(s).with(label)) {
    why = "vertex set differs";
    return false;
  }
  int expected = 0;
  for (const Edge& e : cur.edges()) {
    bool in_u = s.contains(e.u);
    bool in_v = s.contains(e.v);
    auto there = next.find_edge(e.id);
    if (in_u && in_v) {
      if (there) {
        why = "edge " + std::to_string(e.id) + " inside the contracted shore survives";
        return false;
      }
      continue;
    }
    ++expected;
    Vertex a = in_u ? label : e.u;
    Vertex b = in_v ? label : e.v;
    if (!there || std::minmax(there->u, there->v) != std::minmax(a, b)) {
      why = "edge " + std::to_string(e.id) + " missing or misplaced";
      return false;
    }
  }
  if (next.num_edges() != expected) {
    why = "unexpected extra edges";
    return false;
  }
  return true;
}

VerifyResult fail(VerifyReason r, int step, std::string detail) { return {r, step, std::move(detail)}; }

}  // namespace

VerifyResult verify_certificate(const Graph& g, const VertexSet& x, const DecompositionCertificate& cert) {
  if (!proper_shore(g, x)) return fail(VerifyReason::kInputMismatch, -1, "reference shore is not a proper vertex subset");
  if (!cert.input.same_structure(g)) return fail(VerifyReason::kInputMismatch, -1, "certificate input graph differs");
  if (!proper_shore(g, cert.input_shore) || boundary(g, cert.input_shore) != boundary(g, x))
    return fail(VerifyReason::kInputMismatch, -1, "certificate input cut differs");
  const Cut ref = boundary(g, x);
  if (ref.trivial() || !TightnessOracle(g).is_tight(ref.shore()))
    return fail(VerifyReason::kReferenceNotTight, -1, "");
  if (cert.r != static_cast<int>(cert.steps.size()) + 1)
    return fail(VerifyReason::kStepCountMismatch, -1,
                "r = " + std::to_string(cert.r) + " with " + std::to_string(cert.steps.size()) + " steps");

  Graph cur = g;
  VertexSet xc = x;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const int at = static_cast<int>(i);
    const CertificateStep& st = cert.steps[i];
    if (!st.graph.same_structure(cur))
      return fail(i == 0 ? VerifyReason::kInputMismatch : VerifyReason::kContractionMismatch, at,
                  "step graph is not the previous contraction");
    if (!proper_shore(cur, st.cut_shore)) return fail(VerifyReason::kCutInvalid, at, st.cut_shore.to_string());
    const Cut ci = boundary(cur, st.cut_shore);
    if (ci.trivial()) return fail(VerifyReason::kCutTrivial, at, st.cut_shore.to_string());

    if (st.witness.kind == ElpKind::kBarrier) {
      const Barrier& b = st.witness.barrier.barrier;
      auto fresh = proper_shore(cur, b.members) ? is_barrier(cur, b.members) : std::nullopt;
      if (!fresh || !fresh->nontrivial() || fresh->odd_parts != b.odd_parts)
        return fail(VerifyReason::kWitnessNotBarrier, at, b.members.to_string());
      int k = st.witness.barrier.component;
      if (k < 0 || k >= static_cast<int>(b.odd_parts.size()) || !ci.has_shore(b.odd_parts[k]))
        return fail(VerifyReason::kWitnessCutMismatch, at, "");
    } else {
      if (!is_two_separation(cur, st.witness.twosep)) return fail(VerifyReason::kWitnessNotTwoSeparation, at, "");
      auto cuts = two_separation_cuts(cur, st.witness.twosep);
      if (std::find(cuts.begin(), cuts.end(), ci) == cuts.end())
        return fail(VerifyReason::kWitnessCutMismatch, at, "");
    }

    if (!TightnessOracle(cur).is_tight(ci.shore())) return fail(VerifyReason::kCutNotTight, at, "");
    const VertexSet xbar = cur.complement(xc);
    const Cut cref = boundary(cur, xc);
    if (crosses(cur, ci, cref)) return fail(VerifyReason::kCutCrosses, at, "");

    const VertexSet& s = st.contracted_shore;
    if (!ci.has_shore(s) || !(s.proper_subset_of(xc) || s.proper_subset_of(xbar)))
      return fail(VerifyReason::kContractedShoreInvalid, at, s.to_string());
    if (cur.has_vertex(st.new_vertex) && !s.contains(st.new_vertex))
      return fail(VerifyReason::kContractionMismatch, at, "new vertex id already in use");

    const Graph& next = i + 1 < cert.steps.size() ? cert.steps[i + 1].graph : cert.final_graph;
    std::string why;
    if (!is_contraction_of(cur, s, st.new_vertex, next, why))
      return fail(VerifyReason::kContractionMismatch, at + 1, why);
    if (s.subset_of(xc)) xc = xc.minus(s).with(st.new_vertex);
    if (boundary(next, xc).edges() != ref.edges())
      return fail(VerifyReason::kReferenceCutLost, at + 1, "reference cut edges changed");
    cur = next;
  }

  const Cut final_ref = boundary(cur, xc);
  if (cert.steps.empty()) {
    if (!cert.final_graph.same_structure(g)) return fail(VerifyReason::kFinalGraphMismatch, -1, "");
    if (!two_separation_witness(g, x) && barrier_witnesses(g, ref).empty())
      return fail(VerifyReason::kFinalNotElp, -1, "");
  } else if (!two_separation_witness(cur, xc)) {
    return fail(VerifyReason::kFinalNotTwoSeparation, -1, "");
  }

  const CutClassification& cls = cert.final_classification;
  if (!cls.tight || !cls.elp || cls.trivial) return fail(VerifyReason::kClassificationInvalid, -1, "flags");
  if (cls.barrier_witnesses.empty() && cls.twosep_witnesses.empty())
    return fail(VerifyReason::kClassificationInvalid, -1, "no witnesses");
  if (!cert.steps.empty() && cls.twosep_witnesses.empty())
    return fail(VerifyReason::kClassificationInvalid, -1, "no 2-separation witness");
  for (const BarrierWitness& w : cls.barrier_witnesses)
    if (!witness_generates(cur, w, final_ref)) return fail(VerifyReason::kClassificationInvalid, -1, "barrier witness");
  for (const TwoSeparation& s : cls.twosep_witnesses)
    if (!witness_generates(cur, s, final_ref)) return fail(VerifyReason::kClassificationInvalid, -1, "2-separation witness");
  return {};
}

}  // namespace tightcut
