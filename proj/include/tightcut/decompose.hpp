#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tightcut/graph.hpp"
#include "tightcut/structure.hpp"
#include "tightcut/tightcuts.hpp"

namespace tightcut {

// Branches of the constructive arguments, counted by the sweep harness.
enum class ProofBranch {
  kEdgeCase1,            // both cut-edge endpoints have a single neighbour across
  kEdgeCase2InnerShore,  // DM-barrier of G-R lands in X-u
  kEdgeSubcase21,        // u in an even component of G-R-B''
  kEdgeSubcase22Barrier, // u in an odd component, B'' nontrivial
  kEdgeSubcase22TwoSep,  // u in an odd component, B'' = {z}
  kGoodEdge,             // a cut edge with both shores-minus-endpoint connected exists
  kBlockBarrier,         // no good edge; barrier translated back from the block contraction
  kBlockTwoSep,          // no good edge; 2-separation {v,z} of G
  kTwoSepContraction,    // reduction step contracting a 2-separation cut
  kBarrierContraction,   // reduction step contracting a minimal barrier cut
};
inline constexpr std::size_t kProofBranchCount = 10;
std::string_view branch_name(ProofBranch b);

enum class ElpKind { kBarrier, kTwoSeparation };

// A nontrivial ELP-cut that does not cross a reference cut C = ∂(X).
//
// Barrier findings hold a nontrivial barrier properly inside one shore of C;
// the derived cut is the barrier cut of the odd component containing the
// other shore. Two-separation findings hold the 2-separation and its cut,
// which may be C itself.
struct ElpFinding {
  ElpKind kind = ElpKind::kBarrier;
  BarrierWitness barrier;
  VertexSet barrier_shore;  // shore of C properly containing the barrier
  TwoSeparation twosep;
  Cut cut;
  bool is_reference = false;  // cut == C
  std::vector<ProofBranch> path;
};

// Edge-local construction for C = ∂(x) and a cut edge e = uv, u ∈ x, with
// g[x-u] and g[x̄-v] connected. When u has two or more neighbours across the
// cut, u is the vertex split off in the second case; otherwise v is (mirror).
ElpFinding elp_from_edge(const Graph& g, const VertexSet& x, EdgeId e);

// A nontrivial ELP-cut not crossing the nontrivial tight cut ∂(x).
ElpFinding find_noncrossing_elp(const Graph& g, const VertexSet& x);

struct ElpWitness {
  ElpKind kind = ElpKind::kBarrier;
  BarrierWitness barrier;
  TwoSeparation twosep;
};

struct CertificateStep {
  Graph graph;
  VertexSet cut_shore;  // canonical shore of C_i in graph
  ElpWitness witness;
  VertexSet contracted_shore;
  Vertex new_vertex = 0;
};

// Contraction sequence G_1 = G, ..., G_r reducing C to a 2-separation cut, or
// r = 1 when C is already an ELP-cut of G.
struct DecompositionCertificate {
  Graph input;
  VertexSet input_shore;
  std::vector<CertificateStep> steps;
  Graph final_graph;
  CutClassification final_classification;
  int r = 1;
  std::vector<ProofBranch> path;  // not serialised
};

DecompositionCertificate decompose_tight_cut(const Graph& g, const VertexSet& x);

enum class VerifyReason {
  kOk,
  kInputMismatch,
  kReferenceNotTight,
  kStepCountMismatch,
  kCutInvalid,
  kCutTrivial,
  kWitnessNotBarrier,
  kWitnessNotTwoSeparation,
  kWitnessCutMismatch,
  kCutNotTight,
  kCutCrosses,
  kContractedShoreInvalid,
  kContractionMismatch,
  kReferenceCutLost,
  kFinalGraphMismatch,
  kFinalNotElp,
  kFinalNotTwoSeparation,
  kClassificationInvalid,
};
std::string_view reason_name(VerifyReason r);

struct VerifyResult {
  VerifyReason reason = VerifyReason::kOk;
  int step = -1;  // failing step index, -1 for input/final checks
  std::string detail;
  [[nodiscard]] bool ok() const { return reason == VerifyReason::kOk; }
};

// Re-checks a certificate from scratch using only the predicate modules.
VerifyResult verify_certificate(const Graph& g, const VertexSet& x, const DecompositionCertificate& cert);

}  // namespace tightcut
