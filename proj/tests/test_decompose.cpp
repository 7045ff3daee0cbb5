#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tightcut/decompose.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/instances.hpp"
#include "tightcut/sweep.hpp"

using namespace tightcut;

namespace {

HarvestedInstance fixture(const std::string& name) {
  return read_fixture(std::string(FIXTURE_DIR) + "/" + name + ".el");
}

bool has(const std::vector<ProofBranch>& path, ProofBranch b) {
  return std::find(path.begin(), path.end(), b) != path.end();
}

// Finding re-checked with the brute-force oracles.
void expect_valid_finding(const Graph& g, const VertexSet& x, const ElpFinding& f) {
  const Cut ref = boundary(g, x);
  EXPECT_FALSE(f.cut.trivial());
  EXPECT_TRUE(oracle::is_tight(g, oracle::to_set(f.cut.shore())));
  EXPECT_FALSE(crosses(g, f.cut, ref));
  if (f.kind == ElpKind::kBarrier) {
    const VertexSet& b = f.barrier.barrier.members;
    EXPECT_TRUE(oracle::is_barrier(g, oracle::to_set(b)));
    EXPECT_GE(b.size(), 2u);
    EXPECT_TRUE(b.proper_subset_of(x) || b.proper_subset_of(g.complement(x)));
    EXPECT_TRUE(f.cut.has_shore(f.barrier.barrier.odd_parts.at(f.barrier.component)));
  } else {
    EXPECT_TRUE(is_two_separation(g, f.twosep));
    EXPECT_EQ(f.is_reference, f.cut == ref);
  }
}

}  // namespace

TEST(ElpFromEdge, C6CaseOne) {
  Graph c6 = canonical("C2k(3)");
  const VertexSet x{0, 1, 2};
  // Edge 2 joins 2 and 3.
  ASSERT_EQ(c6.edge(2).u + c6.edge(2).v, 5);
  ElpFinding f = elp_from_edge(c6, x, 2);
  EXPECT_EQ(f.path, std::vector<ProofBranch>{ProofBranch::kEdgeCase1});
  EXPECT_EQ(f.kind, ElpKind::kBarrier);
  expect_valid_finding(c6, x, f);
}

TEST(ElpFromEdge, Preconditions) {
  Graph c6 = canonical("C2k(3)");
  EXPECT_THROW(elp_from_edge(c6, VertexSet{0, 1, 2}, 0), PreconditionError);  // 0-1 is not a cut edge
  EXPECT_THROW(elp_from_edge(c6, VertexSet{0, 1, 2}, 99), UnknownEdgeError);
  Graph k4 = canonical("K4");
  EXPECT_THROW(elp_from_edge(k4, VertexSet{0, 1}, 1), PreconditionError);
  EXPECT_THROW(elp_from_edge(c6, VertexSet{}, 2), InvalidShoreError);
}

TEST(FindNoncrossing, C6AndBricks) {
  Graph c6 = canonical("C2k(3)");
  ElpFinding f = find_noncrossing_elp(c6, VertexSet{0, 1, 2});
  expect_valid_finding(c6, VertexSet{0, 1, 2}, f);
  Graph p = canonical("PETERSEN");
  EXPECT_THROW(find_noncrossing_elp(p, VertexSet{0, 1, 2}), PreconditionError);
}

TEST(FindNoncrossing, EachReachableBranchHasAFixture) {
  const std::vector<std::pair<std::string, ProofBranch>> cases{
      {"edge.case1", ProofBranch::kEdgeCase1},
      {"edge.case2.inner-shore", ProofBranch::kEdgeCase2InnerShore},
      {"edge.case2.odd-component.barrier", ProofBranch::kEdgeSubcase22Barrier},
      {"edge.case2.odd-component.twosep", ProofBranch::kEdgeSubcase22TwoSep},
      {"noncrossing.good-edge", ProofBranch::kGoodEdge},
      {"noncrossing.block.barrier", ProofBranch::kBlockBarrier},
      {"noncrossing.block.twosep", ProofBranch::kBlockTwoSep},
  };
  for (const auto& [name, branch] : cases) {
    auto fx = fixture(name);
    ElpFinding f = find_noncrossing_elp(fx.graph, fx.shore);
    expect_valid_finding(fx.graph, fx.shore, f);
    // The branch may be reached on a contracted graph during decomposition.
    DecompositionCertificate cert = decompose_tight_cut(fx.graph, fx.shore);
    EXPECT_TRUE(has(f.path, branch) || has(cert.path, branch)) << name;
    EXPECT_TRUE(verify_certificate(fx.graph, fx.shore, cert).ok()) << name;
  }
}

TEST(FindNoncrossing, BlockTwoSeparationCutIsPivotPlusComponent) {
  auto fx = fixture("noncrossing.block.twosep");
  ElpFinding f = find_noncrossing_elp(fx.graph, fx.shore);
  ASSERT_EQ(f.kind, ElpKind::kTwoSeparation);
  // The cut shore is F1 + v, a proper subset of the reference shore.
  const VertexSet& x = fx.shore;
  EXPECT_TRUE(f.cut.shore().proper_subset_of(x) || f.cut.other_shore().proper_subset_of(x));
}

TEST(Decompose, ElpCutGivesSingleGraph) {
  Graph c6 = canonical("C2k(3)");
  DecompositionCertificate cert = decompose_tight_cut(c6, VertexSet{0, 1, 2});
  EXPECT_EQ(cert.r, 1);
  EXPECT_TRUE(cert.steps.empty());
  EXPECT_TRUE(cert.final_classification.elp);
  EXPECT_TRUE(verify_certificate(c6, VertexSet{0, 1, 2}, cert).ok());
}

TEST(Decompose, NonElpFixture) {
  auto fx = fixture("non-elp");
  const Cut c = boundary(fx.graph, fx.shore);
  EXPECT_TRUE(oracle::is_tight(fx.graph, oracle::to_set(fx.shore)));
  EXPECT_FALSE(classify_cut(fx.graph, c).elp);
  DecompositionCertificate cert = decompose_tight_cut(fx.graph, fx.shore);
  EXPECT_GE(cert.r, 2);
  EXPECT_FALSE(cert.final_classification.twosep_witnesses.empty());
  VerifyResult v = verify_certificate(fx.graph, fx.shore, cert);
  EXPECT_TRUE(v.ok()) << reason_name(v.reason) << " " << v.detail;
}

// Two barriers {0,1} and {3,4} inside X with odd components of the same
// size: contracting the first leaves the second in place, with the
// contracted vertex in its large odd component. The barrier phase therefore
// runs twice on the X side.
TEST(Decompose, BarrierPhaseMayRepeatOnOneSide) {
  auto fx = fixture("repeated-barrier-phase");
  const Graph& g = fx.graph;
  const VertexSet& x = fx.shore;
  auto inside = nontrivial_barriers_inside(g, x);
  ASSERT_EQ(inside.size(), 2u);
  EXPECT_EQ(inside[0].members, (VertexSet{0, 1}));
  EXPECT_EQ(inside[1].members, (VertexSet{3, 4}));
  EXPECT_TRUE(nontrivial_barriers_inside(g, g.complement(x)).empty());

  // One contraction by the minimal barrier cut does not clear the shore.
  const Vertex s = g.next_fresh_vertex();
  Graph once = contract(g, VertexSet{0, 1, 8}, s);
  const VertexSet x1 = x.minus(VertexSet{0, 1, 8}).with(s);
  auto left = nontrivial_barriers_inside(once, x1);
  ASSERT_FALSE(left.empty());
  EXPECT_EQ(left[0].members, (VertexSet{3, 4}));
  EXPECT_TRUE(oracle::is_barrier(once, {3, 4}));

  DecompositionCertificate cert = decompose_tight_cut(g, x);
  int barrier_steps = 0;
  for (const CertificateStep& st : cert.steps) {
    barrier_steps += st.witness.kind == ElpKind::kBarrier;
    EXPECT_TRUE(st.contracted_shore.subset_of(x) || st.contracted_shore.subset_of(st.graph.complement(x)));
  }
  EXPECT_EQ(barrier_steps, 2);
  EXPECT_TRUE(verify_certificate(g, x, cert).ok());
}

TEST(Decompose, ReductionFixturesVerify) {
  for (const std::string name : {"reduce.barrier-contraction", "reduce.twosep-contraction"}) {
    auto fx = fixture(name);
    DecompositionCertificate cert = decompose_tight_cut(fx.graph, fx.shore);
    EXPECT_GE(cert.r, 2) << name;
    EXPECT_TRUE(verify_certificate(fx.graph, fx.shore, cert).ok()) << name;
  }
  auto fx = fixture("reduce.twosep-contraction");
  DecompositionCertificate cert = decompose_tight_cut(fx.graph, fx.shore);
  EXPECT_TRUE(has(cert.path, ProofBranch::kTwoSepContraction));
}

TEST(Verify, RejectsCorruptedWitnessAndContraction) {
  auto fx = fixture("non-elp");
  DecompositionCertificate cert = decompose_tight_cut(fx.graph, fx.shore);
  ASSERT_FALSE(cert.steps.empty());
  ASSERT_EQ(cert.steps[0].witness.kind, ElpKind::kBarrier);

  DecompositionCertificate bad = cert;
  VertexSet& members = bad.steps[0].witness.barrier.barrier.members;
  members = members.without(members.front());
  EXPECT_EQ(verify_certificate(fx.graph, fx.shore, bad).reason, VerifyReason::kWitnessNotBarrier);
  EXPECT_EQ(reason_name(VerifyReason::kWitnessNotBarrier), "witness not a barrier");

  bad = cert;
  bad.final_graph = bad.final_graph.remove_edges({bad.final_graph.edges().front().id});
  EXPECT_EQ(verify_certificate(fx.graph, fx.shore, bad).reason, VerifyReason::kContractionMismatch);
  EXPECT_EQ(reason_name(VerifyReason::kContractionMismatch), "contraction mismatch");

  Graph other = canonical("C2k(4)");
  EXPECT_EQ(verify_certificate(other, VertexSet{0, 1, 2}, cert).reason, VerifyReason::kInputMismatch);
}

TEST(Verify, EveryMutationKindGetsItsReason) {
  for (const std::string name : {"non-elp", "reduce.twosep-contraction", "c6-path"}) {
    Graph g;
    VertexSet x;
    if (name == "c6-path") {
      g = canonical("C2k(3)");
      x = VertexSet{0, 1, 2};
    } else {
      auto fx = fixture(name);
      g = fx.graph;
      x = fx.shore;
    }
    DecompositionCertificate cert = decompose_tight_cut(g, x);
    for (std::size_t k = 0; k < kMutationCount; ++k) {
      const auto m = static_cast<Mutation>(k);
      for (std::uint64_t salt = 0; salt < 5; ++salt) {
        auto bad = mutate(cert, m, salt);
        if (!bad) continue;
        EXPECT_EQ(verify_certificate(g, x, *bad).reason, expected_reason(m, cert))
            << name << " " << mutation_name(m) << " salt " << salt;
      }
    }
  }
}
