#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/instances.hpp"
#include "tightcut/tightcuts.hpp"

using namespace tightcut;

TEST(Tight, C6PathCutMeetsBothMatchingsOnce) {
  Graph c6 = canonical("C2k(3)");
  EXPECT_TRUE(oracle::is_tight(c6, {0, 1, 2}));
  EXPECT_TRUE(is_tight(c6, boundary(c6, VertexSet{0, 1, 2})));
  EXPECT_FALSE(is_tight(c6, boundary(c6, VertexSet{0, 1})));
}

TEST(Tight, K4HasNoNontrivialTightCut) {
  Graph k4 = canonical("K4");
  EXPECT_FALSE(is_tight(k4, boundary(k4, VertexSet{0, 1})));
  EXPECT_TRUE(enumerate_tight_cuts(k4, true).empty());
  EXPECT_EQ(enumerate_tight_cuts(k4, false).size(), 4u);
}

TEST(Tight, TrivialCutsAreTight) {
  for (const std::string name : {"K4", "PETERSEN", "K33", "CUBE"}) {
    Graph g = canonical(name);
    for (Vertex v : g.vertices()) EXPECT_TRUE(is_tight(g, boundary(g, VertexSet{v})));
  }
}

TEST(Tight, BricksAndBraces) {
  EXPECT_TRUE(enumerate_tight_cuts(canonical("PETERSEN"), true).empty());
  EXPECT_TRUE(enumerate_tight_cuts(canonical("K33"), true).empty());
  EXPECT_TRUE(enumerate_tight_cuts(canonical("CUBE"), true).empty());
  EXPECT_FALSE(enumerate_tight_cuts(canonical("DOUBLE_K4"), true).empty());
}

TEST(Tight, C6EnumerationMatchesScan) {
  Graph c6 = canonical("C2k(3)");
  std::set<std::set<Vertex>> got;
  for (const Cut& c : enumerate_tight_cuts(c6, true)) got.insert(oracle::to_set(c.shore()));
  const auto expected = oracle::nontrivial_tight_shores(c6);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got, (std::set<std::set<Vertex>>{{0, 1, 2}, {0, 1, 5}, {0, 4, 5}}));
}

TEST(Tight, EnumerationAgreesWithOracleOnCorpus) {
  CorpusSpec spec;
  spec.min_n = 2;
  spec.max_n = 6;
  int graphs = 0;
  for (const Graph& g : enumerate_corpus(spec)) {
    if (++graphs % 7) continue;  // every seventh graph keeps the test quick
    std::set<std::set<Vertex>> got;
    for (const Cut& c : enumerate_tight_cuts(g, true)) got.insert(oracle::to_set(c.shore()));
    EXPECT_EQ(got, oracle::nontrivial_tight_shores(g));
  }
  CorpusSpec rnd;
  rnd.mode = CorpusMode::kRandom;
  rnd.min_n = 8;
  rnd.max_n = 10;
  rnd.samples = 40;
  rnd.seed = 5;
  for (const Graph& g : enumerate_corpus(rnd)) {
    std::set<std::set<Vertex>> got;
    for (const Cut& c : enumerate_tight_cuts(g, true)) got.insert(oracle::to_set(c.shore()));
    EXPECT_EQ(got, oracle::nontrivial_tight_shores(g));
  }
}

TEST(Classify, C6PathCutIsElp) {
  Graph c6 = canonical("C2k(3)");
  CutClassification cls = classify_cut(c6, boundary(c6, VertexSet{0, 1, 2}));
  EXPECT_TRUE(cls.tight);
  EXPECT_FALSE(cls.trivial);
  EXPECT_TRUE(cls.elp);
  ASSERT_FALSE(cls.barrier_witnesses.empty());
  ASSERT_FALSE(cls.twosep_witnesses.empty());
  for (const BarrierWitness& w : cls.barrier_witnesses) {
    EXPECT_TRUE(oracle::is_barrier(c6, oracle::to_set(w.barrier.members)));
    EXPECT_TRUE(witness_generates(c6, w, boundary(c6, VertexSet{0, 1, 2})));
  }
  for (const TwoSeparation& s : cls.twosep_witnesses)
    EXPECT_TRUE(witness_generates(c6, s, boundary(c6, VertexSet{0, 1, 2})));
  EXPECT_TRUE(two_separation_witness(c6, VertexSet{0, 1, 2}).has_value());
}

TEST(Classify, NonTightCutHasNoWitness) {
  Graph k4 = canonical("K4");
  CutClassification cls = classify_cut(k4, boundary(k4, VertexSet{0, 1}));
  EXPECT_FALSE(cls.tight);
  EXPECT_FALSE(cls.elp);
}

TEST(Classify, BarrierWitnessesMatchDefinition) {
  // c is a barrier cut iff some barrier has an odd part whose boundary is c.
  CorpusSpec spec;
  spec.min_n = 6;
  spec.max_n = 6;
  int seen = 0;
  for (const Graph& g : enumerate_corpus(spec)) {
    if (++seen % 11) continue;
    std::set<VertexSet> barrier_shores;
    const auto& vs = g.vertices().members();
    for (std::uint32_t mask = 1; mask + 1 < (1U << vs.size()); ++mask) {
      std::set<Vertex> b;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if ((mask >> i) & 1U) b.insert(vs[i]);
      if (!oracle::is_barrier(g, b)) continue;
      for (const auto& part : oracle::components(g, b))
        if (part.size() % 2 == 1) barrier_shores.insert(boundary(g, VertexSet(part)).shore());
    }
    for (const Cut& c : enumerate_tight_cuts(g, true))
      EXPECT_EQ(!barrier_witnesses(g, c).empty(), barrier_shores.count(c.shore()) == 1);
  }
}

TEST(Tight, OracleRefusesBeyondGuard) {
  Graph big = canonical("C2k(14)");
  EXPECT_THROW(TightnessOracle(big, 24), GuardExceededError);
}
