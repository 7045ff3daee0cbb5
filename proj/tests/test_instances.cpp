#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "tightcut/edgelist.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/instances.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/tightcuts.hpp"

using namespace tightcut;

namespace {

std::string text(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace

TEST(Canonical, NamedGraphs) {
  Graph k4 = canonical("K4");
  EXPECT_EQ(k4.num_vertices(), 4);
  EXPECT_EQ(k4.num_edges(), 6);
  EXPECT_TRUE(is_bicritical(k4));
  Graph p = canonical("PETERSEN");
  EXPECT_EQ(p.num_vertices(), 10);
  EXPECT_EQ(p.num_edges(), 15);
  for (Vertex v : p.vertices()) EXPECT_EQ(p.neighbors(v).size(), 3u);
  EXPECT_TRUE(is_matching_covered(p));
  EXPECT_TRUE(enumerate_tight_cuts(p, true).empty());
  Graph c6 = canonical("C2k(3)");
  EXPECT_EQ(c6.num_vertices(), 6);
  EXPECT_EQ(c6.num_edges(), 6);
  for (Vertex v : c6.vertices()) EXPECT_TRUE(c6.adjacent(v, (v + 1) % 6));
  EXPECT_EQ(canonical("DOUBLE_K4").num_edges(), 11);
  for (const std::string& name : {"K2", "K4", "K33", "PETERSEN", "PRISM", "CUBE", "DOUBLE_K4"})
    EXPECT_TRUE(oracle::is_matching_covered(canonical(name))) << name;
  EXPECT_THROW(canonical("K5"), PreconditionError);
  EXPECT_THROW(canonical("C2k(1)"), PreconditionError);
  EXPECT_THROW(canonical("C2k(x)"), PreconditionError);
}

TEST(Corpus, ExhaustiveSmallOrders) {
  CorpusSpec spec;
  spec.min_n = 2;
  spec.max_n = 2;
  auto two = enumerate_corpus(spec);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(text(two[0]), "p 2 1\ne 0 1\n");
  spec.min_n = spec.max_n = 4;
  // Labeled matching covered graphs on 4 vertices: 3 four-cycles, K4.
  auto four = enumerate_corpus(spec);
  std::size_t brute = 0;
  for (std::uint32_t mask = 0; mask < (1U << 6); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> p;
    int bit = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if ((mask >> bit++) & 1U) p.emplace_back(a, b);
    brute += oracle::is_matching_covered(Graph::from_pairs(4, p));
  }
  EXPECT_EQ(four.size(), brute);
  EXPECT_EQ(four.size(), 4u);
}

TEST(Corpus, ExhaustiveSixMatchesBruteForceFilter) {
  CorpusSpec spec;
  spec.min_n = spec.max_n = 6;
  std::set<std::string> got;
  for (const Graph& g : enumerate_corpus(spec)) EXPECT_TRUE(got.insert(text(g)).second);
  std::set<std::string> brute;
  std::vector<std::pair<Vertex, Vertex>> all;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) all.emplace_back(a, b);
  for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
    if (__builtin_popcount(mask) < 6) continue;  // a matching covered graph on 6 vertices has a cycle
    std::vector<std::pair<Vertex, Vertex>> p;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((mask >> i) & 1U) p.push_back(all[i]);
    Graph g = Graph::from_pairs(6, p);
    if (oracle::is_matching_covered(g)) brute.insert(text(g));
  }
  EXPECT_EQ(got, brute);
}

TEST(Corpus, RandomIsReproducibleAndFiltered) {
  CorpusSpec spec;
  spec.mode = CorpusMode::kRandom;
  spec.min_n = spec.max_n = 10;
  spec.samples = 100;
  spec.seed = 7;
  auto a = enumerate_corpus(spec);
  auto b = enumerate_corpus(spec);
  ASSERT_EQ(a.size(), 100u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(text(a[i]), text(b[i]));
    EXPECT_EQ(a[i].num_vertices(), 10);
    EXPECT_TRUE(is_matching_covered(a[i]));
  }
  spec.seed = 8;
  EXPECT_NE(text(enumerate_corpus(spec)[0]), text(a[0]));
}

TEST(Corpus, BlocksModeAndFilters) {
  CorpusSpec spec;
  spec.mode = CorpusMode::kBlocks;
  spec.min_n = 10;
  spec.max_n = 12;
  spec.samples = 10;
  spec.has_nontrivial_tight_cut = true;
  for (const Graph& g : enumerate_corpus(spec)) {
    EXPECT_TRUE(is_matching_covered(g));
    EXPECT_FALSE(enumerate_tight_cuts(g, true).empty());
  }
}

TEST(Corpus, BoundsRefused) {
  CorpusSpec spec;
  spec.max_n = 40;
  EXPECT_THROW(CorpusStream{spec}, PreconditionError);
  spec.mode = CorpusMode::kRandom;
  EXPECT_THROW(CorpusStream{spec}, PreconditionError);
  spec.max_n = 8;
  spec.min_n = 9;
  EXPECT_THROW(CorpusStream{spec}, PreconditionError);
}
