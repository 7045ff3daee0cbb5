#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/instances.hpp"
#include "tightcut/matching.hpp"

using namespace tightcut;

namespace {

std::vector<std::vector<EdgeId>> library_matchings(const Graph& g) {
  std::vector<std::vector<EdgeId>> out;
  for (const Matching& m : all_perfect_matchings(g)) out.push_back(m.edges());
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, int m) {
  std::vector<std::pair<Vertex, Vertex>> p;
  while (static_cast<int>(p.size()) < m) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a != b) p.emplace_back(a, b);
  }
  return Graph::from_pairs(n, p);
}

}  // namespace

TEST(Matching, CanonicalCountsAgreeWithBruteForce) {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"K2", 1}, {"K4", 3}, {"K33", 6}, {"C2k(3)", 2}, {"PETERSEN", 6}, {"PRISM", 4}, {"CUBE", 9}};
  for (const auto& [name, count] : expected) {
    Graph g = canonical(name);
    auto brute = oracle::perfect_matchings(g);
    EXPECT_EQ(brute.size(), count) << name;
    EXPECT_EQ(library_matchings(g), brute) << name;
  }
}

TEST(Matching, RandomGraphsAgreeWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    Graph g = random_graph(rng, n, n + static_cast<int>(rng() % (2 * n)));
    auto brute = oracle::perfect_matchings(g);
    EXPECT_EQ(library_matchings(g), brute);
    EXPECT_EQ(has_perfect_matching(g), !brute.empty());
    EXPECT_EQ(find_perfect_matching(g).has_value(), !brute.empty());
    EXPECT_EQ(is_matching_covered(g), oracle::is_matching_covered(g));
    for (const Edge& e : g.edges()) {
      bool in_some = false;
      for (const auto& pm : brute) in_some = in_some || std::count(pm.begin(), pm.end(), e.id);
      EXPECT_EQ(is_admissible(g, e.id), in_some);
    }
  }
}

TEST(Matching, MaximumMatchingOnOddGraphs) {
  EXPECT_EQ(maximum_matching_size(Graph::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}})), 1);
  EXPECT_EQ(maximum_matching_size(canonical("PETERSEN"), VertexSet{0}), 4);
  // Star: one edge at most.
  EXPECT_EQ(maximum_matching_size(Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}})), 1);
}

TEST(Matching, FoundMatchingIsPerfect) {
  Graph g = canonical("PETERSEN");
  auto m = find_perfect_matching(g);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(m->perfect());
  EXPECT_EQ(m->edges().size(), 5u);
  EXPECT_THROW(Matching(g, {0, 1}), PreconditionError);  // edges 0-1 and 0-5 share vertex 0
}

TEST(Matching, CriticalAndBicritical) {
  EXPECT_TRUE(is_bicritical(canonical("K4")));
  EXPECT_TRUE(is_bicritical(canonical("PETERSEN")));
  EXPECT_FALSE(is_bicritical(canonical("C2k(3)")));
  EXPECT_FALSE(is_bicritical(canonical("K33")));
  EXPECT_TRUE(is_critical(Graph::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_TRUE(is_critical(Graph({0}, {})));
  EXPECT_FALSE(is_critical(Graph::from_pairs(3, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(is_critical(canonical("K4")));
}

TEST(Matching, MatchingCoveredExamples) {
  EXPECT_TRUE(is_matching_covered(canonical("K2")));
  EXPECT_TRUE(is_matching_covered(canonical("C2k(3)")));
  EXPECT_TRUE(is_matching_covered(canonical("DOUBLE_K4")));
  // C4 plus the chord 0-2: the chord is in no perfect matching.
  EXPECT_FALSE(is_matching_covered(Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
  EXPECT_FALSE(is_matching_covered(Graph::from_pairs(4, {{0, 1}, {2, 3}})));
}

TEST(Matching, EnumerationGuardAndOverride) {
  Graph big = canonical("C2k(13)");
  EXPECT_THROW(all_perfect_matchings(big), GuardExceededError);
  EXPECT_EQ(all_perfect_matchings(big, 26).size(), 2u);
  ::setenv("TIGHTCUT_MAX_ENUM", "30", 1);
  EXPECT_EQ(enumeration_limit(), 30);
  EXPECT_EQ(all_perfect_matchings(big).size(), 2u);
  ::unsetenv("TIGHTCUT_MAX_ENUM");
  EXPECT_EQ(enumeration_limit(), 24);
}
