#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "tightcut/errors.hpp"
#include "tightcut/sweep.hpp"

using namespace tightcut;

TEST(Sweep, SmallExhaustiveSweepHasNoViolations) {
  SweepOptions opt;
  CorpusSpec spec;
  spec.min_n = 2;
  spec.max_n = 6;
  opt.corpora.push_back(spec);
  opt.mutation_budget = 20;
  SweepReport rep = run_sweep(opt);
  EXPECT_GT(rep.graphs, 100);
  EXPECT_GT(rep.tight_cuts, 0);
  EXPECT_TRUE(rep.violations.empty());
  for (const auto& [name, t] : rep.properties) EXPECT_EQ(t.checked, t.passed) << name;
  EXPECT_GT(rep.properties.at("elp_theorem").checked, 0);
  EXPECT_EQ(rep.properties.at("elp_theorem").checked, rep.tight_cuts);
  EXPECT_LE(rep.properties.at("mutations").checked, 20);
  auto j = rep.to_json(false);
  EXPECT_FALSE(j.contains("instances"));
  EXPECT_EQ(j["graphs"], rep.graphs);
}

TEST(Sweep, HarvestRoundTrip) {
  SweepOptions opt;
  CorpusSpec spec;
  spec.min_n = spec.max_n = 6;
  opt.corpora.push_back(spec);
  SweepReport rep = run_sweep(opt);
  ASSERT_FALSE(rep.harvest.empty());
  const auto dir = std::filesystem::temp_directory_path() / "tightcut-harvest-test";
  std::filesystem::remove_all(dir);
  auto files = write_harvest(rep, dir.string());
  EXPECT_EQ(files.size(), rep.harvest.size());
  for (const auto& [key, inst] : rep.harvest) {
    HarvestedInstance back = read_fixture((dir / (key + ".el")).string());
    EXPECT_EQ(back.shore, inst.shore) << key;
    EXPECT_EQ(back.graph.num_edges(), inst.graph.num_edges()) << key;
  }
  std::filesystem::remove_all(dir);
}

TEST(Sweep, FixtureNeedsCutLine) {
  const auto path = std::filesystem::temp_directory_path() / "tightcut-nocut.el";
  std::ofstream(path) << "p 2 1\ne 0 1\n";
  EXPECT_THROW(read_fixture(path.string()), ParseError);
  std::filesystem::remove(path);
}
