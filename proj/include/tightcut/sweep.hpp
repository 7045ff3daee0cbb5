#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tightcut/decompose.hpp"
#include "tightcut/instances.hpp"

namespace tightcut {

struct SweepOptions {
  std::vector<CorpusSpec> corpora;
  std::string command;      // echoed in the report
  std::string harvest_dir;  // empty: no fixtures written
  // Per-contraction cap on generated lift scenarios.
  int lift_scenarios_per_contraction = 6;
  // Corrupted certificates derived per verified certificate, until the
  // total reaches mutation_budget.
  int mutation_budget = 100;
};

struct Violation {
  std::string property;
  std::string detail;
  std::string graph;  // edge-list text
  std::vector<Vertex> shore;
};

struct InstanceResult {
  int corpus = 0;
  int index = 0;
  int n = 0;
  int m = 0;
  int tight_cuts = 0;  // nontrivial, canonical
  int non_elp = 0;
  int max_r = 0;
};

// Counters of one invariant: how many cases were checked and how many held.
struct Tally {
  std::int64_t checked = 0;
  std::int64_t passed = 0;
};

struct HarvestedInstance {
  Graph graph;
  VertexSet shore;
};

struct SweepReport {
  std::string command;
  std::int64_t graphs = 0;
  std::int64_t tight_cuts = 0;
  std::int64_t non_elp_cuts = 0;
  // Keyed by property name: elp_theorem, noncrossing, decomposition,
  // cut_contractions, shores_connected, barrier_shape, lift_odd_component,
  // lift_two_separation, dm_dual_strategy, mutations.
  std::map<std::string, Tally> properties;
  std::array<std::int64_t, kProofBranchCount> branch_hits{};
  // Certificates whose barrier phase contracted more than once on one side.
  std::int64_t repeated_barrier_phases = 0;
  std::vector<InstanceResult> instances;
  std::vector<Violation> violations;
  // Smallest instance (by n, then m) exercising each branch, and the
  // smallest tight cut that is not an ELP-cut.
  std::map<std::string, HarvestedInstance> harvest;
  std::vector<std::string> harvested_files;
  double seconds = 0;

  [[nodiscard]] std::vector<std::string> missing_branches() const;
  [[nodiscard]] nlohmann::json to_json(bool with_instances = true) const;
};

// Runs every corpus-wide invariant over the graphs of all corpora. Never
// throws on a property failure; failures and unexpected exceptions are
// recorded as violations.
SweepReport run_sweep(const SweepOptions& options);

// Writes "<dir>/<key>.el" for each harvested instance, with a "# cut" comment
// line listing the shore. Returns the paths.
std::vector<std::string> write_harvest(const SweepReport& report, const std::string& dir);

// Reads a fixture written by write_harvest: the graph and the shore from its
// "# cut a,b,c" comment. Throws ParseError when the comment is missing.
HarvestedInstance read_fixture(const std::string& path);

// Kinds of certificate corruption with the reason verify_certificate must
// report for each.
enum class Mutation {
  kDropBarrierMember,
  kBreakTwoSeparationPair,
  kDropContractedEdge,
  kEditContractedShore,
  kEditInputShore,
  kBumpStepCount,
  kClearElpFlag,
};
inline constexpr std::size_t kMutationCount = 7;
std::string_view mutation_name(Mutation m);
VerifyReason expected_reason(Mutation m, const DecompositionCertificate& cert);

// The corrupted certificate, or nullopt when the mutation does not apply
// (for instance no barrier step exists). `salt` picks among the targets.
std::optional<DecompositionCertificate> mutate(const DecompositionCertificate& cert, Mutation m, std::uint64_t salt);

}  // namespace tightcut
