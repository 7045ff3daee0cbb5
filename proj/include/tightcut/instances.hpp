#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

// Named graphs with fixed numbering:
//   K2, K4, K33 (parts {0,1,2} and {3,4,5}), C2k(k) (cycle 0..2k-1),
//   PETERSEN (outer 0..4, inner 5..9, spokes i–i+5, inner pentagram),
//   PRISM (triangles {0,1,2}, {3,4,5}, rungs i–i+3),
//   CUBE (vertices 0..7, edges between ids differing in one bit),
//   DOUBLE_K4 (K4 on {0,1,2,3} and on {0,1,4,5}, edge 0–1 shared).
// Throws PreconditionError for an unknown name.
Graph canonical(const std::string& name);
std::vector<std::string> canonical_names();

enum class CorpusMode { kExhaustive, kRandom, kBlocks };

struct CorpusSpec {
  CorpusMode mode = CorpusMode::kExhaustive;
  int min_n = 2;
  int max_n = 6;
  int samples = 100;  // sampled modes only
  std::uint64_t seed = 1;
  bool matching_covered = true;
  bool has_nontrivial_tight_cut = false;
};

// Largest order accepted in exhaustive mode (2^(n(n-1)/2) labeled graphs).
inline constexpr int kExhaustiveMaxN = 7;
// Largest order accepted in random mode.
inline constexpr int kRandomMaxN = 16;

// Deterministic single-consumer stream over the corpus described by a spec.
//
// Exhaustive mode walks every labeled simple graph on each even n in range,
// keeping the connected ones that pass the filters. Random mode samples
// connected simple graphs, cycling through the even orders in range and an
// average-degree schedule, and keeps those passing the filters (rejection
// sampling; not uniform over matching covered graphs). Blocks mode samples
// random_block_graph instances (n >= 10) under the same filters.
class CorpusStream {
 public:
  // Throws PreconditionError when the bounds are out of range.
  explicit CorpusStream(CorpusSpec spec);

  std::optional<Graph> next();

 private:
  bool accept(const Graph& g) const;
  std::optional<Graph> next_exhaustive();
  std::optional<Graph> next_random();
  Graph block_sample(int n);

  CorpusSpec spec_;
  std::vector<int> orders_;
  // exhaustive cursor
  std::size_t order_pos_ = 0;
  std::uint64_t mask_ = 0;
  // random state
  std::mt19937_64 rng_;
  int emitted_ = 0;
  std::uint64_t attempts_ = 0;
};

std::vector<Graph> enumerate_corpus(const CorpusSpec& spec);

// One connected random simple graph with n vertices and about the given
// average degree.
Graph random_connected_graph(int n, double average_degree, std::mt19937_64& rng);

// Two odd shores {0..a-1} and {a..a+b-1}, each a chain of small blocks
// (edges, cycles with random chords) glued at random vertices, joined by
// edges that each touch a cut vertex of at least one shore. Such graphs often
// have no cut edge whose endpoints leave both shores connected.
Graph random_block_graph(int a, int b, std::mt19937_64& rng);

}  // namespace tightcut
