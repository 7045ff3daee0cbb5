#include "tightcut/instances.hpp"

#include <algorithm>
#include <array>

#include "tightcut/errors.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/tightcuts.hpp"

namespace tightcut {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Graph cycle(int len) {
  Pairs p;
  for (int i = 0; i < len; ++i) p.emplace_back(i, (i + 1) % len);
  return Graph::from_pairs(len, p);
}

}  // namespace

std::vector<std::string> canonical_names() {
  return {"K2", "K4", "K33", "C2k(k)", "PETERSEN", "PRISM", "CUBE", "DOUBLE_K4"};
}

Graph canonical(const std::string& name) {
  if (name == "K2") return Graph::from_pairs(2, {{0, 1}});
  if (name == "K4") return Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "K33") {
    Pairs p;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) p.emplace_back(a, b);
    return Graph::from_pairs(6, p);
  }
  if (name.rfind("C2k(", 0) == 0 && name.size() > 5 && name.back() == ')') {
    int k = 0;
    try {
      k = std::stoi(name.substr(4, name.size() - 5));
    } catch (const std::exception&) {
      throw PreconditionError("malformed cycle name " + name);
    }
    if (k < 2) throw PreconditionError("C2k(k) needs k >= 2");
    return cycle(2 * k);
  }
  if (name == "PETERSEN") {
    Pairs p;
    for (int i = 0; i < 5; ++i) {
      p.emplace_back(i, (i + 1) % 5);
      p.emplace_back(i, i + 5);
      p.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_pairs(10, p);
  }
  if (name == "PRISM") return Graph::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "CUBE") {
    Pairs p;
    for (int v = 0; v < 8; ++v)
      for (int bit = 1; bit < 8; bit <<= 1)
        if (v < (v ^ bit)) p.emplace_back(v, v ^ bit);
    return Graph::from_pairs(8, p);
  }
  if (name == "DOUBLE_K4")
    return Graph::from_pairs(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
  throw PreconditionError("unknown canonical graph '" + name + "'");
}

CorpusStream::CorpusStream(CorpusSpec spec) : spec_(spec), rng_(spec.seed) {
  if (spec_.min_n < 1 || spec_.max_n < spec_.min_n) throw PreconditionError("corpus: empty order range");
  const int limit = spec_.mode == CorpusMode::kExhaustive ? kExhaustiveMaxN : kRandomMaxN;
  if (spec_.mode == CorpusMode::kBlocks) spec_.min_n = std::max(spec_.min_n, 10);
  if (spec_.max_n > limit)
    throw PreconditionError("corpus: max n " + std::to_string(spec_.max_n) + " exceeds the bound " +
                            std::to_string(limit) + " for this mode");
  const bool sampled = spec_.mode != CorpusMode::kExhaustive;
  if (sampled && spec_.samples < 0) throw PreconditionError("corpus: negative sample count");
  for (int n = spec_.min_n; n <= spec_.max_n; ++n)
    if (n % 2 == 0) orders_.push_back(n);
  if (sampled && orders_.empty() && spec_.samples > 0)
    throw PreconditionError("corpus: no even order in range");
}

bool CorpusStream::accept(const Graph& g) const {
  if (!is_connected(g)) return false;
  if (spec_.matching_covered && !is_matching_covered(g)) return false;
  if (spec_.has_nontrivial_tight_cut && enumerate_tight_cuts(g, true).empty()) return false;
  return true;
}

std::optional<Graph> CorpusStream::next() {
  return spec_.mode == CorpusMode::kExhaustive ? next_exhaustive() : next_random();
}

namespace {

// Blocks on vertices [off, off+k), each attached at an existing vertex.
void block_chain(int off, int k, std::mt19937_64& rng, Pairs& out) {
  int used = 1;
  while (used < k) {
    const int attach = off + static_cast<int>(rng() % used);
    const int fresh = std::min<int>(k - used, 1 + static_cast<int>(rng() % 5));
    std::vector<int> ring{attach};
    for (int i = 0; i < fresh; ++i) ring.push_back(off + used + i);
    used += fresh;
    if (ring.size() == 2) {
      out.emplace_back(ring[0], ring[1]);
      continue;
    }
    for (std::size_t i = 0; i < ring.size(); ++i) out.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
    for (std::size_t i = 2; i + 1 < ring.size(); ++i)
      if (rng() % 3 == 0) out.emplace_back(ring[0], ring[i]);
  }
}

}  // namespace

Graph random_block_graph(int a, int b, std::mt19937_64& rng) {
  if (a < 1 || b < 1) throw PreconditionError("random_block_graph: empty shore");
  Pairs inner;
  block_chain(0, a, rng, inner);
  block_chain(a, b, rng, inner);
  const Graph h = Graph::from_pairs(a + b, inner);
  std::vector<Vertex> xs(a);
  for (int i = 0; i < a; ++i) xs[i] = i;
  const VertexSet x(std::move(xs));
  const VertexSet cx = cut_vertices(h.induced(x));
  const VertexSet cb = cut_vertices(h.induced(h.complement(x)));
  Pairs all = inner;
  int wanted = 3 + static_cast<int>(rng() % 10);
  for (int attempt = 0; attempt < 200 && wanted > 0; ++attempt) {
    const int u = static_cast<int>(rng() % a);
    const int v = a + static_cast<int>(rng() % b);
    if (!cx.contains(u) && !cb.contains(v)) continue;
    if (std::find(all.begin(), all.end(), std::make_pair(u, v)) != all.end()) continue;
    all.emplace_back(u, v);
    --wanted;
  }
  return Graph::from_pairs(a + b, all);
}

std::optional<Graph> CorpusStream::next_exhaustive() {
  while (order_pos_ < orders_.size()) {
    const int n = orders_[order_pos_];
    Pairs all;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    const std::uint64_t total = 1ULL << all.size();
    while (mask_ < total) {
      const std::uint64_t mask = mask_++;
      // A connected graph needs at least n-1 edges.
      if (__builtin_popcountll(mask) < n - 1) continue;
      Pairs chosen;
      for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1ULL) chosen.push_back(all[i]);
      Graph g = Graph::from_pairs(n, chosen);
      if (accept(g)) return g;
    }
    ++order_pos_;
    mask_ = 0;
  }
  return std::nullopt;
}

Graph random_connected_graph(int n, double average_degree, std::mt19937_64& rng) {
  Pairs all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  const int m = std::clamp(static_cast<int>(average_degree * n / 2.0 + 0.5), n - 1, static_cast<int>(all.size()));
  while (true) {
    std::shuffle(all.begin(), all.end(), rng);
    Pairs chosen(all.begin(), all.begin() + m);
    std::sort(chosen.begin(), chosen.end());
    Graph g = Graph::from_pairs(n, chosen);
    if (is_connected(g)) return g;
  }
}

std::optional<Graph> CorpusStream::next_random() {
  static constexpr std::array<double, 5> kDegrees{2.5, 3.0, 3.5, 4.0, 5.0};
  while (emitted_ < spec_.samples) {
    const std::uint64_t k = attempts_++;
    const int n = orders_[emitted_ % orders_.size()];
    Graph g = spec_.mode == CorpusMode::kBlocks ? block_sample(n)
                                                : random_connected_graph(n, kDegrees[k % kDegrees.size()], rng_);
    if (!accept(g)) continue;
    ++emitted_;
    return g;
  }
  return std::nullopt;
}

Graph CorpusStream::block_sample(int n) {
  // Odd shore sizes a + b = n with a, b >= 5; a 3-vertex shore never yields
  // a matching covered graph here.
  const int choices = (n - 8) / 2;
  const int a = 5 + 2 * static_cast<int>(rng_() % choices);
  return random_block_graph(a, n - a, rng_);
}

std::vector<Graph> enumerate_corpus(const CorpusSpec& spec) {
  CorpusStream stream(spec);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace tightcut
