#pragma once

#include <cstddef>
#include <vector>

#include "tightcut/vertex_set.hpp"

namespace tightcut::detail {

// Calls visit(subset) for every k-subset of pool, min_k <= k <= max_k, in
// increasing k and lexicographic order within k. Stops early when visit
// returns false.
template <class Visit>
void for_each_subset(const VertexSet& pool, std::size_t min_k, std::size_t max_k, Visit&& visit) {
  const auto& items = pool.members();
  const std::size_t n = items.size();
  if (max_k > n) max_k = n;
  std::vector<std::size_t> idx;
  std::vector<Vertex> chosen;
  for (std::size_t k = min_k; k <= max_k; ++k) {
    if (k == 0) {
      if (!visit(VertexSet{})) return;
      continue;
    }
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      chosen.clear();
      for (std::size_t i : idx) chosen.push_back(items[i]);
      if (!visit(VertexSet(chosen))) return;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace tightcut::detail
