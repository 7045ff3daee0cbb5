#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tightcut {

using Vertex = int;
using EdgeId = int;

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] Vertex front() const { return members_.front(); }
  [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
  [[nodiscard]] const_iterator begin() const { return members_.begin(); }
  [[nodiscard]] const_iterator end() const { return members_.end(); }

  [[nodiscard]] VertexSet with(Vertex v) const;
  [[nodiscard]] VertexSet without(Vertex v) const;
  [[nodiscard]] VertexSet unite(const VertexSet& other) const;
  [[nodiscard]] VertexSet minus(const VertexSet& other) const;
  [[nodiscard]] VertexSet intersect(const VertexSet& other) const;
  [[nodiscard]] bool subset_of(const VertexSet& other) const;
  [[nodiscard]] bool proper_subset_of(const VertexSet& other) const {
    return size() < other.size() && subset_of(other);
  }
  [[nodiscard]] bool intersects(const VertexSet& other) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

}  // namespace tightcut
