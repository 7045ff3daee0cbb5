#include "tightcut/vertex_set.hpp"

#include <iterator>

namespace tightcut {

VertexSet VertexSet::with(Vertex v) const {
  if (contains(v)) return *this;
  VertexSet out;
  out.members_.reserve(members_.size() + 1);
  auto pos = std::lower_bound(members_.begin(), members_.end(), v);
  out.members_.assign(members_.begin(), pos);
  out.members_.push_back(v);
  out.members_.insert(out.members_.end(), pos, members_.end());
  return out;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet out;
  out.members_.reserve(members_.size());
  for (Vertex w : members_)
    if (w != v) out.members_.push_back(w);
  return out;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
  return out;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

}  // namespace tightcut
