#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// The prefix list {1, ..., t}, stored as its length.
struct ColorList {
  int t = 1;

  bool contains(int j) const { return 1 <= j && j <= t; }
  int size() const { return t; }

  friend auto operator<=>(const ColorList&, const ColorList&) = default;
};

struct AssignListResult {
  ColorList list;
  // representatives[i] is the input index whose list supplies value i + 1.
  std::vector<int> representatives;
};

// Returns {1, ..., t+1} where {1, ..., t} is the largest prefix admitting a
// system of distinct representatives drawn from `lists`.
//
// Lists are ordered by length with a stable counting sort (lengths above k
// share the last bucket, which cannot change which values get picked), then
// scanned once: a list is picked for value t+1 when it contains t+1. O(k).
inline AssignListResult assign_list(std::span<const ColorList> lists) {
  const int k = static_cast<int>(lists.size());
  AssignListResult out;
  if (k == 0) return out;

  std::vector<int> start(static_cast<std::size_t>(k) + 2, 0);
  auto bucket = [k](const ColorList& l) { return std::clamp(l.t, 1, k); };
  for (const auto& l : lists) ++start[bucket(l) + 1];
  for (int b = 1; b <= k + 1; ++b) start[b] += start[b - 1];
  std::vector<int> sorted(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sorted[start[bucket(lists[i])]++] = i;

  int t = 0;
  for (int idx : sorted) {
    if (lists[idx].contains(t + 1)) {
      out.representatives.push_back(idx);
      ++t;
    }
  }
  out.list.t = t + 1;
  return out;
}

// Lists assigned to the vertices of one connected component, with the
// neighbors that realise each list.
struct ListAssignment {
  Vertex root = -1;
  // 0 for vertices outside the processed component.
  std::vector<int> list_size;
  // representatives[v][i] is a neighbor of v whose list contains i + 1.
  std::vector<std::vector<Vertex>> representatives;
  // Processing position; -1 outside the component.
  std::vector<int> rank;
  std::vector<Vertex> order;
  // Block engine only: blocks hanging below each vertex, as its children in
  // the BFS tree from the root, each in the order its members were taken.
  std::vector<std::vector<std::vector<Vertex>>> blocks_below;

  ColorList list(Vertex v) const { return {list_size[v]}; }
};

}  // namespace grundy
