#pragma once

// Turns a list assignment into an explicit Grundy coloring that gives the
// root a requested color.

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/lists.hpp"

namespace grundy {

class WitnessError : public Error {
 public:
  using Error::Error;
};

namespace detail {

// Bipartite matching of needed colors to candidate vertices (augmenting
// paths). allowed[i] lists the candidate indices that may take needed[i].
inline std::vector<int> match_colors(const std::vector<std::vector<int>>& allowed,
                                     int num_candidates) {
  std::vector<int> owner(static_cast<std::size_t>(num_candidates), -1);
  std::vector<int> match(allowed.size(), -1);
  std::vector<char> visited;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int c : allowed[i]) {
      if (visited[c]) continue;
      visited[c] = 1;
      if (owner[c] == -1 || self(self, owner[c])) {
        owner[c] = i;
        match[i] = c;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    visited.assign(static_cast<std::size_t>(num_candidates), 0);
    if (!augment(augment, static_cast<int>(i))) return {};
  }
  return match;
}

// Partial coloring in which `root` has color `target` and every colored
// vertex is covered by colored neighbors, built top-down through the
// assignment: a vertex of color j needs colors 1..j-1 on neighbors processed
// before it, each neighbor eligible for color c when c is in its list and no
// colored neighbor of it already holds c.
//
// Throws WitnessError when some demand cannot be met.
inline std::vector<int> demand_coloring(const Graph& g, const ListAssignment& a, Vertex root,
                                        int target) {
  const int n = g.num_vertices();
  if (target < 1 || target > a.list_size[root])
    throw WitnessError("requested color is not in the root's list");

  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> neighbor_colors(static_cast<std::size_t>(n));
  auto has_neighbor_color = [&](Vertex v, int c) {
    const auto& nc = neighbor_colors[v];
    return std::find(nc.begin(), nc.end(), c) != nc.end();
  };
  // Highest color first, ties by later processing position.
  std::priority_queue<std::tuple<int, int, Vertex>> pending;
  auto fix = [&](Vertex v, int c) {
    color[v] = c;
    for (Vertex y : g.neighbors(v)) neighbor_colors[y].push_back(c);
    pending.emplace(c, a.rank[v], v);
  };
  fix(root, target);

  while (!pending.empty()) {
    auto [j, r, v] = pending.top();
    pending.pop();
    std::vector<int> needed;
    for (int c = 1; c < j; ++c)
      if (!has_neighbor_color(v, c)) needed.push_back(c);
    if (needed.empty()) continue;

    std::vector<Vertex> candidates;
    for (Vertex z : g.neighbors(v))
      if (color[z] == 0 && a.rank[z] >= 0 && a.rank[z] < r) candidates.push_back(z);
    std::vector<std::vector<int>> allowed(needed.size());
    for (std::size_t i = 0; i < needed.size(); ++i)
      for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        Vertex z = candidates[ci];
        if (needed[i] <= a.list_size[z] && !has_neighbor_color(z, needed[i]))
          allowed[i].push_back(static_cast<int>(ci));
      }
    auto match = match_colors(allowed, static_cast<int>(candidates.size()));
    if (match.empty())
      throw WitnessError("no consistent representatives for vertex " + std::to_string(v));
    for (std::size_t i = 0; i < needed.size(); ++i) fix(candidates[match[i]], needed[i]);
  }
  return color;
}

}  // namespace detail

// Grundy coloring of g giving `root` color `target`, extracted from an
// assignment computed with `root` processed last, then completed by
// First-Fit. The result is checked before it is returned.
inline GrundyColoring witness_from_assignment(const Graph& g, const ListAssignment& a, Vertex root,
                                              int target) {
  auto partial = detail::demand_coloring(g, a, root, target);
  auto c = extend_first_fit(g, partial);
  if (c.colors[root] != target || !is_grundy_coloring(g, c))
    throw WitnessError("extracted coloring failed validation");
  return c;
}

}  // namespace grundy
