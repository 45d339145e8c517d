#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

class NotAPermutation : public Error {
 public:
  NotAPermutation() : Error("order is not a permutation of the vertices") {}
};

// Vertex colors 1..num_colors. Produced by First-Fit, so every vertex of
// color j sees all colors below j among its neighbors.
struct GrundyColoring {
  std::vector<int> colors;
  int num_colors = 0;

  int operator[](Vertex v) const { return colors[v]; }
};

namespace detail {

// Smallest positive color not used by an already colored neighbor of v.
// `seen` is scratch space of size >= deg(v) + 2, left zeroed on return.
inline int first_free_color(const Graph& g, Vertex v, std::span<const int> colors,
                            std::vector<char>& seen) {
  const int d = g.degree(v);
  for (Vertex y : g.neighbors(v))
    if (colors[y] > 0 && colors[y] <= d + 1) seen[colors[y]] = 1;
  int c = 1;
  while (seen[c]) ++c;
  for (Vertex y : g.neighbors(v))
    if (colors[y] > 0 && colors[y] <= d + 1) seen[colors[y]] = 0;
  return c;
}

}  // namespace detail

// Greedy coloring: each vertex, in `order`, takes the smallest color absent
// from its previously colored neighbors.
inline GrundyColoring first_fit(const Graph& g, std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw NotAPermutation();
  GrundyColoring c;
  c.colors.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.max_degree()) + 2, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || placed[v]) throw NotAPermutation();
    placed[v] = 1;
    c.colors[v] = detail::first_free_color(g, v, c.colors, seen);
    c.num_colors = std::max(c.num_colors, c.colors[v]);
  }
  return c;
}

// True iff `colors` is proper and every vertex of color j has a neighbor of
// each color i < j.
inline bool is_grundy_coloring(const Graph& g, std::span<const int> colors) {
  const int n = g.num_vertices();
  if (static_cast<int>(colors.size()) != n) return false;
  std::vector<char> seen;
  for (int v = 0; v < n; ++v) {
    const int c = colors[v];
    if (c < 1 || c > g.degree(v) + 1) return false;
    seen.assign(static_cast<std::size_t>(c), 0);
    int covered = 0;
    for (Vertex y : g.neighbors(v)) {
      const int cy = colors[y];
      if (cy == c) return false;
      if (cy < c && !seen[cy]) {
        seen[cy] = 1;
        ++covered;
      }
    }
    if (covered != c - 1) return false;
  }
  return true;
}

inline bool is_grundy_coloring(const Graph& g, const GrundyColoring& c) {
  if (!is_grundy_coloring(g, std::span<const int>(c.colors))) return false;
  int top = 0;
  for (int x : c.colors) top = std::max(top, x);
  return top == c.num_colors;
}

// Completes a partial coloring (0 = uncolored) by First-Fit: colored vertices
// first, ascending by color then id, then the rest ascending by id. When the
// partial coloring is a Grundy coloring of the subgraph it induces, every
// pre-colored vertex keeps its color.
inline GrundyColoring extend_first_fit(const Graph& g, std::span<const int> partial) {
  const int n = g.num_vertices();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const int ka = partial[a] > 0 ? partial[a] : n + 1;
    const int kb = partial[b] > 0 ? partial[b] : n + 1;
    return ka < kb;
  });
  return first_fit(g, order);
}

}  // namespace grundy
