#pragma once

// Deterministic graph generators and fixed fixtures.
//
// Random generators use std::mt19937_64 seeded with the given 64-bit seed.
// Bounded draws use rejection sampling on raw 64-bit outputs rather than
// std::uniform_int_distribution, whose algorithm differs between standard
// libraries, so a seed yields the same graph everywhere.

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/structure.hpp"

namespace grundy::gen {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

// Uniform integer in [lo, hi].
inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

// K_{1,leaves}; the center is vertex 0.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

// Center 0 with `legs` paths of `leg_len` vertices each.
inline Graph spider(int legs, int leg_len) {
  std::vector<Edge> e;
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (int i = 0; i < leg_len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, e);
}

// Perfect binary tree of the given depth; root 0, children of v are 2v+1, 2v+2.
inline Graph perfect_binary_tree(int depth) {
  const int n = (1 << (depth + 1)) - 1;
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
  return Graph::from_edges(n, e);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

// The 14-vertex worked example for the block algorithm: a K4 {4,5,6,7} with
// a chain of two triangles hanging off vertex 4, an edge from vertex 6 into
// the triangle {10,11,12} which carries the pendant 13, and pendant edges at
// 5 and 7. Vertex 6 is the root.
inline Graph figure2_fixture() {
  return Graph::from_edges(14, {{4, 2}, {4, 7}, {6, 5}, {4, 5}, {6, 7}, {5, 7}, {10, 11},
                                {12, 11}, {5, 8}, {7, 9}, {3, 4}, {3, 2}, {0, 2}, {0, 1},
                                {4, 6}, {6, 10}, {10, 12}, {12, 13}, {1, 2}});
}

inline constexpr Vertex kFigure2Root = 6;

// List sizes printed next to each vertex of the drawing, by vertex id.
inline constexpr std::array<int, 14> kFigure2Labels = {1, 2, 3, 1, 3, 3, 5, 4, 1, 1, 3, 1, 2, 1};

// Uniform labelled tree on n vertices, decoded from a random Pruefer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("tree needs at least one vertex");
  if (n <= 2) return path(n);
  Rng rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& x : code) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : code) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> e;
  for (int x : code) {
    int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  e.emplace_back(a, leaves.top());
  return Graph::from_edges(n, e);
}

// Connected block graph grown as a random tree of cliques: each new block
// has a uniform size in [2, max_block] (capped by the vertices left) and is
// glued at a uniformly chosen existing vertex.
inline Graph random_block_graph(int n, int max_block, std::uint64_t seed) {
  if (n < 1 || max_block < 2) throw InvalidArgument("block graph needs n >= 1 and max_block >= 2");
  Rng rng(seed);
  std::vector<Edge> e;
  auto clique = [&](const std::vector<Vertex>& members) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) e.emplace_back(members[a], members[b]);
  };
  int count = uniform_int(rng, 1, std::min(max_block, n));
  std::vector<Vertex> first(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) first[i] = i;
  clique(first);
  while (count < n) {
    Vertex at = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(count)));
    int size = uniform_int(rng, 2, std::min(max_block, n - count + 1));
    std::vector<Vertex> members{at};
    for (int i = 1; i < size; ++i) members.push_back(count++);
    clique(members);
  }
  return Graph::from_edges(n, e);
}

// Random tree plus up to `extra_edges` distinct random chords.
inline Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed) {
  auto tree = random_tree(n, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::set<Edge> edges;
  for (auto ed : tree.edges()) edges.insert(ed);
  const long long capacity = static_cast<long long>(n) * (n - 1) / 2;
  for (int i = 0; i < extra_edges && static_cast<long long>(edges.size()) < capacity;) {
    int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (edges.insert({std::min(u, v), std::max(u, v)}).second) ++i;
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

// Random tree on `base_n` vertices with one random chord, whose unique cycle
// is then subdivided until girth >= 2*Delta_2 + 1.
inline Graph subdivided_tree(int base_n, std::uint64_t seed) {
  auto g = random_connected_graph(base_n, base_n >= 3 ? 1 : 0, seed);
  Rng rng(seed + 1);
  for (;;) {
    auto gl = girth(g);
    if (girth_at_least(gl, 2LL * degree_profile(g).delta2 + 1)) return g;
    // Subdivide a random edge of the cycle: edges whose removal raises girth.
    auto edges = g.edges();
    std::vector<Edge> on_cycle;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<Edge> rest = edges;
      rest.erase(rest.begin() + static_cast<long>(i));
      if (girth(Graph::from_edges(g.num_vertices(), rest)) != gl) on_cycle.push_back(edges[i]);
    }
    Edge pick = on_cycle[uniform_below(rng, on_cycle.size())];
    const int n = g.num_vertices();
    std::vector<Edge> next;
    for (auto ed : edges)
      if (ed != pick) next.push_back(ed);
    next.emplace_back(pick.first, n);
    next.emplace_back(n, pick.second);
    g = Graph::from_edges(n + 1, next);
  }
}

}  // namespace grundy::gen
