#pragma once

// Test-only oracles, written without the library's algorithms so they can
// check them: plain permutation enumeration, edge-removal girth, exhaustive
// SDR search, and the level partition by repeated non-cut removal.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "grundy/generators.hpp"
#include "grundy/graph.hpp"

namespace testing {

using grundy::Edge;
using grundy::Graph;
using grundy::Vertex;

// Greedy coloring, reimplemented.
inline std::vector<int> naive_first_fit(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> c(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : order) {
    int col = 1;
    for (bool clash = true; clash;) {
      clash = false;
      for (Vertex y : g.neighbors(v))
        if (c[y] == col) {
          ++col;
          clash = true;
          break;
        }
    }
    c[v] = col;
  }
  return c;
}

// Max colors over all n! orderings, plus per-vertex achievable sets (bit j).
struct PermOracle {
  int gamma = 0;
  std::vector<std::uint32_t> achievable;
};

inline PermOracle permutation_oracle(const Graph& g) {
  const int n = g.num_vertices();
  PermOracle o;
  o.achievable.assign(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    auto c = naive_first_fit(g, order);
    for (int v = 0; v < n; ++v) {
      o.gamma = std::max(o.gamma, c[v]);
      o.achievable[v] |= 1u << c[v];
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return o;
}

inline int distance(const Graph& g, Vertex s, Vertex t, std::optional<Edge> skip = {}) {
  std::vector<int> d(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<Vertex> q;
  q.push(s);
  d[s] = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x)) {
      if (skip && ((x == skip->first && y == skip->second) || (x == skip->second && y == skip->first)))
        continue;
      if (d[y] == -1) {
        d[y] = d[x] + 1;
        q.push(y);
      }
    }
  }
  return d[t];
}

// Shortest cycle through each edge: shortest detour after deleting it.
inline std::optional<int> naive_girth(const Graph& g) {
  std::optional<int> best;
  for (auto e : g.edges()) {
    int d = distance(g, e.first, e.second, e);
    if (d > 0 && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

// Shortest cycle by enumerating simple paths with DFS (n <= 10).
inline std::optional<int> dfs_girth(const Graph& g) {
  const int n = g.num_vertices();
  std::optional<int> best;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex v, int len) {
    for (Vertex y : g.neighbors(v)) {
      if (y == start && len >= 3) best = best ? std::min(*best, len) : len;
      if (on[y] || y < start) continue;
      on[y] = 1;
      walk(start, y, len + 1);
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    walk(s, s, 1);
    on[s] = 0;
  }
  return best;
}

// Largest t such that {1..t} has a system of distinct representatives in the
// given prefix lists (list i = {1..lens[i]}), by trying all injections.
inline int naive_max_sdr(const std::vector<int>& lens) {
  const int k = static_cast<int>(lens.size());
  int best = 0;
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  std::function<bool(int, int)> fill = [&](int value, int target) {
    if (value > target) return true;
    for (int i = 0; i < k; ++i)
      if (!used[i] && lens[i] >= value) {
        used[i] = 1;
        bool ok = fill(value + 1, target);
        used[i] = 0;
        if (ok) return true;
      }
    return false;
  };
  for (int t = 1; t <= k; ++t)
    if (fill(1, t)) best = t;
  return best;
}

inline bool connected_without(const Graph& g, const std::vector<char>& alive, Vertex removed) {
  int start = -1, count = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (alive[v] && v != removed) {
      ++count;
      if (start < 0) start = v;
    }
  if (count <= 1) return true;
  std::vector<char> seen(alive.size(), 0);
  std::vector<Vertex> st{start};
  seen[start] = 1;
  int reached = 1;
  while (!st.empty()) {
    Vertex x = st.back();
    st.pop_back();
    for (Vertex y : g.neighbors(x))
      if (alive[y] && y != removed && !seen[y]) {
        seen[y] = 1;
        ++reached;
        st.push_back(y);
      }
  }
  return reached == count;
}

// F_1 = non-cut vertices other than w, F_i = non-cut vertices of what is
// left (w excluded), last level {w}. Returns the level of each vertex.
inline std::vector<int> naive_levels(const Graph& g, Vertex w) {
  const int n = g.num_vertices();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  int left = n - 1, i = 0;
  while (left > 0) {
    ++i;
    std::vector<Vertex> strip;
    for (int v = 0; v < n; ++v)
      if (alive[v] && v != w && connected_without(g, alive, v)) strip.push_back(v);
    if (strip.empty()) break;
    for (Vertex v : strip) {
      alive[v] = 0;
      level[v] = i;
      --left;
    }
  }
  level[w] = i + 1;
  return level;
}

struct Named {
  std::string name;
  Graph graph;
};

// Small graphs (n <= 9) of assorted shapes, deterministic.
inline std::vector<Named> small_fixtures() {
  namespace gen = grundy::gen;
  std::vector<Named> out;
  for (int n = 1; n <= 8; ++n) out.push_back({"P" + std::to_string(n), gen::path(n)});
  for (int n = 3; n <= 9; ++n) out.push_back({"C" + std::to_string(n), gen::cycle(n)});
  for (int n = 1; n <= 6; ++n) out.push_back({"K" + std::to_string(n), gen::complete(n)});
  for (int l = 1; l <= 6; ++l) out.push_back({"star" + std::to_string(l), gen::star(l)});
  out.push_back({"spider3x2", gen::spider(3, 2)});
  out.push_back({"spider4x2", gen::spider(4, 2)});
  out.push_back({"bintree2", gen::perfect_binary_tree(2)});
  out.push_back({"two-triangles", Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})});
  out.push_back({"two-C4", Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}})});
  out.push_back({"C4+pendant", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})});
  out.push_back({"K4-e", Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})});
  out.push_back({"K33", Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})});
  for (std::uint64_t s = 1; s <= 12; ++s)
    out.push_back({"tree9s" + std::to_string(s), gen::random_tree(9, s)});
  for (std::uint64_t s = 1; s <= 12; ++s)
    out.push_back({"block9s" + std::to_string(s), gen::random_block_graph(9, 4, s)});
  for (std::uint64_t s = 1; s <= 12; ++s)
    out.push_back({"conn8s" + std::to_string(s), gen::random_connected_graph(8, static_cast<int>(s % 5) + 1, s)});
  return out;
}

}  // namespace testing
