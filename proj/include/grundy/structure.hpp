#pragma once

// Structural analyses shared by every engine: girth, degree profile,
// block decomposition, block-graph recognition, clique blow-up, BFS balls.

#include <algorithm>
#include <optional>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// Length of a shortest cycle; std::nullopt for forests.
//
// One BFS per start vertex. A BFS stops as soon as its frontier depth can no
// longer produce a cycle shorter than the best one found, so the total work
// is O(n*m).
inline std::optional<int> girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;  // 0 = no cycle yet
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (best && 2 * dist[x] >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          int len = dist[x] + dist[y] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
    for (Vertex v : queue) {
      dist[v] = -1;
      parent[v] = -1;
    }
  }
  if (!best) return std::nullopt;
  return best;
}

// True when a graph of girth `g` meets `threshold` (forests meet everything).
inline bool girth_at_least(const std::optional<int>& g, long long threshold) {
  return !g || *g >= threshold;
}

struct DegreeProfile {
  std::vector<int> degree;
  // local_max[u] = max{ d(v) : v in N(u), d(v) <= d(u) }, 0 when empty.
  std::vector<int> local_max;
  int delta2 = 0;
  int max_degree = 0;
};

inline DegreeProfile degree_profile(const Graph& g) {
  const int n = g.num_vertices();
  DegreeProfile p;
  p.degree.resize(static_cast<std::size_t>(n));
  p.local_max.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    p.degree[v] = g.degree(v);
    p.max_degree = std::max(p.max_degree, p.degree[v]);
  }
  for (int u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u))
      if (p.degree[v] <= p.degree[u]) p.local_max[u] = std::max(p.local_max[u], p.degree[v]);
    p.delta2 = std::max(p.delta2, p.local_max[u]);
  }
  return p;
}

// Blocks (maximal 2-connected subgraphs, bridges as K2, isolated vertices as
// singletons) together with the cut-vertex incidence structure.
struct BlockCutTree {
  std::vector<std::vector<Vertex>> blocks;  // each sorted ascending
  std::vector<Vertex> cut_vertices;         // sorted ascending
  std::vector<std::pair<Vertex, int>> incidence;  // (cut vertex, block index)
  std::vector<int> block_count;             // blocks containing each vertex

  bool is_cut_vertex(Vertex v) const { return block_count[v] >= 2; }

  // Largest block size (beta); equals omega for block graphs.
  int max_block_size() const {
    int best = 0;
    for (const auto& b : blocks) best = std::max(best, static_cast<int>(b.size()));
    return best;
  }

  // Largest number of blocks through one cut vertex; 0 without cut vertices.
  int max_cut_degree() const {
    int best = 0;
    for (Vertex c : cut_vertices) best = std::max(best, block_count[c]);
    return best;
  }
};

// Block decomposition of an arbitrary graph (all components).
inline BlockCutTree block_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  BlockCutTree t;
  t.block_count.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> vstack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int timer = 0;

  auto emit = [&](std::vector<Vertex> block) {
    std::sort(block.begin(), block.end());
    for (Vertex v : block) ++t.block_count[v];
    t.blocks.push_back(std::move(block));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    if (g.degree(root) == 0) {
      emit({root});
      continue;
    }
    vstack.push_back(root);
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex y = nb[f.next++];
        if (disc[y] == -1) {
          disc[y] = low[y] = timer++;
          vstack.push_back(y);
          frames.push_back({y, f.v, 0});
        } else if (y != f.parent) {
          low[f.v] = std::min(low[f.v], disc[y]);
        }
        continue;
      }
      Vertex child = f.v;
      frames.pop_back();
      if (frames.empty()) break;
      Vertex p = frames.back().v;
      low[p] = std::min(low[p], low[child]);
      if (low[child] >= disc[p]) {
        std::vector<Vertex> block;
        Vertex x;
        do {
          x = vstack.back();
          vstack.pop_back();
          block.push_back(x);
        } while (x != child);
        block.push_back(p);
        emit(std::move(block));
      }
    }
    vstack.clear();
  }

  for (int v = 0; v < n; ++v)
    if (t.block_count[v] >= 2) t.cut_vertices.push_back(v);
  for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
    for (Vertex v : t.blocks[b])
      if (t.block_count[v] >= 2) t.incidence.emplace_back(v, b);
  std::sort(t.incidence.begin(), t.incidence.end());
  return t;
}

// Block-cutpoint structure of a connected graph.
inline BlockCutTree block_cut_tree(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedInput();
  return block_decomposition(g);
}

namespace detail {

// Blocks partition the edges, so the graph is a block graph exactly when the
// blocks jointly hold the maximum possible number of edges.
inline bool all_blocks_complete(const Graph& g, const BlockCutTree& t) {
  long long capacity = 0;
  for (const auto& b : t.blocks) {
    long long s = static_cast<long long>(b.size());
    capacity += s * (s - 1) / 2;
  }
  return capacity == g.num_edges();
}

}  // namespace detail

inline bool is_block_graph(const Graph& g) {
  return detail::all_blocks_complete(g, block_decomposition(g));
}

// G with every block completed to a clique. Always a block graph.
inline Graph clique_blowup(const Graph& g) {
  std::vector<Edge> edges;
  for (const auto& b : block_decomposition(g).blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) edges.emplace_back(b[i], b[j]);
  return Graph::from_edges(g.num_vertices(), edges);
}

// Vertices within distance `radius` of `center`, in BFS order. The arrays
// are parallel: level[i] is the distance of vertices[i] and parent[i] the
// ball-local index of its BFS parent (-1 for the center).
struct BfsBall {
  Vertex center = 0;
  int radius = 0;
  std::vector<Vertex> vertices;
  std::vector<int> level;
  std::vector<int> parent;

  std::size_t size() const { return vertices.size(); }
};

inline BfsBall bfs_ball(const Graph& g, Vertex center, int radius) {
  if (radius < 0) throw InvalidArgument("negative radius");
  BfsBall ball;
  ball.center = center;
  ball.radius = radius;
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  ball.vertices.push_back(center);
  ball.level.push_back(0);
  ball.parent.push_back(-1);
  local[center] = 0;
  for (std::size_t head = 0; head < ball.vertices.size(); ++head) {
    if (ball.level[head] == radius) break;
    for (Vertex y : g.neighbors(ball.vertices[head])) {
      if (local[y] != -1) continue;
      local[y] = static_cast<int>(ball.vertices.size());
      ball.vertices.push_back(y);
      ball.level.push_back(ball.level[head] + 1);
      ball.parent.push_back(static_cast<int>(head));
    }
  }
  return ball;
}

}  // namespace grundy
