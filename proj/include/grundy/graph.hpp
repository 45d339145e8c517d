#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grundy {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DisconnectedInput : public Error {
 public:
  DisconnectedInput() : Error("graph is not connected") {}
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored in compressed rows with every neighbor list sorted
// ascending, so all traversals visit vertices in a deterministic order.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  explicit Graph(int n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0) throw InvalidArgument("negative vertex count");
  }

  // Builds a graph from an edge list. Self-loops and out-of-range endpoints
  // throw InvalidArgument; repeated edges are merged. When `duplicates` is
  // non-null it receives the number of merged repeats.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::size_t* duplicates = nullptr) {
    Graph g(n);
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) +
                              " " + std::to_string(v));
      if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
      normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    auto last = std::unique(normalized.begin(), normalized.end());
    if (duplicates) *duplicates = static_cast<std::size_t>(normalized.end() - last);
    normalized.erase(last, normalized.end());

    g.m_ = static_cast<int>(normalized.size());
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : normalized) {
      ++deg[u];
      ++deg[v];
    }
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(static_cast<std::size_t>(g.offsets_[n]));
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : normalized) {
      g.adjacency_[fill[u]++] = v;
      g.adjacency_[fill[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
      std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
};

// Connected-component labels (0-based, numbered by smallest member).
struct Components {
  int count = 0;
  std::vector<int> label;
};

inline Components connected_components(const Graph& g) {
  const int n = g.num_vertices();
  Components c;
  c.label.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (c.label[s] != -1) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (c.label[y] == -1) {
          c.label[y] = c.count;
          stack.push_back(y);
        }
    }
    ++c.count;
  }
  return c;
}

inline bool is_connected(const Graph& g) {
  return g.num_vertices() > 0 && connected_components(g).count == 1;
}

// Subgraph induced by `vertices`; local vertex i corresponds to vertices[i].
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex y : g.neighbors(vertices[i]))
      if (local[y] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[y]);
  return {Graph::from_edges(static_cast<int>(vertices.size()), edges),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

}  // namespace grundy
