#pragma once

// Exact Grundy numbers for graphs of girth >= 2*Delta_2 + 1 via local BFS
// trees, the "Gamma >= k" decision for k <= (g+1)/2, and the approximation
// built on top of both.

#include <algorithm>
#include <optional>
#include <vector>

#include "grundy/block.hpp"
#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/structure.hpp"
#include "grundy/witness.hpp"

namespace grundy {

class NotATree : public Error {
 public:
  NotATree() : Error("graph is not a tree") {}
};

class GirthTooSmall : public Error {
 public:
  GirthTooSmall() : Error("girth is below 2*Delta_2 + 1") {}
};

class KTooLargeForGirth : public Error {
 public:
  KTooLargeForGirth() : Error("k exceeds (girth + 1) / 2") {}
};

struct TreeResult {
  int gamma = 0;  // largest color u takes in a Grundy coloring of the tree
  ListAssignment assignment;
};

inline bool is_tree(const Graph& g) {
  return is_connected(g) && g.num_edges() == g.num_vertices() - 1;
}

// Rooted list assignment on a tree; any vertex may be the root.
inline TreeResult grundy_tree(const Graph& t, Vertex u) {
  if (!is_tree(t)) throw NotATree();
  auto r = grundy_block_rooted(t, u);
  return {r.gamma, std::move(r.assignment)};
}

inline GrundyColoring witness_coloring_tree(const Graph& t, Vertex u,
                                            const ListAssignment& assignment) {
  return witness_from_assignment(t, assignment, u, assignment.list_size[u]);
}

// BFS tree of the ball B(center, radius), relabelled so that local vertex i
// is ball.vertices[i] (the center is 0).
struct LocalTree {
  BfsBall ball;
  Graph tree;

  Vertex center() const { return ball.center; }
  int radius() const { return ball.radius; }
};

inline LocalTree local_tree(const Graph& g, Vertex center, int radius) {
  LocalTree lt{bfs_ball(g, center, radius), {}};
  std::vector<Edge> edges;
  edges.reserve(lt.ball.size());
  for (std::size_t i = 1; i < lt.ball.size(); ++i)
    edges.emplace_back(lt.ball.parent[i], static_cast<int>(i));
  lt.tree = Graph::from_edges(static_cast<int>(lt.ball.size()), edges);
  return lt;
}

struct LargeGirthOptions {
  bool prune = true;
  int threads = 1;
};

namespace detail {

inline void require_large_girth(const std::optional<int>& g, const DegreeProfile& p) {
  if (!girth_at_least(g, 2LL * p.delta2 + 1)) throw GirthTooSmall();
}

// Lifts a coloring found in a local tree to a Grundy coloring of g in which
// the tree's center keeps color `target`.
inline GrundyColoring lift_local_witness(const Graph& g, const LocalTree& lt,
                                         const ListAssignment& a, int target) {
  auto local = detail::demand_coloring(lt.tree, a, 0, target);
  std::vector<int> partial(static_cast<std::size_t>(g.num_vertices()), 0);
  for (std::size_t i = 0; i < local.size(); ++i) partial[lt.ball.vertices[i]] = local[i];
  auto c = extend_first_fit(g, partial);
  if (c.colors[lt.center()] != target || !is_grundy_coloring(g, c))
    throw WitnessError("lifted local coloring failed validation");
  return c;
}

}  // namespace detail

// Largest color u takes in G(u) = G[B(u, Delta(u))], read off the BFS tree
// of that ball.
inline int gamma_local(const Graph& g, Vertex u, const DegreeProfile& profile) {
  auto lt = local_tree(g, u, profile.local_max[u]);
  return grundy_tree(lt.tree, 0).gamma;
}

inline int gamma_local(const Graph& g, Vertex u) {
  auto profile = degree_profile(g);
  detail::require_large_girth(girth(g), profile);
  return gamma_local(g, u, profile);
}

struct ExactResult {
  int gamma = 0;
  Vertex center = -1;  // a vertex attaining gamma
  GrundyColoring witness;
};

// Grundy number as the maximum local value over all centers. O(n*m).
inline ExactResult exact_gamma_large_girth(const Graph& g, LargeGirthOptions opts = {}) {
  ExactResult out;
  const int n = g.num_vertices();
  if (n == 0) return out;
  auto profile = degree_profile(g);
  detail::require_large_girth(girth(g), profile);

  std::vector<int> local(static_cast<std::size_t>(n), 0);
  if (opts.threads <= 1) {
    int best = 0;
    for (int u = 0; u < n; ++u) {
      if (opts.prune && profile.degree[u] + 1 <= best) continue;
      local[u] = gamma_local(g, u, profile);
      best = std::max(best, local[u]);
    }
  } else {
    detail::parallel_for(n, opts.threads, [&](int u) { local[u] = gamma_local(g, u, profile); });
  }
  auto it = std::max_element(local.begin(), local.end());
  out.gamma = *it;
  out.center = static_cast<Vertex>(it - local.begin());

  auto lt = local_tree(g, out.center, profile.local_max[out.center]);
  auto tr = grundy_tree(lt.tree, 0);
  out.witness = detail::lift_local_witness(g, lt, tr.assignment, out.gamma);
  if (out.witness.num_colors != out.gamma)
    throw WitnessError("witness color count differs from the computed value");
  return out;
}

struct DecisionResult {
  bool holds = false;
  Vertex center = -1;
  std::optional<GrundyColoring> witness;
};

// Decides Gamma(g) >= k for 1 <= k <= (girth + 1) / 2 by testing, per center
// u, whether u reaches color k in the BFS tree of B(u, k-1). O(n*m).
inline DecisionResult decide_gamma_at_least(const Graph& g, int k, LargeGirthOptions opts = {}) {
  if (k < 1) throw InvalidArgument("k must be positive");
  auto gl = girth(g);
  if (gl && 2LL * k > *gl + 1LL) throw KTooLargeForGirth();
  DecisionResult out;
  const int n = g.num_vertices();
  auto profile = degree_profile(g);
  for (int u = 0; u < n; ++u) {
    if (opts.prune && profile.local_max[u] < k - 1) continue;
    auto lt = local_tree(g, u, k - 1);
    auto tr = grundy_tree(lt.tree, 0);
    if (tr.gamma >= k) {
      out.holds = true;
      out.center = u;
      out.witness = detail::lift_local_witness(g, lt, tr.assignment, k);
      return out;
    }
  }
  return out;
}

enum class ApproxMode { Exact, LowerBoundHalfGirth };

struct Ratio {
  long long num = 1;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ApproxReport {
  ApproxMode mode = ApproxMode::Exact;
  int value = 0;
  // Certified: value <= Gamma <= value / ratio.
  Ratio ratio;
  std::optional<int> girth;
  int delta2 = 0;
  std::optional<GrundyColoring> witness;
};

// Exact answer when girth >= 2*Delta_2 + 1. Otherwise decides
// Gamma >= floor((g+1)/2): when it holds that value is returned with ratio
// floor((g+1)/2) / (Delta_2 + 1); when it fails, the largest k with
// Gamma >= k is found by binary search and is exact.
inline ApproxReport approx_gamma(const Graph& g, LargeGirthOptions opts = {}) {
  ApproxReport rep;
  rep.girth = girth(g);
  auto profile = degree_profile(g);
  rep.delta2 = profile.delta2;
  if (g.num_vertices() == 0) return rep;

  if (girth_at_least(rep.girth, 2LL * profile.delta2 + 1)) {
    auto ex = exact_gamma_large_girth(g, opts);
    rep.value = ex.gamma;
    rep.witness = std::move(ex.witness);
    return rep;
  }

  const int half = (*rep.girth + 1) / 2;
  auto top = decide_gamma_at_least(g, half, opts);
  if (top.holds) {
    rep.mode = ApproxMode::LowerBoundHalfGirth;
    rep.value = half;
    rep.ratio = {half, profile.delta2 + 1LL};
    rep.witness = std::move(top.witness);
    return rep;
  }
  int lo = 1, hi = half - 1;  // decide(lo) holds, decide(half) fails
  auto best = decide_gamma_at_least(g, 1, opts);
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    auto d = decide_gamma_at_least(g, mid, opts);
    if (d.holds) {
      lo = mid;
      best = std::move(d);
    } else {
      hi = mid - 1;
    }
  }
  rep.value = lo;
  rep.witness = std::move(best.witness);
  return rep;
}

}  // namespace grundy
