#pragma once

// Brute-force ground truth for small graphs. Every First-Fit run is a walk
// through partial colorings; two orderings reaching the same partial
// coloring have the same futures, so states are enumerated once each.

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

namespace grundy {

class TooLarge : public Error {
 public:
  TooLarge(int n, int cap)
      : Error("graph has " + std::to_string(n) + " vertices; oracle cap is " + std::to_string(cap)) {}
};

inline constexpr int kDefaultOracleCap = 9;
// States pack one 4-bit color per vertex into 64 bits.
inline constexpr int kMaxOracleCap = 15;

struct OracleTable {
  int gamma = 0;
  std::vector<int> vertex_gamma;            // max color of each vertex
  std::vector<std::uint32_t> achievable;    // bit j set: color j occurs
  std::vector<int> best_colors;             // a coloring with gamma colors
};

namespace detail {

using State = std::uint64_t;

inline int state_color(State s, Vertex v) { return static_cast<int>((s >> (4 * v)) & 0xF); }

inline void check_cap(const Graph& g, int cap) {
  if (cap > kMaxOracleCap) throw InvalidArgument("oracle cap above " + std::to_string(kMaxOracleCap));
  if (g.num_vertices() > cap) throw TooLarge(g.num_vertices(), cap);
}

inline int next_color(const Graph& g, State s, Vertex v) {
  std::uint32_t used = 0;
  for (Vertex y : g.neighbors(v)) used |= 1u << state_color(s, y);
  int c = 1;
  while (used & (1u << c)) ++c;
  return c;
}

}  // namespace detail

// Enumerates every Grundy coloring of g (all complete First-Fit outcomes)
// and records, per vertex, the colors it takes.
inline OracleTable enumerate_grundy_colorings(const Graph& g, int cap = kDefaultOracleCap) {
  using detail::State;
  detail::check_cap(g, cap);
  const int n = g.num_vertices();
  OracleTable t;
  t.vertex_gamma.assign(static_cast<std::size_t>(n), 0);
  t.achievable.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return t;

  std::unordered_set<State> seen;
  std::vector<State> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    bool complete = true;
    for (int v = 0; v < n; ++v) {
      if (detail::state_color(s, v)) continue;
      complete = false;
      State next = s | (static_cast<State>(detail::next_color(g, s, v)) << (4 * v));
      if (seen.insert(next).second) stack.push_back(next);
    }
    if (!complete) continue;
    int top = 0;
    for (int v = 0; v < n; ++v) top = std::max(top, detail::state_color(s, v));
    if (top > t.gamma) {
      t.best_colors.resize(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) t.best_colors[v] = detail::state_color(s, v);
    }
    for (int v = 0; v < n; ++v) {
      int c = detail::state_color(s, v);
      t.vertex_gamma[v] = std::max(t.vertex_gamma[v], c);
      t.achievable[v] |= 1u << c;
      t.gamma = std::max(t.gamma, c);
    }
  }
  return t;
}

// Maximum number of colors First-Fit uses over all orderings. Branches are
// cut when no unplaced vertex can exceed the incumbent (a vertex of degree d
// never gets a color above d + 1).
inline int brute_force_gamma(const Graph& g, int cap = kDefaultOracleCap) {
  using detail::State;
  detail::check_cap(g, cap);
  const int n = g.num_vertices();
  if (n == 0) return 0;
  const int ceiling = g.max_degree() + 1;

  int best = 0;
  std::unordered_set<State> seen;
  std::vector<State> stack{0};
  seen.insert(0);
  while (!stack.empty() && best < ceiling) {
    State s = stack.back();
    stack.pop_back();
    int reach = 0;
    for (int v = 0; v < n; ++v) {
      int c = detail::state_color(s, v);
      best = std::max(best, c);
      if (!c) reach = std::max(reach, g.degree(v) + 1);
    }
    if (reach <= best) continue;
    for (int v = 0; v < n; ++v) {
      if (detail::state_color(s, v)) continue;
      State next = s | (static_cast<State>(detail::next_color(g, s, v)) << (4 * v));
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return best;
}

// Largest color u takes in a Grundy coloring of g.
inline int brute_force_gamma_at(const Graph& g, Vertex u, int cap = kDefaultOracleCap) {
  return enumerate_grundy_colorings(g, cap).vertex_gamma[u];
}

// Colors u takes across all Grundy colorings.
struct ColorSpectrum {
  Vertex vertex = 0;
  std::vector<int> achievable;  // ascending

  int max() const { return achievable.empty() ? 0 : achievable.back(); }
  bool is_prefix() const {
    for (std::size_t i = 0; i < achievable.size(); ++i)
      if (achievable[i] != static_cast<int>(i) + 1) return false;
    return true;
  }
};

inline ColorSpectrum spectrum_from_table(const OracleTable& t, Vertex u) {
  ColorSpectrum s{u, {}};
  for (int c = 1; c <= kMaxOracleCap + 1; ++c)
    if (t.achievable[u] & (1u << c)) s.achievable.push_back(c);
  return s;
}

inline ColorSpectrum color_spectrum(const Graph& g, Vertex u, int cap = kDefaultOracleCap) {
  return spectrum_from_table(enumerate_grundy_colorings(g, cap), u);
}

}  // namespace grundy
