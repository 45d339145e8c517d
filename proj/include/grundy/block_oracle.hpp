#pragma once

// Exact per-vertex Grundy values on block graphs, for checking the block
// engine beyond the enumeration cap. Rooted at w, every block below a vertex
// x is a clique hanging from x, so a coloring of the part below x is summed
// up by which colors x sees from it. The state per (x, color of x) is the
// family of those color sets, kept closed under subsets. Exponential in the
// largest reachable color, polynomial otherwise.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/structure.hpp"
#include "grundy/witness.hpp"

namespace grundy {

class BlockOracleTooLarge : public Error {
 public:
  explicit BlockOracleTooLarge(const std::string& why) : Error("block oracle: " + why) {}
};

// Largest color cap the DP accepts; its tables hold 2^(cap-1) entries.
inline constexpr int kMaxBlockOracleColors = 20;

namespace detail {

using Family = std::vector<std::uint8_t>;  // indicator over color masks

inline std::uint32_t low_colors(int c) { return (1u << (c - 1)) - 1; }  // colors 1..c-1

// Safe per-vertex color caps: color c needs neighbors able to take 1..c-1.
// Starts from degree + 1 and tightens until stable.
inline std::vector<int> color_caps(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> cap(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) cap[v] = g.degree(v) + 1;
  std::vector<int> nb;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      nb.clear();
      for (Vertex u : g.neighbors(v)) nb.push_back(cap[u]);
      std::sort(nb.begin(), nb.end());
      int k = 0;
      for (int b : nb)
        if (b >= k + 1) ++k;
      if (k + 1 < cap[v]) {
        cap[v] = k + 1;
        changed = true;
      }
    }
  }
  return cap;
}

inline void close_downward(Family& f) {
  const std::size_t size = f.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t m = 0; m < size; ++m)
      if ((m & bit) && f[m]) f[m ^ bit] = 1;
}

// {A | B : A in f, B in h} for families over the same colors.
inline Family join(const Family& f, const Family& h) {
  const std::size_t size = f.size();
  std::vector<std::uint64_t> zf(f.begin(), f.end()), zh(h.begin(), h.end());
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t m = 0; m < size; ++m)
      if (m & bit) {
        zf[m] += zf[m ^ bit];
        zh[m] += zh[m ^ bit];
      }
  for (std::size_t m = 0; m < size; ++m) zf[m] *= zh[m];
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t m = 0; m < size; ++m)
      if (m & bit) zf[m] -= zf[m ^ bit];
  Family out(size);
  for (std::size_t m = 0; m < size; ++m) out[m] = zf[m] != 0;
  return out;
}

class BlockOracle {
 public:
  // Per block and parent color, at most this many color sets are tried.
  static constexpr long long kSetBudget = 2'000'000;

  BlockOracle(const Graph& g, Vertex root, const std::vector<int>& caps)
      : g_(g), n_(g.num_vertices()), root_(root), cap_(caps) {
    parent_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<Vertex> order{root};
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex y : g.neighbors(order[i]))
        if (!seen[y]) {
          seen[y] = 1;
          parent_[y] = order[i];
          order.push_back(y);
        }
    long long cells = 0;
    for (Vertex v : order) {
      if (cap_[v] > kMaxBlockOracleColors)
        throw BlockOracleTooLarge("color cap " + std::to_string(cap_[v]) + " above " +
                                  std::to_string(kMaxBlockOracleColors));
      cells += 1LL << cap_[v];
    }
    if (cells > (1LL << 28)) throw BlockOracleTooLarge("tables too large");
    cover_.resize(static_cast<std::size_t>(n_));
    blocks_.resize(static_cast<std::size_t>(n_));
    for (auto it = order.rbegin(); it != order.rend(); ++it) solve(*it);
  }

  int gamma() const {
    const auto& c = cover_[root_];
    for (int a = static_cast<int>(c.size()) - 1; a >= 1; --a)
      if (c[a][low_colors(a)]) return a;
    return 1;
  }

  // Colors of the root's component with the root at `target`, 0 elsewhere.
  std::vector<int> coloring(int target) const {
    std::vector<int> color(static_cast<std::size_t>(n_), 0);
    const auto& c = cover_[root_];
    if (target < 1 || target >= static_cast<int>(c.size()) || !c[target][low_colors(target)])
      throw InvalidArgument("block oracle: root cannot take color " + std::to_string(target));
    color[root_] = target;
    place(root_, target, low_colors(target), color);
    return color;
  }

 private:
  // x has color a and must see every color in `need` from its own blocks.
  void place(Vertex x, int a, std::uint32_t need, std::vector<int>& color) const {
    const auto& blocks = blocks_[x];
    std::vector<Family> fam, reach{Family(std::size_t{1} << (a - 1), 0)};
    reach[0][0] = 1;
    for (const auto& b : blocks) {
      fam.push_back(block_family(b, a));
      reach.push_back(join(reach.back(), fam.back()));
    }
    std::uint32_t left = need;
    for (std::size_t k = blocks.size(); k-- > 0;) {
      std::uint32_t part = left;
      while (!(fam[k][part] && reach[k][left & ~part])) part = (part - 1) & left;
      left &= ~part;
      const auto& b = blocks[k];
      for_each_block_coloring(b, a, [&](std::uint32_t set, const std::vector<int>& col) {
        if (((set >> 1) & part) != part) return false;
        for (std::size_t j = 0; j < b.size(); ++j) {
          color[b[j]] = col[j];
          place(b[j], col[j], member_need(col[j], a, set), color);
        }
        return true;
      });
    }
  }

  bool can(Vertex y, int c, std::uint32_t need) const {
    const auto& cy = cover_[y];
    return c < static_cast<int>(cy.size()) && cy[c][need];
  }

  std::vector<std::vector<Vertex>> child_blocks(Vertex x) const {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<int> group(static_cast<std::size_t>(n_), -1);
    for (Vertex y : g_.neighbors(x)) {
      if (parent_[y] != x || group[y] >= 0) continue;
      group[y] = static_cast<int>(blocks.size());
      blocks.push_back({y});
      for (Vertex z : g_.neighbors(y))
        if (parent_[z] == x && group[z] < 0) {
          group[z] = group[y];
          blocks.back().push_back(z);
        }
    }
    return blocks;
  }

  // Colors below c a member still needs from its own blocks, given the
  // block's color set (bit k for color k) and the parent's color a.
  static std::uint32_t member_need(int c, int a, std::uint32_t set) {
    return low_colors(c) & ~((set | (1u << a)) >> 1);
  }

  // Calls fn(set, colors) for each color set of block b (bit k: color k)
  // that its members can realize under a parent colored a, with one such
  // assignment. Stops once fn returns true. A set is realizable when each
  // member gets a distinct color from it that its own blocks can support;
  // that is a bipartite matching.
  template <class Fn>
  bool for_each_block_coloring(const std::vector<Vertex>& b, int a, Fn&& fn) const {
    const int k = static_cast<int>(b.size());
    int top = 0;
    for (Vertex y : b) top = std::max(top, cap_[y]);
    std::vector<int> colors;
    for (int c = 1; c <= top; ++c)
      if (c != a) colors.push_back(c);
    const int avail = static_cast<int>(colors.size());
    if (k > avail) return false;

    long long sets = 1;
    for (int i = 0; i < k; ++i) {
      sets = sets * (avail - i) / (i + 1);
      if (sets > kSetBudget) throw BlockOracleTooLarge("block with too many color sets");
    }

    std::vector<int> pick(static_cast<std::size_t>(k)), col(static_cast<std::size_t>(k));
    std::vector<int> owner, seen;
    std::vector<std::uint32_t> ok(static_cast<std::size_t>(k));  // bit i: pick[i] allowed
    auto augment = [&](auto&& self, int j, int stamp) -> bool {
      for (int i = 0; i < k; ++i) {
        if (!(ok[j] >> i & 1u) || seen[i] == stamp) continue;
        seen[i] = stamp;
        if (owner[i] < 0 || self(self, owner[i], stamp)) {
          owner[i] = j;
          return true;
        }
      }
      return false;
    };
    auto try_set = [&]() -> bool {
      std::uint32_t set = 0;
      for (int i = 0; i < k; ++i) set |= 1u << pick[i];
      for (int j = 0; j < k; ++j) {
        ok[j] = 0;
        for (int i = 0; i < k; ++i) {
          int c = pick[i];
          if (c <= cap_[b[j]] && can(b[j], c, member_need(c, a, set))) ok[j] |= 1u << i;
        }
        if (!ok[j]) return false;
      }
      owner.assign(static_cast<std::size_t>(k), -1);
      seen.assign(static_cast<std::size_t>(k), -1);
      for (int j = 0; j < k; ++j)
        if (!augment(augment, j, j)) return false;
      for (int i = 0; i < k; ++i) col[owner[i]] = pick[i];
      return fn(set, col);
    };
    auto rec = [&](auto&& self, int i, int from) -> bool {
      if (i == k) return try_set();
      for (int p = from; p <= avail - (k - i); ++p) {
        pick[i] = colors[p];
        if (self(self, i + 1, p + 1)) return true;
      }
      return false;
    };
    return rec(rec, 0, 0);
  }

  Family block_family(const std::vector<Vertex>& b, int a) const {
    Family f(std::size_t{1} << (a - 1), 0);
    for_each_block_coloring(b, a, [&](std::uint32_t set, const std::vector<int>&) {
      f[(set >> 1) & low_colors(a)] = 1;
      return false;
    });
    close_downward(f);
    return f;
  }

  void solve(Vertex x) {
    blocks_[x] = child_blocks(x);
    const auto& blocks = blocks_[x];
    auto& cx = cover_[x];
    cx.resize(static_cast<std::size_t>(cap_[x]) + 1);
    for (int a = 1; a <= cap_[x]; ++a) {
      Family reach(std::size_t{1} << (a - 1), 0);
      reach[0] = 1;
      for (const auto& b : blocks) reach = join(reach, block_family(b, a));
      cx[a] = std::move(reach);
    }
  }

  const Graph& g_;
  int n_;
  Vertex root_;
  const std::vector<int>& cap_;
  std::vector<Vertex> parent_;
  // cover_[x][a][need]: with x colored a, the part below x can show `need`.
  std::vector<std::vector<Family>> cover_;
  std::vector<std::vector<std::vector<Vertex>>> blocks_;
};

inline void require_block_graph_for_oracle(const Graph& g) {
  if (!is_block_graph(g)) throw InvalidArgument("block oracle needs a block graph");
}

}  // namespace detail

// Largest color w takes in any Grundy coloring of the block graph g.
// Throws BlockOracleTooLarge when the tables would not fit.
inline int block_oracle_vertex_gamma(const Graph& g, Vertex w) {
  detail::require_block_graph_for_oracle(g);
  auto caps = detail::color_caps(g);
  return detail::BlockOracle(g, w, caps).gamma();
}

// A Grundy coloring of the block graph g in which w gets color target.
inline GrundyColoring block_oracle_coloring(const Graph& g, Vertex w, int target) {
  detail::require_block_graph_for_oracle(g);
  auto caps = detail::color_caps(g);
  auto c = extend_first_fit(g, detail::BlockOracle(g, w, caps).coloring(target));
  if (c.colors[w] != target || !is_grundy_coloring(g, c))
    throw WitnessError("block oracle coloring failed validation");
  return c;
}

struct BlockOracleBest {
  int gamma = 0;
  Vertex vertex = -1;  // -1 when no vertex beats `known`
};

// Grundy number of the block graph g given a proven lower bound `known`:
// only vertices whose color cap exceeds the best value so far are solved.
inline BlockOracleBest block_oracle_gamma(const Graph& g, int known = 0) {
  detail::require_block_graph_for_oracle(g);
  auto caps = detail::color_caps(g);
  std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return caps[x] > caps[y]; });
  BlockOracleBest best{known, -1};
  for (Vertex v : order) {
    if (caps[v] <= best.gamma) break;
    int gv = detail::BlockOracle(g, v, caps).gamma();
    if (gv > best.gamma) best = {gv, v};
  }
  return best;
}

inline std::vector<int> block_oracle_vertex_gammas(const Graph& g) {
  detail::require_block_graph_for_oracle(g);
  auto caps = detail::color_caps(g);
  std::vector<int> out(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[v] = detail::BlockOracle(g, v, caps).gamma();
  return out;
}

}  // namespace grundy
