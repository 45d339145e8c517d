#pragma once

// Exact Grundy numbers of block graphs (graphs whose blocks are cliques),
// plus the bounds they yield for arbitrary graphs with cut vertices.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <thread>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/lists.hpp"
#include "grundy/structure.hpp"
#include "grundy/witness.hpp"

namespace grundy {

class NotBlockGraph : public Error {
 public:
  NotBlockGraph() : Error("graph is not a block graph") {}
};

class NotCutVertex : public Error {
 public:
  explicit NotCutVertex(Vertex v) : Error("vertex " + std::to_string(v) + " is not a cut vertex") {}
};

class NoCutVertex : public Error {
 public:
  NoCutVertex() : Error("graph has no cut vertex") {}
};

// Ordered partition F_1, ..., F_k of the root's component: F_1 holds the
// non-cut vertices, each later level the non-cut vertices of what remains
// (the root excepted), and F_k = {root}.
struct LevelPartition {
  Vertex root = -1;
  std::vector<std::vector<Vertex>> levels;  // levels[i] = F_{i+1}, ascending ids
  std::vector<int> level_of;                // 1-based; 0 outside the component

  int depth() const { return static_cast<int>(levels.size()); }
};

namespace detail {

// Level partition from the BFS tree rooted at `root`: scanning BFS layers
// bottom-up, f(u) = 1 + max f over u's tree children (1 for tree leaves);
// the root is forced one level above everything else. O(m).
inline LevelPartition level_partition_unchecked(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  LevelPartition p;
  p.root = root;
  p.level_of.assign(static_cast<std::size_t>(n), 0);

  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex y : g.neighbors(order[head]))
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[head];
        order.push_back(y);
      }

  std::vector<int> f(static_cast<std::size_t>(n), 0);  // max child f so far
  int top = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (v == root) break;
    f[v] += 1;
    top = std::max(top, f[v]);
    f[parent[v]] = std::max(f[parent[v]], f[v]);
  }
  f[root] = top + 1;

  p.levels.resize(static_cast<std::size_t>(top + 1));
  for (Vertex v : order) p.level_of[v] = f[v];
  for (int v = 0; v < n; ++v)
    if (p.level_of[v]) p.levels[p.level_of[v] - 1].push_back(v);
  return p;
}

// Level-by-level variant: levels in order, ascending id within a level,
// each vertex getting assign_list over its processed neighbors' lists.
// Kept for comparison only. Block mates borrow each other's lists one after
// another, yet the parent treats those lists as independent, so the result
// can exceed the true value (smallest known case has 11 vertices).
inline ListAssignment assign_lists_level_order(const Graph& g, const LevelPartition& p) {
  const int n = g.num_vertices();
  ListAssignment a;
  a.root = p.root;
  a.list_size.assign(static_cast<std::size_t>(n), 0);
  a.representatives.resize(static_cast<std::size_t>(n));
  a.rank.assign(static_cast<std::size_t>(n), -1);

  std::vector<std::vector<ColorList>> incoming(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> sources(static_cast<std::size_t>(n));
  for (const auto& level : p.levels)
    for (Vertex u : level) {
      auto res = assign_list(incoming[u]);
      a.list_size[u] = res.list.t;
      a.rank[u] = static_cast<int>(a.order.size());
      a.order.push_back(u);
      for (int idx : res.representatives) a.representatives[u].push_back(sources[u][idx]);
      for (Vertex v : g.neighbors(u))
        if (a.rank[v] == -1) {
          incoming[v].push_back(res.list);
          sources[v].push_back(u);
        }
      incoming[u] = {};
      sources[u] = {};
    }
  return a;
}

// Bottom-up over the BFS tree from the root. The mates of a block hanging
// below x (x's tree children in that block) are finalized together when x
// is reached: repeatedly take the mate whose list, given the lists of the
// mates already taken, is shortest. The mates' lists then behave as
// independent prefix lists for x. Each list is assign_list over the
// lists of the vertex's own hanging blocks plus the mates taken before it.
inline ListAssignment assign_lists(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  ListAssignment a;
  a.root = root;
  a.list_size.assign(static_cast<std::size_t>(n), 0);
  a.representatives.resize(static_cast<std::size_t>(n));
  a.rank.assign(static_cast<std::size_t>(n), -1);
  a.blocks_below.resize(static_cast<std::size_t>(n));

  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex y : g.neighbors(order[head]))
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[head];
        order.push_back(y);
      }

  std::vector<std::vector<ColorList>> incoming(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> sources(static_cast<std::size_t>(n));
  auto finalize = [&](Vertex u, std::vector<ColorList> lists, std::vector<Vertex> from) {
    auto res = assign_list(lists);
    a.list_size[u] = res.list.t;
    a.rank[u] = static_cast<int>(a.order.size());
    a.order.push_back(u);
    for (int idx : res.representatives) a.representatives[u].push_back(from[idx]);
    incoming[u] = {};
    sources[u] = {};
    return res.list;
  };

  std::vector<int> group_of(static_cast<std::size_t>(n), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex x = *it;
    // Children of x sharing a block are adjacent; the block is a clique.
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex y : g.neighbors(x)) {
      if (parent[y] != x || group_of[y] >= 0) continue;
      group_of[y] = static_cast<int>(blocks.size());
      blocks.push_back({y});
      for (Vertex z : g.neighbors(y))
        if (parent[z] == x && group_of[z] < 0) {
          group_of[z] = group_of[y];
          blocks.back().push_back(z);
        }
    }

    for (auto& mates : blocks) {
      // Mates with equal incoming lists are interchangeable; one heap entry
      // per class keeps a clique of leaves from costing cubic time.
      struct Class {
        std::vector<ColorList> lists;
        std::vector<Vertex> members;  // descending, taken from the back
      };
      std::vector<Class> classes;
      {
        std::map<std::vector<ColorList>, int> index;
        std::sort(mates.begin(), mates.end(), std::greater<>());
        for (Vertex y : mates) {
          auto key = incoming[y];
          std::sort(key.begin(), key.end());
          auto [pos, fresh] = index.try_emplace(std::move(key), static_cast<int>(classes.size()));
          if (fresh) classes.push_back({pos->first, {}});
          classes[pos->second].members.push_back(y);
        }
      }

      std::vector<ColorList> taken;
      std::vector<Vertex> taken_by;
      auto value = [&](const Class& c) {
        std::vector<ColorList> all = c.lists;
        all.insert(all.end(), taken.begin(), taken.end());
        return assign_list(all).list.t;
      };
      // Keys only grow as lists are taken, so stale keys are lower bounds.
      using Entry = std::pair<int, int>;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
      for (int c = 0; c < static_cast<int>(classes.size()); ++c) heap.emplace(value(classes[c]), c);
      while (!heap.empty()) {
        auto [key, c] = heap.top();
        heap.pop();
        int now = value(classes[c]);
        if (now != key) {
          heap.emplace(now, c);
          continue;
        }
        Vertex y = classes[c].members.back();
        classes[c].members.pop_back();
        auto lists = std::move(incoming[y]);
        auto from = std::move(sources[y]);
        lists.insert(lists.end(), taken.begin(), taken.end());
        from.insert(from.end(), taken_by.begin(), taken_by.end());
        taken.push_back(finalize(y, std::move(lists), std::move(from)));
        taken_by.push_back(y);
        if (!classes[c].members.empty()) heap.emplace(now, c);
      }
      incoming[x].insert(incoming[x].end(), taken.begin(), taken.end());
      sources[x].insert(sources[x].end(), taken_by.begin(), taken_by.end());
      a.blocks_below[x].push_back(std::move(taken_by));
    }
  }
  finalize(root, std::move(incoming[root]), std::move(sources[root]));
  return a;
}

inline void require_block_graph(const Graph& g, const BlockCutTree& t) {
  if (!all_blocks_complete(g, t)) throw NotBlockGraph();
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline LevelPartition level_partition(const Graph& g, Vertex w) {
  auto t = block_decomposition(g);
  detail::require_block_graph(g, t);
  if (!t.is_cut_vertex(w)) throw NotCutVertex(w);
  return detail::level_partition_unchecked(g, w);
}

struct BlockRootResult {
  int gamma = 0;  // |L(root)|: the largest color the root takes in a Grundy coloring
  ListAssignment assignment;
  LevelPartition partition;
};

// Runs the list assignment with `root` processed last, on the root's
// component of a block graph. Any root is accepted; for a non-cut root the
// result is the size of its block.
inline BlockRootResult grundy_block_rooted(const Graph& g, Vertex root) {
  BlockRootResult r;
  r.partition = detail::level_partition_unchecked(g, root);
  r.assignment = detail::assign_lists(g, root);
  r.gamma = r.assignment.list_size[root];
  return r;
}

// Largest color the cut vertex w receives over all Grundy colorings of the
// block graph g, with the list assignment that certifies it.
inline BlockRootResult grundy_block(const Graph& g, Vertex w) {
  auto t = block_decomposition(g);
  detail::require_block_graph(g, t);
  if (!t.is_cut_vertex(w)) throw NotCutVertex(w);
  return grundy_block_rooted(g, w);
}

struct BlockGammaTable {
  int gamma = 0;
  int omega = 0;
  int gamma_cut = 0;  // max over cut vertices; 0 without cut vertices
  std::vector<Vertex> cut_vertices;
  // Largest color each vertex can receive: computed for cut vertices, the
  // size of the unique containing block otherwise.
  std::vector<int> vertex_gamma;
};

// Grundy number of a block graph: the larger of the clique number and the
// best cut-vertex value, one O(m) pass per cut vertex.
inline BlockGammaTable gamma_block_graph(const Graph& g, int threads = 1) {
  auto t = block_decomposition(g);
  detail::require_block_graph(g, t);
  BlockGammaTable table;
  table.omega = t.max_block_size();
  table.cut_vertices = t.cut_vertices;
  table.vertex_gamma.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& b : t.blocks)
    for (Vertex v : b)
      if (!t.is_cut_vertex(v)) table.vertex_gamma[v] = static_cast<int>(b.size());

  const int c = static_cast<int>(t.cut_vertices.size());
  detail::parallel_for(c, threads, [&](int i) {
    Vertex w = t.cut_vertices[i];
    table.vertex_gamma[w] = grundy_block_rooted(g, w).gamma;
  });
  for (Vertex w : t.cut_vertices) table.gamma_cut = std::max(table.gamma_cut, table.vertex_gamma[w]);
  table.gamma = std::max(table.omega, table.gamma_cut);
  return table;
}

namespace detail {

// Partial coloring with `root` at `target`, built from blocks_below.
//
// Members of a block are taken in increasing list length o_1 < o_2 < ...
// (lengths strictly increase in taken order). Member m can always take
// color o_m while members 1..m-1 sit at their own lengths: its hanging
// blocks then cover everything else below o_m. It can also take a lower
// color b provided every o_i (i < m) below b is shown by the block.
//
// A vertex x of color a must see every color of its target. Each hanging
// block first puts the members with o_m < a at o_m ("fixed"); the members
// with o_m >= a are free to take any missing color. If free members run
// short, the top fixed member of a block whose color is useless (outside
// the target or already shown) is freed as well, which caps that block's
// free members at its length.
inline std::vector<int> block_demand_coloring(const Graph& g, const ListAssignment& a,
                                              Vertex root, int target) {
  if (target < 1 || target > a.list_size[root])
    throw WitnessError("requested color is not in the root's list");
  std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), 0);
  auto fail = [](Vertex v) {
    return WitnessError("no consistent representatives for vertex " + std::to_string(v));
  };

  struct Job {
    Vertex x;
    std::vector<char> need;  // need[j]: color j must appear below x
  };
  std::vector<Job> jobs;
  {
    std::vector<char> need(static_cast<std::size_t>(target), 1);
    need[0] = 0;
    color[root] = target;
    jobs.push_back({root, std::move(need)});
  }

  while (!jobs.empty()) {
    Job job = std::move(jobs.back());
    jobs.pop_back();
    const Vertex x = job.x;
    const int cap = color[x];
    const auto& below = a.blocks_below[x];

    // fixed[b] = number of members fixed in block b (a prefix).
    std::vector<std::size_t> fixed(below.size(), 0);
    std::vector<int> shown(static_cast<std::size_t>(cap), 0);
    for (std::size_t b = 0; b < below.size(); ++b) {
      while (fixed[b] < below[b].size() && a.list_size[below[b][fixed[b]]] < cap)
        ++shown[a.list_size[below[b][fixed[b]++]]];
    }
    // Free members of block b may take colors up to bound(b).
    auto bound = [&](std::size_t b) {
      return fixed[b] < below[b].size() ? std::min(cap - 1, a.list_size[below[b][fixed[b]]]) : 0;
    };
    // Missing colors descending against free slots by bound descending;
    // returns how many missing colors stay uncovered.
    auto place = [&](bool commit) {
      std::vector<std::pair<int, std::size_t>> slots;  // (bound, block)
      for (std::size_t b = 0; b < below.size(); ++b)
        for (std::size_t i = fixed[b]; i < below[b].size(); ++i) slots.emplace_back(bound(b), b);
      std::sort(slots.begin(), slots.end(), std::greater<>());
      std::vector<std::size_t> next(below.size());
      for (std::size_t b = 0; b < below.size(); ++b) next[b] = below[b].size();
      std::size_t used = 0;
      int short_by = 0;
      for (int j = cap - 1; j >= 1; --j) {
        if (!job.need[j] || shown[j]) continue;
        if (used == slots.size() || slots[used].first < j) {
          ++short_by;
          continue;
        }
        if (commit) {
          // Highest remaining free member of that block takes j.
          std::size_t b = slots[used].second;
          color[below[b][--next[b]]] = j;
        }
        ++used;
      }
      return short_by;
    };

    for (int deficit = place(false); deficit > 0;) {
      // Free the top fixed member of a block whose color is useless; of
      // those, the one leaving the smallest deficit.
      std::size_t pick = below.size();
      int best = deficit + 1;
      for (std::size_t b = 0; b < below.size(); ++b) {
        if (fixed[b] == 0) continue;
        int o = a.list_size[below[b][fixed[b] - 1]];
        if (job.need[o] && shown[o] < 2) continue;
        --shown[o];
        --fixed[b];
        int d = place(false);
        ++fixed[b];
        ++shown[o];
        if (d < best) {
          best = d;
          pick = b;
        }
      }
      if (pick == below.size()) throw fail(x);
      --shown[a.list_size[below[pick][--fixed[pick]]]];
      deficit = best;
    }
    for (std::size_t b = 0; b < below.size(); ++b)
      for (std::size_t i = 0; i < fixed[b]; ++i) color[below[b][i]] = a.list_size[below[b][i]];
    place(true);

    // Each colored member needs the colors below it that its block lacks.
    for (const auto& members : below) {
      std::vector<char> in_block(static_cast<std::size_t>(cap), 0);
      for (Vertex y : members)
        if (color[y]) in_block[color[y]] = 1;
      for (Vertex y : members) {
        if (!color[y]) continue;
        std::vector<char> need(static_cast<std::size_t>(color[y]), 0);
        for (int j = 1; j < color[y]; ++j) need[j] = !in_block[j];
        jobs.push_back({y, std::move(need)});
      }
    }
  }
  return color;
}

}  // namespace detail

// Grundy coloring in which w receives color |L(w)|; `assignment` must come
// from grundy_block_rooted(g, w) or grundy_block(g, w).
inline GrundyColoring witness_coloring_block(const Graph& g, Vertex w,
                                             const ListAssignment& assignment) {
  auto partial = detail::block_demand_coloring(g, assignment, w, assignment.list_size[w]);
  auto c = extend_first_fit(g, partial);
  if (c.colors[w] != assignment.list_size[w] || !is_grundy_coloring(g, c))
    throw WitnessError("extracted coloring failed validation");
  return c;
}

// Best Grundy coloring the extraction can certify. Normally it uses exactly
// table.gamma colors; when the list values overshoot (see README) no
// consistent coloring exists at that target and the next lower target is
// tried, so num_colors is always a proven lower bound.
inline GrundyColoring block_graph_witness(const Graph& g, const BlockGammaTable& table) {
  const int n = g.num_vertices();
  if (n == 0) return {};
  std::vector<Vertex> by_value(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) by_value[v] = v;
  std::stable_sort(by_value.begin(), by_value.end(), [&](Vertex x, Vertex y) {
    return table.vertex_gamma[x] > table.vertex_gamma[y];
  });
  std::vector<std::optional<ListAssignment>> cache(static_cast<std::size_t>(n));
  for (int target = table.gamma; target >= 1; --target) {
    for (Vertex v : by_value) {
      if (table.vertex_gamma[v] < target) break;
      if (!cache[v]) cache[v] = grundy_block_rooted(g, v).assignment;
      if (cache[v]->list_size[v] < target) continue;
      try {
        auto partial = detail::block_demand_coloring(g, *cache[v], v, target);
        auto c = extend_first_fit(g, partial);
        if (c.colors[v] == target && is_grundy_coloring(g, c)) return c;
      } catch (const WitnessError&) {
      }
    }
  }
  throw WitnessError("no Grundy coloring could be extracted");
}

// (beta - 1) * tilde_delta + 1 for a connected graph with a cut vertex,
// where beta is the largest block size and tilde_delta the largest number
// of blocks through one cut vertex.
inline int bound_block_cutpoint(const Graph& g) {
  auto t = block_cut_tree(g);
  if (t.cut_vertices.empty()) throw NoCutVertex();
  return (t.max_block_size() - 1) * t.max_cut_degree() + 1;
}

// Grundy number of the clique blow-up, an upper bound for g.
inline int upper_bound_via_blowup(const Graph& g, int threads = 1) {
  return gamma_block_graph(clique_blowup(g), threads).gamma;
}

// G_{1,p} = K_p; G_{t,p} attaches a fresh K_p at every vertex of G_{t-1,p}.
inline Graph generate_clique_family(int t, int p) {
  if (t < 1 || p < 2) throw InvalidArgument("clique family needs t >= 1 and p >= 2");
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) edges.emplace_back(a, b);
  int n = p;
  for (int step = 2; step <= t; ++step) {
    const int existing = n;
    for (int v = 0; v < existing; ++v) {
      std::vector<Vertex> members{v};
      for (int i = 1; i < p; ++i) members.push_back(n++);
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          edges.emplace_back(members[a], members[b]);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace grundy
