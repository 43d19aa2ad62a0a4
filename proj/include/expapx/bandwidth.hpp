// Copyright 2026 The expapx Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Search-tree approximation for Bandwidth over interval assignments, and the
// matching-based halving reduction.
//
// Every search fixes a BFS spanning tree rooted at vertex 0 and assigns
// position intervals to vertices in BFS order, each child relative to its
// parent's interval. Complete assignments are turned into orderings by one
// tightening pass over the edges followed by deadline scheduling.

#ifndef EXPAPX_BANDWIDTH_HPP_
#define EXPAPX_BANDWIDTH_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "expapx/error.hpp"
#include "expapx/graph.hpp"
#include "expapx/matching.hpp"

namespace expapx {

struct Interval {
  int lo = 1;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  bool empty() const { return hi < lo; }
  bool contains(int p) const { return lo <= p && p <= hi; }
  bool operator==(const Interval&) const = default;
};

using IntervalAssignment = std::vector<Interval>;

inline Interval cut(Interval iv, int n) { return Interval{std::max(iv.lo, 1), std::min(iv.hi, n)}; }

struct RootedSpanningTree {
  int root = 0;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<int> order;   // BFS order; parents precede children
};

inline RootedSpanningTree bfs_tree(const Graph& g, int root = 0) {
  const int n = g.num_vertices();
  RootedSpanningTree t;
  t.root = root;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  t.depth.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return t;
  t.depth[root] = 0;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const int v = t.order[head];
    for (int u : g.neighbors(v)) {
      if (t.depth[u] < 0) {
        t.depth[u] = t.depth[v] + 1;
        t.parent[u] = v;
        t.order.push_back(u);
      }
    }
  }
  if (static_cast<int>(t.order.size()) != n) throw InvalidInstance("graph is not connected");
  return t;
}

struct BandwidthResult {
  Ordering ordering;
  int achieved = 0;
  int b_used = 0;
  int guarantee = 1;  // proven multiplier on b
  std::uint64_t nodes = 0;        // search-tree nodes visited
  std::uint64_t assignments = 0;  // complete assignments generated
  int i0 = 0;                     // root size parameter (scheme only)
  int branching_nodes = 0;        // n-hat(i0) (scheme only)
};

// Greedy single-machine scheduling with release/deadline windows: position
// p goes to the available vertex with the smallest hi (ties: lowest index).
inline std::optional<Ordering> schedule_feasible(const IntervalAssignment& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> by_lo(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    by_lo[v] = v;
    if (a[v].empty()) return std::nullopt;
  }
  std::stable_sort(by_lo.begin(), by_lo.end(), [&](int x, int y) { return a[x].lo < a[y].lo; });
  using Key = std::pair<int, int>;  // (hi, vertex)
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> ready;
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  std::size_t next = 0;
  for (int p = 1; p <= n; ++p) {
    while (next < by_lo.size() && a[by_lo[next]].lo <= p) {
      ready.push({a[by_lo[next]].hi, by_lo[next]});
      ++next;
    }
    if (ready.empty()) return std::nullopt;
    auto [hi, v] = ready.top();
    ready.pop();
    if (hi < p) return std::nullopt;
    pos[v] = p;
  }
  return Ordering(std::move(pos));
}

// One pass over the edges in index order shrinking A(u) to
// [min A(v) - b, max A(v) + b] and then A(v) likewise against the new A(u).
// Any ordering consistent with the result has bandwidth < s + b.
inline std::optional<Ordering> tighten_and_order(const Graph& g, IntervalAssignment a, int b) {
  for (const Edge& e : g.edges()) {
    Interval& au = a[e.u];
    Interval& av = a[e.v];
    au.lo = std::max(au.lo, av.lo - b);
    au.hi = std::min(au.hi, av.hi + b);
    if (au.empty()) return std::nullopt;
    av.lo = std::max(av.lo, au.lo - b);
    av.hi = std::min(av.hi, au.hi + b);
    if (av.empty()) return std::nullopt;
  }
  return schedule_feasible(a);
}

// max(ceil(maxdeg / 2), ceil((n - 1) / diameter)) for connected graphs.
inline int bandwidth_lower_bound(const Graph& g) {
  const int n = g.num_vertices();
  if (g.num_edges() == 0) return 0;
  int diam = 0;
  for (int v = 0; v < n; ++v) {
    for (int d : bfs_distances(g, v)) diam = std::max(diam, d);
  }
  return std::max((g.max_degree() + 1) / 2, (n - 1 + diam - 1) / diam);
}

namespace detail {

inline int num_blocks(int n, int b) { return (n + b - 1) / b; }

inline void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw InvalidInstance(std::string(who) + ": graph is not connected");
}

inline void require_b(int b, const char* who) {
  if (b < 1) throw UsageError(std::string(who) + ": b must be a positive integer");
}

// Saturating n * base^n * extra.
inline std::uint64_t node_budget(int n, int base, std::uint64_t extra) {
  long double v = static_cast<long double>(n) * std::pow(static_cast<long double>(base), n) *
                  static_cast<long double>(extra);
  if (v >= 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(v);
}

inline std::optional<BandwidthResult> trivial_layout(const Graph& g, int b, int guarantee) {
  if (g.num_edges() != 0) return std::nullopt;
  BandwidthResult r;
  r.ordering = Ordering::identity(g.num_vertices());
  r.b_used = b;
  r.guarantee = guarantee;
  return r;
}

// Shared leaf handling: tighten, schedule, keep the best ordering.
struct LeafSink {
  const Graph& g;
  int b;
  int lower_bound;
  std::optional<BandwidthResult> best;
  std::uint64_t assignments = 0;

  bool done() const { return best && best->achieved <= lower_bound; }

  void offer(const IntervalAssignment& a) {
    ++assignments;
    auto f = tighten_and_order(g, a, b);
    if (!f) return;
    const int width = bandwidth_of_ordering(g, *f);
    if (!best || width < best->achieved) {
      best = BandwidthResult{};
      best->ordering = std::move(*f);
      best->achieved = width;
    }
  }
};

}  // namespace detail

// Warm-up: disjoint blocks I_j = [jb+1, (j+1)b]; each child sits in its
// parent's block or a neighbouring one. Partial assignments are pruned when
// a block is over capacity or a graph edge joins non-adjacent blocks, so a
// complete assignment laid out block by block has bandwidth <= 2b - 1.
inline std::optional<BandwidthResult> approx_bandwidth_warmup(const Graph& g, int b) {
  detail::require_b(b, "approx_bandwidth_warmup");
  detail::require_connected(g, "approx_bandwidth_warmup");
  if (auto t = detail::trivial_layout(g, b, 2)) return t;
  const int n = g.num_vertices();
  const int blocks = detail::num_blocks(n, b);
  const RootedSpanningTree tree = bfs_tree(g);
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  std::vector<int> load(static_cast<std::size_t>(blocks), 0);
  auto capacity = [&](int j) { return std::min(n, (j + 1) * b) - j * b; };
  const std::uint64_t budget = detail::node_budget(n, 3, 1);
  const int lower = bandwidth_lower_bound(g);
  std::optional<BandwidthResult> best;
  std::uint64_t nodes = 0, complete = 0;

  auto finish = [&]() {
    ++complete;
    if (complete > budget) throw InternalError("warm-up exceeded n*3^n complete assignments");
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) seq[v] = v;
    std::stable_sort(seq.begin(), seq.end(), [&](int x, int y) { return block[x] < block[y]; });
    Ordering f = Ordering::from_sequence(seq);
    const int width = bandwidth_of_ordering(g, f);
    if (width > 2 * b - 1) throw InternalError("warm-up layout exceeded 2b - 1");
    if (!best || width < best->achieved) {
      best = BandwidthResult{};
      best->ordering = std::move(f);
      best->achieved = width;
    }
  };

  auto fits = [&](int v, int j) {
    if (j < 0 || j >= blocks || load[j] >= capacity(j)) return false;
    for (int u : g.neighbors(v)) {
      if (block[u] >= 0 && std::abs(block[u] - j) > 1) return false;
    }
    return true;
  };

  auto extend = [&](auto&& self, std::size_t k) -> void {
    ++nodes;
    if (best && best->achieved <= lower) return;
    if (k == tree.order.size()) {
      finish();
      return;
    }
    const int v = tree.order[k];
    const int pj = block[tree.parent[v]];
    for (int j = pj - 1; j <= pj + 1; ++j) {
      if (!fits(v, j)) continue;
      block[v] = j;
      ++load[j];
      self(self, k + 1);
      --load[j];
      block[v] = -1;
    }
  };

  for (int j = 0; j < blocks; ++j) {
    block[tree.root] = j;
    ++load[j];
    extend(extend, 1);
    --load[j];
    block[tree.root] = -1;
  }
  if (!best) return std::nullopt;
  best->b_used = b;
  best->guarantee = 2;
  best->nodes = nodes;
  best->assignments = complete;
  return best;
}

// Overlapping intervals I_j = [jb+1, (j+2)b] cut to [1, n], for
// j = -1 .. ceil(n/b) - 1; a child of a vertex in I_j goes to I_{j-1} or
// I_{j+1}. The root ranges over j >= 0. Index -1 (the cut interval [1, b])
// is needed for children of a root in I_0 that sit in the first b positions.
inline std::optional<BandwidthResult> approx_bandwidth_3(const Graph& g, int b) {
  detail::require_b(b, "approx_bandwidth_3");
  detail::require_connected(g, "approx_bandwidth_3");
  if (auto t = detail::trivial_layout(g, b, 3)) return t;
  const int n = g.num_vertices();
  const int blocks = detail::num_blocks(n, b);
  const RootedSpanningTree tree = bfs_tree(g);
  std::vector<int> index(static_cast<std::size_t>(n), 0);
  detail::LeafSink sink{g, b, bandwidth_lower_bound(g), std::nullopt};
  const std::uint64_t budget = detail::node_budget(n, 2, static_cast<std::uint64_t>(blocks));
  std::uint64_t nodes = 0;

  auto leaf = [&]() {
    IntervalAssignment a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) a[v] = cut(Interval{index[v] * b + 1, (index[v] + 2) * b}, n);
    sink.offer(a);
  };

  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (++nodes > budget) throw InternalError("search exceeded n*2^n*ceil(n/b) nodes");
    if (sink.done()) return;
    if (k == tree.order.size()) {
      leaf();
      return;
    }
    const int v = tree.order[k];
    const int pj = index[tree.parent[v]];
    if (pj - 1 >= -1) {
      index[v] = pj - 1;
      self(self, k + 1);
    }
    if (pj + 1 <= blocks - 1) {
      index[v] = pj + 1;
      self(self, k + 1);
    }
  };

  for (int j = 0; j < blocks; ++j) {
    index[tree.root] = j;
    extend(extend, 1);
  }
  if (!sink.best) return std::nullopt;
  auto best = std::move(sink.best);
  best->b_used = b;
  best->guarantee = 3;
  best->nodes = nodes;
  best->assignments = sink.assignments;
  return best;
}

// n-hat(i) for i in r..2r-1: vertices at depth d with (i + d) % r == 0.
inline std::vector<int> branching_profile(const RootedSpanningTree& t, int r) {
  std::vector<int> out(static_cast<std::size_t>(r), 0);
  for (std::size_t v = 0; v < t.depth.size(); ++v) {
    for (int i = r; i <= 2 * r - 1; ++i) {
      if ((i + t.depth[v]) % r == 0) ++out[static_cast<std::size_t>(i - r)];
    }
  }
  return out;
}

// Intervals I_{j,2i} = [jb+1, jb+2ib] with r <= i <= 2r-1, allowed to hang
// over [1, n] until the leaves. A child of I_{j,2i} gets I_{j-1,2(i+1)}
// while i+1 <= 2r-1; otherwise it branches into I_{j-1,2r} and
// I_{j-1+2r,2r}, skipping a branch that misses [1, n].
inline std::optional<BandwidthResult> approx_bandwidth_scheme(const Graph& g, int b, int r) {
  detail::require_b(b, "approx_bandwidth_scheme");
  if (r < 1) throw UsageError("approx_bandwidth_scheme: r must be a positive integer");
  detail::require_connected(g, "approx_bandwidth_scheme");
  const int guarantee = 4 * r - 1;
  if (auto t = detail::trivial_layout(g, b, guarantee)) return t;
  const int n = g.num_vertices();
  const int blocks = detail::num_blocks(n, b);
  const RootedSpanningTree tree = bfs_tree(g);
  const std::vector<int> profile = branching_profile(tree, r);
  const int i0 = r + static_cast<int>(std::min_element(profile.begin(), profile.end()) - profile.begin());
  std::vector<std::pair<int, int>> assigned(static_cast<std::size_t>(n));  // (j, i)
  const int s = 2 * (2 * r - 1) * b;
  detail::LeafSink sink{g, b, bandwidth_lower_bound(g), std::nullopt};
  std::uint64_t nodes = 0;
  const std::uint64_t budget = detail::node_budget(n, 2, static_cast<std::uint64_t>(blocks));

  auto leaf = [&]() {
    IntervalAssignment a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto [j, i] = assigned[v];
      a[v] = cut(Interval{j * b + 1, j * b + 2 * i * b}, n);
      if (a[v].empty() || a[v].size() > s) throw InternalError("scheme produced an empty or oversized interval");
    }
    sink.offer(a);
  };

  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (++nodes > budget) throw InternalError("search exceeded n*2^n*ceil(n/b) nodes");
    if (sink.done()) return;
    if (k == tree.order.size()) {
      leaf();
      return;
    }
    const int v = tree.order[k];
    auto [j, i] = assigned[tree.parent[v]];
    if (i + 1 <= 2 * r - 1) {
      assigned[v] = {j - 1, i + 1};
      self(self, k + 1);
      return;
    }
    if (j - 1 + 2 * r >= 1) {
      assigned[v] = {j - 1, r};
      self(self, k + 1);
    }
    if (j - 1 + 2 * r <= blocks - 1) {
      assigned[v] = {j - 1 + 2 * r, r};
      self(self, k + 1);
    }
  };

  for (int j = 0; j < blocks; ++j) {
    assigned[tree.root] = {j, i0};
    extend(extend, 1);
  }
  if (!sink.best) return std::nullopt;
  auto best = std::move(sink.best);
  if (best->achieved > guarantee * b) throw InternalError("scheme ordering exceeded (4r-1)b");
  best->b_used = b;
  best->guarantee = guarantee;
  best->nodes = nodes;
  best->assignments = sink.assignments;
  best->i0 = i0;
  best->branching_nodes = profile[static_cast<std::size_t>(i0 - r)];
  return best;
}

struct BandwidthSearchOptions {
  bool linear = false;  // scan b = 1, 2, ... instead of binary search
};

// Smallest b (found by search over [1, n-1]) at which the scheme succeeds;
// returns the best ordering seen over all probes. Because the scheme never
// fails once b >= bw(G), binary search ends at some b <= bw(G).
inline BandwidthResult approx_bandwidth(const Graph& g, int r, BandwidthSearchOptions opt = {}) {
  detail::require_connected(g, "approx_bandwidth");
  if (r < 1) throw UsageError("approx_bandwidth: r must be a positive integer");
  const int n = g.num_vertices();
  if (g.num_edges() == 0) {
    BandwidthResult t;
    t.ordering = Ordering::identity(n);
    t.guarantee = 4 * r - 1;
    return t;
  }
  std::optional<BandwidthResult> best;
  std::uint64_t nodes = 0, assignments = 0;
  int found_b = -1;
  auto probe = [&](int b) {
    auto res = approx_bandwidth_scheme(g, b, r);
    if (!res) return false;
    nodes += res->nodes;
    assignments += res->assignments;
    if (!best || res->achieved < best->achieved) best = res;
    return true;
  };
  if (opt.linear) {
    for (int b = 1; b <= n - 1; ++b) {
      if (probe(b)) {
        found_b = b;
        break;
      }
    }
  } else {
    int lo = 1, hi = n - 1;
    if (!probe(hi)) throw InternalError("scheme failed at b = n - 1");
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (probe(mid)) hi = mid; else lo = mid + 1;
    }
    found_b = hi;
  }
  if (!best) throw InternalError("scheme never succeeded");
  best->b_used = found_b;
  best->nodes = nodes;
  best->assignments = assignments;
  return *best;
}

// Any graph: components are laid out one after another (lowest vertex
// first), each by approx_bandwidth.
inline BandwidthResult approx_bandwidth_any(const Graph& g, int r, BandwidthSearchOptions opt = {}) {
  BandwidthResult out;
  out.guarantee = 4 * r - 1;
  std::vector<int> seq;
  for (const auto& comp : connected_components(g)) {
    BandwidthResult part = approx_bandwidth(g.induced(comp), r, opt);
    for (int local : part.ordering.sequence()) seq.push_back(comp[local]);
    out.b_used = std::max(out.b_used, part.b_used);
    out.nodes += part.nodes;
    out.assignments += part.assignments;
  }
  out.ordering = Ordering::from_sequence(seq);
  out.achieved = bandwidth_of_ordering(g, out.ordering);
  return out;
}

// ---------------------------------------------------------------------------
// Halving reduction: contract a maximum matching (plus unmatched vertices)
// so that at least half of the non-isolated vertices disappear.

struct BandwidthReduction {
  int n = 0;                       // original vertex count
  std::vector<int> isolated;       // appended at the very end
  bool paths_only = false;         // bw <= 1: merger lays out paths itself
  std::vector<std::vector<int>> paths;
  std::vector<int> rho;            // on all vertices; -1 for isolated ones
  std::vector<int> kept;           // V' = {v : rho(v) = v}, sorted; vertex i of G' is kept[i]
  std::vector<std::vector<int>> absorbed;  // per kept vertex: rho^{-1}(v) \ {v}, sorted
  std::vector<Edge> matching;
  Graph reduced;
};

namespace detail {

inline bool is_path_forest(const Graph& g, const std::vector<int>& core) {
  if (g.max_degree() > 2) return false;
  // Acyclic iff |E| = |V| - #components on the non-isolated part.
  return g.num_edges() + connected_components(g.induced(core)).size() == core.size();
}

inline std::vector<std::vector<int>> layout_paths(const Graph& g, const std::vector<int>& core) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : core) {
    if (seen[v] || g.degree(v) != 1) continue;
    std::vector<int> path;
    int prev = -1, cur = v;
    while (cur >= 0) {
      seen[cur] = 1;
      path.push_back(cur);
      int next = -1;
      for (int u : g.neighbors(cur)) {
        if (u != prev) next = u;
      }
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(path));
  }
  return out;
}

}  // namespace detail

inline BandwidthReduction bandwidth_reduce(const Graph& g) {
  const int n = g.num_vertices();
  BandwidthReduction red;
  red.n = n;
  red.rho.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> core;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) red.isolated.push_back(v); else core.push_back(v);
  }
  if (detail::is_path_forest(g, core)) {
    red.paths_only = true;
    red.paths = detail::layout_paths(g, core);
    red.reduced = Graph(0);
    return red;
  }
  red.matching = max_matching(g);
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  for (const Edge& e : red.matching) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  auto& rho = red.rho;
  // Matched neighbours of unmatched vertices stay.
  for (int x : core) {
    if (mate[x] >= 0) continue;
    for (int w : g.neighbors(x)) {
      if (mate[w] < 0) throw InternalError("matching is not maximal");
      rho[w] = w;
    }
  }
  // Both ends fixed: they share an unmatched neighbour (a triangle), and one
  // end is folded into the other.
  for (const Edge& e : red.matching) {
    if (rho[e.u] == e.u && rho[e.v] == e.v) rho[e.u] = e.v;
  }
  for (const Edge& e : red.matching) {
    if (rho[e.u] < 0 && rho[e.v] < 0) {
      rho[e.u] = e.u;
      rho[e.v] = e.u;
    } else if (rho[e.u] < 0) {
      rho[e.u] = rho[e.v] == e.v ? e.v : e.u;
      if (rho[e.u] == e.u) rho[e.v] = e.u;
    } else if (rho[e.v] < 0) {
      rho[e.v] = rho[e.u] == e.u ? e.u : e.v;
      if (rho[e.v] == e.v) rho[e.u] = e.v;
    }
  }
  // Unmatched vertices: pair two of them through a common neighbour, or
  // fold one into a neighbour that stays.
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int x : core) {
    if (mate[x] >= 0 || rho[x] >= 0) continue;
    int w = -1;
    for (int u : g.neighbors(x)) {
      if (rho[u] == u) {
        w = u;
        break;
      }
    }
    if (w < 0) throw InternalError("unmatched vertex without a fixed neighbour");
    int y = -1;
    for (int u : g.neighbors(w)) {
      if (u != x && mate[u] < 0 && rho[u] < 0) {
        y = u;
        break;
      }
    }
    if (y >= 0) {
      rho[x] = x;
      rho[y] = x;
    } else {
      rho[x] = w;
    }
  }
  // Invariants: matched pairs collapse onto one end; preimages have size <= 3;
  // at least half of the vertices move.
  for (const Edge& e : red.matching) {
    bool onto_u = rho[e.u] == e.u && rho[e.v] == e.u;
    bool onto_v = rho[e.u] == e.v && rho[e.v] == e.v;
    if (!(onto_u || onto_v)) throw InternalError("matched pair does not collapse onto one endpoint");
  }
  std::vector<int> preimage(static_cast<std::size_t>(n), 0);
  int moved = 0;
  for (int v : core) {
    if (rho[v] < 0 || rho[rho[v]] != rho[v]) throw InternalError("rho does not map into its fixed points");
    ++preimage[rho[v]];
    if (rho[v] != v) ++moved;
  }
  for (int v : core) {
    if (preimage[v] > 3) throw InternalError("a vertex absorbs more than two others");
  }
  if (moved < static_cast<int>(core.size()) / 2) throw InternalError("fewer than half of the vertices were merged");
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (int v : core) {
    if (rho[v] == v) {
      local[v] = static_cast<int>(red.kept.size());
      red.kept.push_back(v);
    }
  }
  red.absorbed.resize(red.kept.size());
  for (int v : core) {
    if (rho[v] != v) red.absorbed[local[rho[v]]].push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = local[rho[e.u]], b = local[rho[e.v]];
    if (a != b) edges.push_back(make_edge(a, b));
  }
  red.reduced = Graph::from_pairs(static_cast<int>(red.kept.size()), edges);
  return red;
}

// s(f) = s(f') with rho^{-1}(v) \ {v} placed right after each v, then the
// isolated vertices.
inline Ordering bandwidth_merge(const BandwidthReduction& red, const Ordering& reduced_order) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(red.n));
  if (red.paths_only) {
    for (const auto& p : red.paths) seq.insert(seq.end(), p.begin(), p.end());
  } else {
    if (reduced_order.size() != static_cast<int>(red.kept.size()) || !reduced_order.is_permutation()) {
      throw ContractViolation("ordering does not match the reduced graph");
    }
    for (int local : reduced_order.sequence()) {
      seq.push_back(red.kept[local]);
      seq.insert(seq.end(), red.absorbed[local].begin(), red.absorbed[local].end());
    }
  }
  seq.insert(seq.end(), red.isolated.begin(), red.isolated.end());
  return Ordering::from_sequence(seq);
}

}  // namespace expapx

#endif  // EXPAPX_BANDWIDTH_HPP_
