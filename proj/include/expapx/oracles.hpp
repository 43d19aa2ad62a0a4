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

// Exact exponential-time solvers. They serve as inner solvers (alpha = 1)
// and as ground truth in tests, so each one re-validates its witness before
// returning. Sizes are capped by explicit limits instead of slowing down.

#ifndef EXPAPX_ORACLES_HPP_
#define EXPAPX_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expapx/assignment.hpp"
#include "expapx/error.hpp"
#include "expapx/graph.hpp"
#include "expapx/matching.hpp"
#include "expapx/rational.hpp"
#include "expapx/setsystem.hpp"
#include "expapx/subset.hpp"
#include "expapx/tsp.hpp"

namespace expapx {

struct OracleLimits {
  int bandwidth_n = 14;
  int setcover_bruteforce_m = 22;
  int setcover_ie_n = 20;
  int setcover_dc_n = 12;
  int mis_n = 26;
  int coloring_n = 16;
  int held_karp_n = 16;
};

template <class Value, class Witness>
struct ExactResult {
  Value value{};
  Witness witness{};
  std::uint64_t nodes_explored = 0;
};

using BandwidthExact = ExactResult<int, Ordering>;
using CoverExact = ExactResult<Rational, Cover>;
using MisExact = ExactResult<int, std::vector<int>>;
using ColoringExact = ExactResult<int, Coloring>;
using TourExact = ExactResult<Rational, Tour>;

namespace detail {

inline void check_limit(const char* solver, std::size_t size, int limit) {
  if (size > static_cast<std::size_t>(limit)) throw SizeLimitError(solver, size, static_cast<std::size_t>(limit));
}

// Decides bw(G) <= b for a connected graph by placing vertices left to
// right. A placed vertex u with unplaced neighbours imposes the deadline
// pos(u) + b on them; the partial layout is pruned as soon as those
// deadlines cannot all be met (earliest-deadline-first counting).
class BandwidthDecider {
 public:
  BandwidthDecider(const Graph& g, int b) : g_(g), b_(b), n_(g.num_vertices()) {
    pos_.assign(static_cast<std::size_t>(n_), 0);
    bucket_.assign(static_cast<std::size_t>(n_) + 2, 0);
  }

  std::optional<std::vector<int>> run() {
    if (place(1)) return sequence_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int deadline(int v) const {
    int d = std::numeric_limits<int>::max();
    for (int u : g_.neighbors(v)) {
      if (pos_[u] != 0) d = std::min(d, pos_[u] + b_);
    }
    return d;
  }

  // Every unplaced vertex with a deadline must fit into positions q..n.
  bool deadlines_feasible(int q) {
    std::fill(bucket_.begin(), bucket_.end(), 0);
    for (int v = 0; v < n_; ++v) {
      if (pos_[v] != 0) continue;
      int d = deadline(v);
      if (d == std::numeric_limits<int>::max()) continue;
      if (d < q) return false;
      ++bucket_[std::min(d, n_ + 1) - q];
    }
    int used = 0;
    for (int t = q; t <= n_; ++t) {
      used += bucket_[t - q];
      if (used > t - q + 1) return false;
    }
    return true;
  }

  bool place(int q) {
    ++nodes_;
    if (q > n_) return true;
    // A vertex whose deadline is q must take this position.
    int forced = -1;
    for (int v = 0; v < n_ && forced < 0; ++v) {
      if (pos_[v] == 0 && deadline(v) == q) forced = v;
    }
    for (int v = 0; v < n_; ++v) {
      if (pos_[v] != 0 || (forced >= 0 && v != forced)) continue;
      pos_[v] = q;
      sequence_.push_back(v);
      if (deadlines_feasible(q + 1) && place(q + 1)) return true;
      sequence_.pop_back();
      pos_[v] = 0;
    }
    return false;
  }

  const Graph& g_;
  int b_;
  int n_;
  std::vector<int> pos_;
  std::vector<int> bucket_;
  std::vector<int> sequence_;
  std::uint64_t nodes_ = 0;
};

// Cuthill-McKee style BFS layout; only used as an upper bound.
inline std::vector<int> bfs_layout(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int u : g.neighbors(order[head])) {
      if (!seen[u]) {
        seen[u] = 1;
        order.push_back(u);
      }
    }
  }
  return order;
}

inline int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

// Exact bandwidth of a connected graph: returns the layout as a sequence.
inline std::pair<int, std::vector<int>> exact_bandwidth_connected(const Graph& g,
                                                                   std::uint64_t& nodes) {
  const int n = g.num_vertices();
  if (n <= 1) return {0, std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::vector<int> best_seq = bfs_layout(g);
  int upper = bandwidth_of_ordering(g, Ordering::from_sequence(best_seq));
  const int diam = diameter(g);
  int lower = std::max((g.max_degree() + 1) / 2, (n - 1 + diam - 1) / diam);
  for (int b = std::max(lower, 1); b < upper; ++b) {
    BandwidthDecider decider(g, b);
    auto seq = decider.run();
    nodes += decider.nodes();
    if (seq) return {b, *seq};
  }
  return {upper, best_seq};
}

}  // namespace detail

// bw(G) with an optimal ordering. Components are solved separately and
// laid out one after another.
inline BandwidthExact exact_bandwidth(const Graph& g, const OracleLimits& limits = {}) {
  detail::check_limit("exact_bandwidth", static_cast<std::size_t>(g.num_vertices()), limits.bandwidth_n);
  BandwidthExact out;
  std::vector<int> sequence;
  for (const auto& comp : connected_components(g)) {
    Graph sub = g.induced(comp);
    auto [bw, seq] = detail::exact_bandwidth_connected(sub, out.nodes_explored);
    out.value = std::max(out.value, bw);
    for (int local : seq) sequence.push_back(comp[local]);
  }
  out.witness = Ordering::from_sequence(sequence);
  if (bandwidth_of_ordering(g, out.witness) != out.value) {
    throw InternalError("exact_bandwidth witness does not attain its value");
  }
  return out;
}

namespace detail {

// Sorted index lists compared lexicographically, on bitmasks.
inline bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline Cover cover_of_mask(std::uint64_t mask) {
  Cover c;
  for (; mask != 0; mask &= mask - 1) c.chosen.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return c;
}

inline void require_feasible(const SetSystem& s) {
  if (!s.feasible()) {
    Subset missing = s.universe() - s.union_of_all();
    throw InfeasibleError("set system is infeasible: element " + std::to_string(missing.lowest() + 1) +
                          " is in no set");
  }
}

inline void validate_cover(const SetSystem& s, const Cover& c, const Rational& value, const char* who) {
  if (!is_feasible_cover(s, c) || cover_weight(s, c) != value) {
    throw InternalError(std::string(who) + " produced an invalid witness");
  }
}

// Gray-code walk over all subfamilies; calls visit(mask, weight) for every
// feasible one.
template <class Int, class Visit>
std::uint64_t gray_walk_covers(const SetSystem& s, const std::vector<Int>& w, Visit&& visit) {
  const int m = static_cast<int>(s.num_sets());
  const int n = s.universe_size();
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  int covered = 0;
  Int weight = 0;
  std::uint64_t mask = 0;
  if (covered == n) visit(mask, weight);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    int bit = std::countr_zero(i);
    mask ^= std::uint64_t{1} << bit;
    const bool adding = (mask >> bit) & 1;
    for (int e : s.set(static_cast<std::size_t>(bit)).elements()) {
      if (adding) {
        if (count[e]++ == 0) ++covered;
      } else {
        if (--count[e] == 0) --covered;
      }
    }
    if (adding) weight += w[bit]; else weight -= w[bit];
    if (covered == n) visit(mask, weight);
  }
  return total;
}

}  // namespace detail

// Minimum-weight cover over all 2^m subfamilies; ties go to the
// lexicographically smallest sorted index list.
inline CoverExact exact_setcover_bruteforce(const SetSystem& s, const OracleLimits& limits = {}) {
  detail::check_limit("exact_setcover_bruteforce", s.num_sets(), limits.setcover_bruteforce_m);
  detail::require_feasible(s);
  IntegerScale scale = IntegerScale::of(s.weights());
  CoverExact out;
  with_integer_weights(scale, [&](const auto& w) {
    using Int = std::decay_t<decltype(w[0])>;
    std::optional<Int> best;
    std::uint64_t best_mask = 0;
    out.nodes_explored = detail::gray_walk_covers(s, w, [&](std::uint64_t mask, const Int& weight) {
      if (!best || weight < *best || (weight == *best && detail::lex_less_mask(mask, best_mask))) {
        best = weight;
        best_mask = mask;
      }
    });
    out.witness = detail::cover_of_mask(best_mask);
    out.value = scale.unscale(*best);
  });
  detail::validate_cover(s, out.witness, out.value, "exact_setcover_bruteforce");
  return out;
}

// Every minimum-weight cover, each as a sorted index list, in lexicographic
// order.
inline std::vector<Cover> all_optimal_covers(const SetSystem& s, const OracleLimits& limits = {}) {
  detail::check_limit("all_optimal_covers", s.num_sets(), limits.setcover_bruteforce_m);
  detail::require_feasible(s);
  IntegerScale scale = IntegerScale::of(s.weights());
  std::vector<std::uint64_t> masks;
  with_integer_weights(scale, [&](const auto& w) {
    using Int = std::decay_t<decltype(w[0])>;
    std::optional<Int> best;
    detail::gray_walk_covers(s, w, [&](std::uint64_t mask, const Int& weight) {
      if (!best || weight < *best) {
        best = weight;
        masks.clear();
      }
      if (weight == *best) masks.push_back(mask);
    });
  });
  std::sort(masks.begin(), masks.end(), detail::lex_less_mask);
  std::vector<Cover> out;
  for (auto mask : masks) out.push_back(detail::cover_of_mask(mask));
  return out;
}

namespace detail {

// Number of k-tuples of sets (chosen among `active`) whose union is U:
//   sum over X subset of U of (-1)^|X| a(X)^k,  a(X) = #sets disjoint from X.
// Values of a(X) are grouped so the sum is evaluated as sum_j coef_j * j^k.
class CoverCounter {
 public:
  CoverCounter(const SetSystem& s, const std::vector<char>& active) : m_(s.num_sets()) {
    const int n = s.universe_size();
    const std::size_t full = (std::size_t{1} << n);
    std::vector<std::int32_t> within(full, 0);  // #sets contained in Y
    for (std::size_t i = 0; i < s.num_sets(); ++i) {
      if (active[i]) ++within[s.set(i).bits()];
    }
    for (int bit = 0; bit < n; ++bit) {
      for (std::size_t y = 0; y < full; ++y) {
        if (y >> bit & 1) within[y] += within[y ^ (std::size_t{1} << bit)];
      }
    }
    coef_.assign(m_ + 1, 0);
    const std::size_t universe = full - 1;
    for (std::size_t x = 0; x < full; ++x) {
      // a(X) = number of sets inside U \ X
      const int a = within[universe & ~x];
      coef_[static_cast<std::size_t>(a)] += (std::popcount(x) % 2 == 0) ? 1 : -1;
    }
  }

  BigInt count(std::size_t k) const {
    BigInt total = 0;
    for (std::size_t j = 0; j < coef_.size(); ++j) {
      if (coef_[j] == 0) continue;
      total += BigInt(coef_[j]) * boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(k));
    }
    return total;
  }

  // Least k with a positive count; the instance must be feasible.
  std::size_t min_size() const {
    for (std::size_t k = 0; k <= m_; ++k) {
      if (count(k) > 0) return k;
    }
    throw InternalError("inclusion-exclusion found no cover of size <= m");
  }

 private:
  std::size_t m_;
  std::vector<std::int64_t> coef_;
};

}  // namespace detail

// Minimum cardinality cover by inclusion-exclusion counting; the witness is
// recovered by self-reduction (drop a set whenever the minimum stays put).
inline CoverExact exact_setcover_ie(const SetSystem& s, const OracleLimits& limits = {}) {
  detail::check_limit("exact_setcover_ie", static_cast<std::size_t>(s.universe_size()), limits.setcover_ie_n);
  if (!s.all_unit_weights()) throw InvalidInstance("exact_setcover_ie requires unit weights");
  detail::require_feasible(s);
  std::vector<char> active(s.num_sets(), 1);
  const std::size_t k = detail::CoverCounter(s, active).min_size();
  CoverExact out;
  out.nodes_explored = 1;
  std::size_t remaining = s.num_sets();
  for (std::size_t i = 0; i < s.num_sets() && remaining > k; ++i) {
    active[i] = 0;
    detail::CoverCounter counter(s, active);
    ++out.nodes_explored;
    if (counter.count(k) > 0) {
      --remaining;
    } else {
      active[i] = 1;
    }
  }
  for (std::size_t i = 0; i < s.num_sets(); ++i) {
    if (active[i]) out.witness.chosen.push_back(i);
  }
  out.value = Rational(static_cast<std::int64_t>(k));
  if (out.witness.size() != k) throw InternalError("self-reduction lost the optimum");
  detail::validate_cover(s, out.witness, out.value, "exact_setcover_ie");
  return out;
}

namespace detail {

// Divide and conquer over the universe: choose one set S of the cover, then
// split the rest of the universe into two halves and solve each half
// independently. Exact with branch and bound on the best found so far.
template <class Int>
class DivideConquerCover {
 public:
  DivideConquerCover(const SetSystem& s, const std::vector<Int>& w) : s_(s), w_(w) {}

  struct Best {
    Int weight;
    std::uint64_t chosen;  // bitmask over set indices
  };

  std::optional<Best> solve(Subset u) {
    ++nodes_;
    if (u.empty()) return Best{Int(0), 0};
    // Sets restricted to u, deduplicated (lightest, then lowest index wins).
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < s_.num_sets(); ++i) {
      Subset r = s_.set(i) & u;
      if (r.empty()) continue;
      bool dominated = false;
      for (auto& j : cand) {
        if ((s_.set(j) & u) == r) {
          if (w_[i] < w_[j]) j = i;
          dominated = true;
          break;
        }
      }
      if (!dominated) cand.push_back(i);
    }
    std::sort(cand.begin(), cand.end());
    const int half = u.size() / 2;
    std::optional<Best> best;
    auto offer = [&](const Int& weight, std::uint64_t chosen) {
      if (!best || weight < best->weight) best = Best{weight, chosen};
    };
    for (std::size_t i : cand) {
      Subset rest = u - s_.set(i);
      const std::uint64_t self = std::uint64_t{1} << i;
      if (rest.empty()) {
        offer(w_[i], self);
        continue;
      }
      if (rest.size() > 2 * half) continue;
      if (best && !(w_[i] < best->weight)) continue;
      const int low = rest.lowest();
      const std::uint64_t others = (rest - Subset::single(low)).bits();
      // U1 always holds the lowest element of rest: unordered bipartitions.
      std::uint64_t sub = others;
      while (true) {
        Subset u1 = Subset(sub) | Subset::single(low);
        Subset u2 = rest - u1;
        if (u1.size() <= half && u2.size() <= half) {
          auto c1 = solve(u1);
          if (c1 && (!best || w_[i] + c1->weight < best->weight)) {
            auto c2 = solve(u2);
            if (c2) {
              const std::uint64_t chosen = self | c1->chosen | c2->chosen;
              offer(weight_of(chosen), chosen);
            }
          }
        }
        if (sub == 0) break;
        sub = (sub - 1) & others;
      }
    }
    return best;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Int weight_of(std::uint64_t chosen) const {
    Int total = 0;
    for (; chosen != 0; chosen &= chosen - 1) total += w_[std::countr_zero(chosen)];
    return total;
  }

  const SetSystem& s_;
  const std::vector<Int>& w_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline CoverExact exact_setcover_dc(const SetSystem& s, const OracleLimits& limits = {}) {
  detail::check_limit("exact_setcover_dc", static_cast<std::size_t>(s.universe_size()), limits.setcover_dc_n);
  detail::check_limit("exact_setcover_dc (sets)", s.num_sets(), 64);
  detail::require_feasible(s);
  IntegerScale scale = IntegerScale::of(s.weights());
  CoverExact out;
  with_integer_weights(scale, [&](const auto& w) {
    using Int = std::decay_t<decltype(w[0])>;
    detail::DivideConquerCover<Int> dc(s, w);
    auto best = dc.solve(s.universe());
    if (!best) throw InternalError("divide and conquer found no cover of a feasible instance");
    out.witness = detail::cover_of_mask(best->chosen);
    out.value = scale.unscale(best->weight);
    out.nodes_explored = dc.nodes();
  });
  detail::validate_cover(s, out.witness, out.value, "exact_setcover_dc");
  return out;
}

// Maximum independent set by branching on a maximum-degree vertex; vertices
// of degree <= 1 in the remaining graph are taken greedily (always safe).
inline MisExact exact_mis(const Graph& g, const OracleLimits& limits = {}) {
  const int n = g.num_vertices();
  detail::check_limit("exact_mis", static_cast<std::size_t>(n), limits.mis_n);
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= std::uint32_t{1} << e.v;
    nbr[e.v] |= std::uint32_t{1} << e.u;
  }
  int best_size = -1;
  std::uint32_t best_set = 0;
  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, std::uint32_t cand, std::uint32_t chosen, int size) -> void {
    ++nodes;
    // Absorb degree <= 1 vertices.
    bool changed = true;
    while (changed && cand != 0) {
      changed = false;
      for (std::uint32_t c = cand; c != 0; c &= c - 1) {
        int v = std::countr_zero(c);
        if (std::popcount(nbr[v] & cand) <= 1) {
          chosen |= std::uint32_t{1} << v;
          ++size;
          cand &= ~(nbr[v] | (std::uint32_t{1} << v));
          changed = true;
          break;
        }
      }
    }
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best_set = chosen;
      }
      return;
    }
    if (size + std::popcount(cand) <= best_size) return;
    int pivot = -1, pivot_deg = -1;
    for (std::uint32_t c = cand; c != 0; c &= c - 1) {
      int v = std::countr_zero(c);
      int d = std::popcount(nbr[v] & cand);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    const std::uint32_t bit = std::uint32_t{1} << pivot;
    self(self, cand & ~(nbr[pivot] | bit), chosen | bit, size + 1);
    self(self, cand & ~bit, chosen, size);
  };
  const std::uint32_t all = n == 0 ? 0 : (n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1));
  search(search, all, 0, 0);
  MisExact out;
  out.value = best_size;
  for (int v = 0; v < n; ++v) {
    if (best_set >> v & 1) out.witness.push_back(v);
  }
  out.nodes_explored = nodes;
  if (!is_independent(g, out.witness) || static_cast<int>(out.witness.size()) != out.value) {
    throw InternalError("exact_mis produced an invalid witness");
  }
  return out;
}

// Chromatic number: for q = 1, 2, ... backtrack over vertices in index
// order, opening a new colour only as current max + 1.
inline ColoringExact exact_coloring(const Graph& g, const OracleLimits& limits = {}) {
  const int n = g.num_vertices();
  detail::check_limit("exact_coloring", static_cast<std::size_t>(n), limits.coloring_n);
  ColoringExact out;
  if (n == 0) {
    out.value = 0;
    return out;
  }
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, int v, int used, int q) -> bool {
    ++nodes;
    if (v == n) return used == q;
    // Not enough vertices left to open the missing colours.
    if (n - v < q - used) return false;
    for (int c = 1; c <= std::min(used + 1, q); ++c) {
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (u < v && color[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1, std::max(used, c), q)) return true;
    }
    color[v] = 0;
    return false;
  };
  for (int q = g.num_edges() == 0 ? 1 : 2; q <= n; ++q) {
    if (search(search, 0, 0, q)) {
      out.value = q;
      out.witness = Coloring{color, q};
      break;
    }
  }
  out.nodes_explored = nodes;
  if (!is_proper_coloring(g, out.witness) || out.witness.num_colors != out.value) {
    throw InternalError("exact_coloring produced an invalid witness");
  }
  return out;
}

namespace detail {

// Subset DP anchored at city 0 over integer weights. Returns the tour.
template <class Int>
std::vector<int> held_karp_tour(int n, const std::vector<Int>& w, std::uint64_t& nodes) {
  if (n == 1) return {0};
  const int k = n - 1;  // cities 1..n-1 are bits 0..k-1
  const std::size_t states = std::size_t{1} << k;
  std::vector<std::optional<Int>> dp(states * static_cast<std::size_t>(k));
  auto at = [&](std::size_t mask, int j) -> std::optional<Int>& { return dp[mask * k + j]; };
  auto arc = [&](int a, int b) -> const Int& { return w[static_cast<std::size_t>(a) * n + b]; };
  for (int j = 0; j < k; ++j) at(std::size_t{1} << j, j) = arc(0, j + 1);
  for (std::size_t mask = 1; mask < states; ++mask) {
    for (int j = 0; j < k; ++j) {
      if (!(mask >> j & 1) || !at(mask, j)) continue;
      ++nodes;
      const Int base = *at(mask, j);
      for (int t = 0; t < k; ++t) {
        if (mask >> t & 1) continue;
        Int cand = base + arc(j + 1, t + 1);
        auto& slot = at(mask | (std::size_t{1} << t), t);
        if (!slot || cand < *slot) slot = cand;
      }
    }
  }
  const std::size_t full = states - 1;
  int last = -1;
  std::optional<Int> best;
  for (int j = 0; j < k; ++j) {
    Int cand = *at(full, j) + arc(j + 1, 0);
    if (!best || cand < *best) {
      best = cand;
      last = j;
    }
  }
  // Walk back, choosing the lowest predecessor that explains each value.
  std::vector<int> reversed;
  std::size_t mask = full;
  int cur = last;
  while (true) {
    reversed.push_back(cur + 1);
    const std::size_t prev_mask = mask & ~(std::size_t{1} << cur);
    if (prev_mask == 0) break;
    int prev = -1;
    for (int j = 0; j < k; ++j) {
      if (!(prev_mask >> j & 1) || !at(prev_mask, j)) continue;
      if (*at(prev_mask, j) + arc(j + 1, cur + 1) == *at(mask, cur)) {
        prev = j;
        break;
      }
    }
    if (prev < 0) throw InternalError("held_karp backtracking failed");
    mask = prev_mask;
    cur = prev;
  }
  std::vector<int> tour{0};
  tour.insert(tour.end(), reversed.rbegin(), reversed.rend());
  return tour;
}

}  // namespace detail

inline TourExact held_karp(const TspInstance& t, const OracleLimits& limits = {}) {
  const int n = t.num_cities();
  detail::check_limit("held_karp", static_cast<std::size_t>(n), limits.held_karp_n);
  IntegerScale scale = IntegerScale::of(t.matrix());
  TourExact out;
  out.witness.order = with_integer_weights(scale, [&](const auto& w) {
    return detail::held_karp_tour(n, w, out.nodes_explored);
  });
  out.value = tour_weight(t, out.witness);
  if (!is_tour(t, out.witness)) throw InternalError("held_karp produced an invalid tour");
  return out;
}

}  // namespace expapx

#endif  // EXPAPX_ORACLES_HPP_
