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

// Deliberately naive reference solvers for tests. Nothing here shares code
// with the library's search routines beyond the data types.

#ifndef EXPAPX_TESTS_SUPPORT_BRUTE_HPP_
#define EXPAPX_TESTS_SUPPORT_BRUTE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "expapx/graph.hpp"
#include "expapx/rational.hpp"
#include "expapx/setsystem.hpp"
#include "expapx/tsp.hpp"

namespace brute {

using expapx::Edge;
using expapx::Graph;
using expapx::Rational;

inline int stretch(const Graph& g, const std::vector<int>& pos) {
  int best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, std::abs(pos[e.u] - pos[e.v]));
  return best;
}

// Minimum over all n! orderings.
inline int bandwidth(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[perm[i]] = i + 1;
    best = std::min(best, stretch(g, pos));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

// Does any permutation f satisfy lo[v] <= f(v) <= hi[v] for all v?
inline bool schedulable(const std::vector<std::pair<int, int>>& intervals) {
  const int n = static_cast<int>(intervals.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int pos = 1; pos <= n && ok; ++pos) {
      const auto& iv = intervals[perm[pos - 1]];
      ok = iv.first <= pos && pos <= iv.second;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Minimum tour weight over all (n-1)! tours starting at 0.
inline Rational tsp(const expapx::TspInstance& t) {
  const int n = t.num_cities();
  if (n < 2) return 0;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::optional<Rational> best;
  do {
    Rational w = t.weight(0, rest.front()) + t.weight(rest.back(), 0);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) w += t.weight(rest[i], rest[i + 1]);
    if (!best || w < *best) best = w;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return *best;
}

// Minimum over all derangements (successor maps without fixed points).
inline Rational cycle_cover(const expapx::TspInstance& t) {
  const int n = t.num_cities();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Rational> best;
  do {
    bool derangement = true;
    for (int i = 0; i < n; ++i) derangement = derangement && perm[i] != i;
    if (!derangement) continue;
    Rational w = 0;
    for (int i = 0; i < n; ++i) w += t.weight(i, perm[i]);
    if (!best || w < *best) best = w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

// Largest matching by enumerating edge subsets (small m only).
inline int matching_size(const Graph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  int best = 0;
  // Recursive include/exclude with vertex-used mask.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used, int size) -> void {
    best = std::max(best, size);
    if (i == m) return;
    if (size + static_cast<int>(m - i) <= best) return;
    const Edge& e = edges[i];
    const std::uint64_t bits = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if ((used & bits) == 0) self(self, i + 1, used | bits, size + 1);
    self(self, i + 1, used, size);
  };
  rec(rec, 0, 0, 0);
  return best;
}

inline int independence_number(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Smallest q admitting a proper q-coloring, by trying every colour vector.
inline int chromatic_number(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  for (int q = 1; q <= n; ++q) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
      bool ok = true;
      for (const Edge& e : g.edges()) ok = ok && c[e.u] != c[e.v];
      if (ok) return q;
      int i = 0;
      while (i < n && ++c[i] == q) c[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Minimum cover weight by plain subset enumeration, no tricks.
inline std::optional<Rational> setcover(const expapx::SetSystem& s) {
  const std::size_t m = s.num_sets();
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    expapx::Subset u;
    Rational w = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        u |= s.set(i);
        w += s.weight(i);
      }
    }
    if (u == s.universe() && (!best || w < *best)) best = w;
  }
  return best;
}

}  // namespace brute

#endif  // EXPAPX_TESTS_SUPPORT_BRUTE_HPP_
