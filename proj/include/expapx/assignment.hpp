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

#ifndef EXPAPX_ASSIGNMENT_HPP_
#define EXPAPX_ASSIGNMENT_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "expapx/error.hpp"
#include "expapx/rational.hpp"
#include "expapx/tsp.hpp"

namespace expapx {

// Minimum-cost perfect assignment rows -> columns by the Hungarian method
// with potentials, O(n^3). `cost` is row-major n x n; `forbidden` cells may
// never be used. Returns column of each row.
template <class Int>
std::vector<int> hungarian_assignment(int n, const std::vector<Int>& cost,
                                      const std::vector<char>& forbidden) {
  Int total = 0;
  for (const Int& c : cost) total += c < 0 ? Int(-c) : c;
  const Int inf = total * 4 + 4;
  auto at = [&](int i, int j) -> Int {
    const std::size_t k = static_cast<std::size_t>(i) * n + j;
    return forbidden[k] ? Int(total + 1) : cost[k];
  };
  // 1-based rows/columns; column 0 is a virtual start.
  std::vector<Int> u(static_cast<std::size_t>(n) + 1, 0), v(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Int> minv(static_cast<std::size_t>(n) + 1, inf);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      Int delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Int cur = at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> column_of(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) column_of[p[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i) {
    if (forbidden[static_cast<std::size_t>(i) * n + column_of[i]]) {
      throw InternalError("assignment used a forbidden cell");
    }
  }
  return column_of;
}

struct CycleCover {
  // Each cycle lists cities in visiting order starting at its smallest city;
  // cycles are ordered by that city.
  std::vector<std::vector<int>> cycles;
  Rational weight = 0;
};

inline CycleCover cycles_of_successor(const TspInstance& t, const std::vector<int>& next) {
  const int n = t.num_cities();
  CycleCover out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    for (int v = s; !seen[v]; v = next[v]) {
      seen[v] = 1;
      cycle.push_back(v);
      out.weight += t.weight(v, next[v]);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

// Minimum-weight vertex-disjoint directed cycle cover with every cycle of
// length >= 2: an assignment from out-copies to in-copies with the diagonal
// forbidden.
inline CycleCover min_cycle_cover(const TspInstance& t) {
  const int n = t.num_cities();
  if (n < 2) throw InvalidInstance("cycle cover needs at least two cities");
  IntegerScale scale = IntegerScale::of(t.matrix());
  std::vector<char> forbidden(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) forbidden[static_cast<std::size_t>(i) * n + i] = 1;
  std::vector<int> next = with_integer_weights(scale, [&](const auto& ints) {
    return hungarian_assignment(n, ints, forbidden);
  });
  return cycles_of_successor(t, next);
}

}  // namespace expapx

#endif  // EXPAPX_ASSIGNMENT_HPP_
