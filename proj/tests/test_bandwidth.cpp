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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "expapx/bandwidth.hpp"
#include "expapx/generators.hpp"
#include "expapx/oracles.hpp"
#include "support/brute.hpp"
#include "support/graphs.hpp"

using namespace expapx;

namespace {

Graph random_connected(std::uint64_t seed, int lo, int hi) {
  const int n = lo + static_cast<int>(seed % static_cast<std::uint64_t>(hi - lo + 1));
  return gen_graph(n, 0.15 + 0.05 * static_cast<double>(seed % 7), seed, true);
}

}  // namespace

TEST(Schedule, SmallCases) {
  auto f = schedule_feasible({{1, 2}, {1, 2}, {3, 3}});
  ASSERT_TRUE(f);
  EXPECT_EQ(f->positions(), (std::vector<int>{1, 2, 3}));
  EXPECT_FALSE(schedule_feasible({{1, 1}, {1, 1}}));
  EXPECT_FALSE(schedule_feasible({{2, 2}, {2, 2}}));
  EXPECT_TRUE(schedule_feasible({}));
}

TEST(Schedule, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    IntervalAssignment a;
    std::vector<std::pair<int, int>> raw;
    for (int v = 0; v < 7; ++v) {
      int x = static_cast<int>(rng() % 7) + 1, y = static_cast<int>(rng() % 7) + 1;
      if (x > y) std::swap(x, y);
      a.push_back({x, y});
      raw.push_back({x, y});
    }
    auto f = schedule_feasible(a);
    EXPECT_EQ(f.has_value(), brute::schedulable(raw)) << "trial " << trial;
    if (f) {
      EXPECT_TRUE(f->is_permutation());
      for (int v = 0; v < 7; ++v) EXPECT_TRUE(a[v].contains(f->position(v)));
    }
  }
}

TEST(Tighten, TwoVertexPath) {
  Graph p2 = testgraphs::path(2);
  auto f = tighten_and_order(p2, {{1, 2}, {1, 2}}, 1);
  ASSERT_TRUE(f);
  EXPECT_EQ(bandwidth_of_ordering(p2, *f), 1);
}

TEST(Tighten, UniqueConsistentOrderingSurvives) {
  Graph p4 = testgraphs::path(4);
  IntervalAssignment a = {{3, 3}, {1, 1}, {4, 4}, {2, 2}};
  // 1,3,0,2 is not a bandwidth-1 layout, so tightening empties something.
  EXPECT_FALSE(tighten_and_order(p4, a, 1));
  IntervalAssignment b = {{4, 4}, {3, 3}, {2, 2}, {1, 1}};
  auto f = tighten_and_order(p4, b, 1);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->positions(), (std::vector<int>{4, 3, 2, 1}));
}

// Intervals of width <= s around an optimal layout: the result must exist
// and stay within s + bw.
TEST(Tighten, StretchBoundAroundOptimalLayouts) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_connected(seed, 3, 10);
    const int n = g.num_vertices();
    auto opt = exact_bandwidth(g);
    const int s = 1 + static_cast<int>(rng() % 4);
    IntervalAssignment a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int p = opt.witness.position(v);
      const int left = static_cast<int>(rng() % static_cast<std::uint64_t>(s));
      a[v] = cut(Interval{p - left, p - left + s - 1}, n);
    }
    auto f = tighten_and_order(g, a, opt.value);
    ASSERT_TRUE(f) << "seed " << seed;
    EXPECT_LE(bandwidth_of_ordering(g, *f), s + opt.value) << "seed " << seed;
  }
}

TEST(Warmup, PathIsOptimal) {
  auto r = approx_bandwidth_warmup(testgraphs::path(6), 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->achieved, 1);
  EXPECT_EQ(r->guarantee, 2);
}

TEST(Warmup, WithinTwiceOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_connected(seed, 2, 9);
    const int bw = exact_bandwidth(g).value;
    auto r = approx_bandwidth_warmup(g, bw);
    ASSERT_TRUE(r) << "seed " << seed;
    EXPECT_LE(r->achieved, 2 * bw - 1) << "seed " << seed;
    EXPECT_EQ(r->achieved, bandwidth_of_ordering(g, r->ordering));
    EXPECT_LE(r->assignments, detail::node_budget(g.num_vertices(), 3, 1));
  }
  EXPECT_THROW(approx_bandwidth_warmup(Graph(3), 1), InvalidInstance);
}

TEST(Algorithm3Approx, CycleAndBounds) {
  Graph c6 = testgraphs::cycle(6);
  auto r = approx_bandwidth_3(c6, 2);
  ASSERT_TRUE(r);
  EXPECT_LE(r->achieved, 6);
  EXPECT_LE(r->nodes, detail::node_budget(6, 2, 3));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_connected(seed, 2, 9);
    const int bw = exact_bandwidth(g).value;
    auto a = approx_bandwidth_3(g, bw);
    ASSERT_TRUE(a) << "seed " << seed;
    EXPECT_LE(a->achieved, 3 * bw) << "seed " << seed;
  }
}

TEST(Scheme, SpecializesToAlgorithm3) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = random_connected(seed, 2, 10);
    const int b = 1 + static_cast<int>(seed % 3);
    auto x = approx_bandwidth_3(g, b);
    auto y = approx_bandwidth_scheme(g, b, 1);
    ASSERT_EQ(x.has_value(), y.has_value()) << "seed " << seed;
    if (x) {
      EXPECT_EQ(x->achieved, y->achieved) << "seed " << seed;
      EXPECT_EQ(x->ordering, y->ordering);
    }
  }
}

TEST(Scheme, RadiusTwoBound) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = random_connected(seed, 2, 10);
    const int bw = exact_bandwidth(g).value;
    for (int b = bw; b <= bw + 1; ++b) {
      auto r = approx_bandwidth_scheme(g, b, 2);
      ASSERT_TRUE(r) << "seed " << seed << " b " << b;
      EXPECT_LE(r->achieved, 7 * b);
      EXPECT_LE(r->branching_nodes * 2, g.num_vertices());
    }
  }
}

TEST(Scheme, BranchingProfile) {
  // Path rooted at 0: depths 0..5.
  auto t = bfs_tree(testgraphs::path(6));
  EXPECT_EQ(t.depth, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  auto prof = branching_profile(t, 2);
  // i=2: even depths (3 nodes); i=3: odd depths (3 nodes).
  EXPECT_EQ(prof, (std::vector<int>{3, 3}));
  auto prof3 = branching_profile(bfs_tree(testgraphs::star(5)), 3);
  // Depth 0 once, depth 1 five times. i=3 hits depth 0; i=5 hits depth 1; i=4 nothing.
  EXPECT_EQ(prof3, (std::vector<int>{1, 0, 5}));
}

TEST(Search, Examples) {
  auto p8 = approx_bandwidth(testgraphs::path(8), 1);
  EXPECT_LE(p8.achieved, 3);
  for (int r = 1; r <= 3; ++r) EXPECT_EQ(approx_bandwidth(testgraphs::complete(6), r).achieved, 5);
  EXPECT_EQ(approx_bandwidth(Graph(1), 1).achieved, 0);
}

TEST(Search, WithinGuaranteeAndLinearAgrees) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_connected(seed, 2, 10);
    const int bw = exact_bandwidth(g).value;
    for (int r = 1; r <= 2; ++r) {
      auto bin = approx_bandwidth(g, r);
      auto lin = approx_bandwidth(g, r, {.linear = true});
      EXPECT_LE(bin.achieved, (4 * r - 1) * bw) << "seed " << seed;
      EXPECT_LE(lin.achieved, (4 * r - 1) * bw) << "seed " << seed;
      EXPECT_LE(bin.b_used, bw);
      EXPECT_LE(lin.b_used, bw);
    }
  }
}

TEST(Reduction, FourCycle) {
  Graph c4 = testgraphs::cycle(4);
  auto red = bandwidth_reduce(c4);
  ASSERT_FALSE(red.paths_only);
  EXPECT_EQ(red.reduced, testgraphs::complete(2));
  Ordering merged = bandwidth_merge(red, Ordering::identity(2));
  EXPECT_TRUE(merged.is_permutation());
  EXPECT_LE(bandwidth_of_ordering(c4, merged), 9 * 2 - 1);
  EXPECT_GE(bandwidth_of_ordering(c4, merged), 2);
}

TEST(Reduction, PathsAndIsolatedVertices) {
  Graph g(7, {{0, 1}, {1, 2}, {4, 5}});
  auto red = bandwidth_reduce(g);
  EXPECT_TRUE(red.paths_only);
  EXPECT_EQ(red.reduced.num_vertices(), 0);
  Ordering f = bandwidth_merge(red, Ordering::identity(0));
  EXPECT_EQ(bandwidth_of_ordering(g, f), 1);
  EXPECT_EQ(f.position(3), 6);
  EXPECT_EQ(f.position(6), 7);
}

TEST(Reduction, TriangleCase) {
  // Triangle 0-1-2 with matched edge 0-1 and unmatched 2: both ends of the
  // matched edge touch 2, so one folds into the other.
  Graph k3 = testgraphs::complete(3);
  auto red = bandwidth_reduce(k3);
  ASSERT_FALSE(red.paths_only);
  int stays = 0;
  for (int v = 0; v < 3; ++v) stays += red.rho[v] == v;
  EXPECT_EQ(stays, 1);
  EXPECT_EQ(red.reduced.num_vertices(), 1);
  EXPECT_EQ(bandwidth_of_ordering(k3, bandwidth_merge(red, Ordering::identity(1))), 2);
}

TEST(Reduction, ExactInnerWithinNineTimes) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = random_connected(seed, 2, 12);
    auto red = bandwidth_reduce(g);
    const int bw = exact_bandwidth(g).value;
    Ordering inner = red.paths_only ? Ordering::identity(0) : exact_bandwidth(red.reduced).witness;
    Ordering merged = bandwidth_merge(red, inner);
    ASSERT_TRUE(merged.is_permutation());
    EXPECT_LE(bandwidth_of_ordering(g, merged), 9 * bw) << "seed " << seed;
    if (!red.paths_only) {
      const int core = g.num_vertices();
      EXPECT_LE(red.reduced.num_vertices(), (core + 1) / 2) << "seed " << seed;
    }
  }
}

TEST(Reduction, MergeIsPermutationForAnyOrdering) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_graph(4 + static_cast<int>(seed % 12), 0.3, seed, seed % 2 == 0);
    auto red = bandwidth_reduce(g);
    const int k = red.reduced.num_vertices();
    std::vector<int> seq(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) seq[i] = i;
    std::shuffle(seq.begin(), seq.end(), rng);
    Ordering merged = bandwidth_merge(red, Ordering::from_sequence(seq));
    EXPECT_TRUE(merged.is_permutation());
    EXPECT_EQ(merged.size(), g.num_vertices());
  }
  auto red = bandwidth_reduce(testgraphs::cycle(4));
  EXPECT_THROW(bandwidth_merge(red, Ordering::identity(3)), ContractViolation);
}
