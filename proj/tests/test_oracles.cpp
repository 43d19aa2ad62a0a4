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

#include <vector>

#include "expapx/generators.hpp"
#include "expapx/oracles.hpp"
#include "support/brute.hpp"
#include "support/graphs.hpp"

using namespace expapx;

namespace {

SetSystem three_sets() {
  return SetSystem(4, {Subset(0b0011), Subset(0b1100), Subset(0b1111)},
                   {Rational(1), Rational(1), Rational(3)});
}

}  // namespace

TEST(ExactBandwidth, SmallFamilies) {
  EXPECT_EQ(exact_bandwidth(testgraphs::path(4)).value, 1);
  EXPECT_EQ(exact_bandwidth(testgraphs::complete(5)).value, 4);
  EXPECT_EQ(exact_bandwidth(testgraphs::star(4)).value, 2);
  EXPECT_EQ(exact_bandwidth(testgraphs::cycle(6)).value, 2);
  EXPECT_EQ(exact_bandwidth(Graph(5)).value, 0);
  EXPECT_EQ(exact_bandwidth(Graph(0)).value, 0);
}

TEST(ExactBandwidth, MatchesPermutationEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    Graph g = gen_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed, seed % 3 != 0);
    auto r = exact_bandwidth(g);
    EXPECT_EQ(r.value, brute::bandwidth(g)) << "seed " << seed;
    EXPECT_EQ(bandwidth_of_ordering(g, r.witness), r.value);
  }
}

TEST(ExactBandwidth, SizeLimit) {
  EXPECT_THROW(exact_bandwidth(testgraphs::path(15)), SizeLimitError);
  OracleLimits wide;
  wide.bandwidth_n = 20;
  EXPECT_EQ(exact_bandwidth(testgraphs::path(15), wide).value, 1);
}

TEST(ExactSetCover, BruteForceExample) {
  auto r = exact_setcover_bruteforce(three_sets());
  EXPECT_EQ(r.value, Rational(2));
  EXPECT_EQ(r.witness.chosen, (std::vector<std::size_t>{0, 1}));
  SetSystem one(3, {Subset(0b111)}, {Rational(5)});
  EXPECT_EQ(exact_setcover_bruteforce(one).value, Rational(5));
  SetSystem missing(4, {Subset(0b0011), Subset(0b0010)}, {Rational(1), Rational(1)});
  EXPECT_THROW(exact_setcover_bruteforce(missing), InfeasibleError);
}

TEST(ExactSetCover, LexicographicTieBreak) {
  // Optimal covers of weight 2: {0,1}, {1,2} and {3}.
  SetSystem s(2, {Subset(0b01), Subset(0b10), Subset(0b01), Subset(0b11)},
              {Rational(1), Rational(1), Rational(1), Rational(2)});
  auto r = exact_setcover_bruteforce(s);
  EXPECT_EQ(r.witness.chosen, (std::vector<std::size_t>{0, 1}));
  auto all = all_optimal_covers(s);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].chosen, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(all[1].chosen, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(all[2].chosen, (std::vector<std::size_t>{3}));
}

TEST(ExactSetCover, InclusionExclusion) {
  SetSystem unit = SetSystem::unweighted(4, three_sets().sets());
  EXPECT_EQ(exact_setcover_ie(unit).value, Rational(1));
  SetSystem pair = SetSystem::unweighted(4, {Subset(0b0011), Subset(0b1100), Subset(0b0110)});
  EXPECT_EQ(exact_setcover_ie(pair).value, Rational(2));
  SetSystem whole = SetSystem::unweighted(3, {Subset(0b111)});
  EXPECT_EQ(exact_setcover_ie(whole).value, Rational(1));
  EXPECT_THROW(exact_setcover_ie(three_sets()), InvalidInstance);
  SetSystem empty_universe = SetSystem::unweighted(0, {Subset()});
  EXPECT_EQ(exact_setcover_ie(empty_universe).value, Rational(0));
}

TEST(ExactSetCover, InclusionExclusionAgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SetSystem s = gen_setsystem(10, 8, 0.3, 1, 1, seed);
    auto ie = exact_setcover_ie(s);
    EXPECT_EQ(ie.value, exact_setcover_bruteforce(s).value) << "seed " << seed;
    EXPECT_TRUE(is_feasible_cover(s, ie.witness));
  }
}

TEST(ExactSetCover, DivideAndConquer) {
  EXPECT_EQ(exact_setcover_dc(three_sets()).value, Rational(2));
  SetSystem empty_universe(0, {Subset()}, {Rational(3)});
  auto e = exact_setcover_dc(empty_universe);
  EXPECT_EQ(e.value, Rational(0));
  EXPECT_TRUE(e.witness.chosen.empty());
  SetSystem one(5, {Subset(0b11111)}, {Rational(2)});
  EXPECT_EQ(exact_setcover_dc(one).value, Rational(2));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SetSystem s = gen_setsystem(2 + static_cast<int>(seed % 7), 1 + static_cast<int>(seed % 6), 0.35, 1, 9, seed);
    auto dc = exact_setcover_dc(s);
    EXPECT_EQ(dc.value, *brute::setcover(s)) << "seed " << seed;
  }
}

TEST(ExactSetCover, DivideAndConquerFractionalWeights) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SetSystem base = gen_setsystem(9, 7, 0.3, 1, 7, seed);
    std::vector<Rational> w;
    for (std::size_t i = 0; i < base.num_sets(); ++i) w.push_back(base.weight(i) / Rational(static_cast<int>(i % 3) + 1));
    SetSystem s(base.universe_size(), base.sets(), w);
    EXPECT_EQ(exact_setcover_dc(s).value, *brute::setcover(s)) << "seed " << seed;
    EXPECT_EQ(exact_setcover_bruteforce(s).value, *brute::setcover(s));
  }
}

TEST(ExactMis, Families) {
  EXPECT_EQ(exact_mis(Graph(6)).value, 6);
  EXPECT_EQ(exact_mis(testgraphs::cycle(5)).value, 2);
  EXPECT_EQ(exact_mis(testgraphs::complete(7)).value, 1);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen_graph(4 + static_cast<int>(seed % 11), 0.35, seed, false);
    auto r = exact_mis(g);
    EXPECT_EQ(r.value, brute::independence_number(g)) << "seed " << seed;
    EXPECT_TRUE(is_independent(g, r.witness));
  }
}

TEST(ExactColoring, Families) {
  EXPECT_EQ(exact_coloring(testgraphs::complete(3)).value, 3);
  EXPECT_EQ(exact_coloring(testgraphs::cycle(6)).value, 2);
  EXPECT_EQ(exact_coloring(testgraphs::cycle(5)).value, 3);
  EXPECT_EQ(exact_coloring(Graph(4)).value, 1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_graph(3 + static_cast<int>(seed % 6), 0.5, seed, false);
    auto r = exact_coloring(g);
    EXPECT_EQ(r.value, brute::chromatic_number(g)) << "seed " << seed;
    EXPECT_TRUE(is_proper_coloring(g, r.witness));
  }
}

TEST(HeldKarp, Small) {
  TspInstance tri(3, {0, 1, 2, 2, 0, 1, 1, 2, 0});
  Rational forward = 1 + 1 + 1;   // 0->1->2->0
  Rational backward = 2 + 2 + 2;  // 0->2->1->0
  EXPECT_EQ(held_karp(tri).value, std::min(forward, backward));
  std::vector<Rational> ones(25, Rational(1));
  EXPECT_EQ(held_karp(TspInstance(5, ones)).value, Rational(5));
  EXPECT_EQ(held_karp(TspInstance(1, {Rational(0)})).value, Rational(0));
}

TEST(HeldKarp, MatchesFactorialEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TspInstance t = gen_semimetric(8, seed);
    auto r = held_karp(t);
    EXPECT_EQ(r.value, brute::tsp(t)) << "seed " << seed;
    EXPECT_TRUE(is_tour(t, r.witness));
    EXPECT_EQ(tour_weight(t, r.witness), r.value);
  }
}

TEST(Matching, Families) {
  EXPECT_EQ(max_matching(testgraphs::path(4)).size(), 2u);
  EXPECT_EQ(max_matching(testgraphs::cycle(5)).size(), 2u);
  EXPECT_EQ(max_matching(testgraphs::complete(3)).size(), 1u);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_graph(4 + static_cast<int>(seed % 9), 0.3, seed, false);
    auto m = max_matching(g);
    EXPECT_TRUE(is_matching(g, m));
    EXPECT_EQ(static_cast<int>(m.size()), brute::matching_size(g)) << "seed " << seed;
  }
}

TEST(CycleCover, Examples) {
  std::vector<Rational> ones(9, Rational(1));
  auto c3 = min_cycle_cover(TspInstance(3, ones));
  EXPECT_EQ(c3.weight, Rational(3));
  std::vector<Rational> w(16, Rational(10));
  auto set = [&](int a, int b) { w[a * 4 + b] = 1; };
  set(0, 1), set(1, 0), set(2, 3), set(3, 2);
  TspInstance two_pairs(4, w);
  auto c = min_cycle_cover(two_pairs);
  EXPECT_EQ(c.weight, Rational(4));
  EXPECT_EQ(c.cycles, (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(c.weight, brute::cycle_cover(two_pairs));
  EXPECT_THROW(min_cycle_cover(TspInstance(1, {Rational(0)})), InvalidInstance);
}

TEST(CycleCover, AssignmentOptimumAndTourBound) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    TspInstance t = gen_semimetric(3 + static_cast<int>(seed % 5), seed);
    auto c = min_cycle_cover(t);
    EXPECT_EQ(c.weight, brute::cycle_cover(t)) << "seed " << seed;
    EXPECT_LE(c.weight, held_karp(t).value);
    for (const auto& cycle : c.cycles) EXPECT_GE(cycle.size(), 2u);
  }
}
