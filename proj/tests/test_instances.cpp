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

#include <string>
#include <vector>

#include "expapx/generators.hpp"
#include "expapx/graph.hpp"
#include "expapx/io.hpp"
#include "expapx/rational.hpp"

using namespace expapx;

namespace {

std::string lines(std::initializer_list<const char*> parts) {
  std::string out;
  for (const char* p : parts) {
    out += p;
    out += '\n';
  }
  return out;
}

Rational q(const char* s) { return *parse_rational(s); }

}  // namespace

TEST(Rational, ParsesDecimalsAndFractions) {
  EXPECT_EQ(q("2.75"), Rational(11, 4));
  EXPECT_EQ(q("-3"), Rational(-3));
  EXPECT_EQ(q("8/3"), Rational(8, 3));
  EXPECT_EQ(q(".5"), Rational(1, 2));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational("1e3"));
}

TEST(Rational, PrintsExactly) {
  EXPECT_EQ(to_string(Rational(5, 2)), "2.5");
  EXPECT_EQ(to_string(Rational(1, 3)), "1/3");
  EXPECT_EQ(to_string(Rational(-1, 8)), "-0.125");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_EQ(to_string(Rational(1, 40)), "0.025");
}

TEST(Rational, HarmonicAndLogCeil) {
  EXPECT_EQ(harmonic(4), Rational(25, 12));
  EXPECT_EQ(harmonic(8) - harmonic(4), Rational(1, 5) + Rational(1, 6) + Rational(1, 7) + Rational(1, 8));
  EXPECT_EQ(ceil_times_log(Rational(2), Rational(2)), 2);   // 2 ln 2 = 1.386
  EXPECT_EQ(ceil_times_log(Rational(3), Rational(2)), 3);   // 3 ln 2 = 2.079
  EXPECT_EQ(ceil_times_log(Rational(1), Rational(1)), 0);
}

TEST(ParseGraph, PathAndCycle) {
  Graph p = parse_graph(lines({"p edge 3 2", "e 1 2", "e 2 3"}));
  EXPECT_EQ(p.num_vertices(), 3);
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  Graph c = parse_graph(lines({"p edge 4 4", "e 1 2", "e 2 3", "e 3 4", "e 4 1"}));
  EXPECT_EQ(c.num_edges(), 4u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(c.degree(v), 2);
  EXPECT_TRUE(c.adjacent(0, 3));
}

TEST(ParseGraph, RejectsSelfLoopWithLineNumber) {
  try {
    parse_graph(lines({"p edge 2 1", "e 1 1"}));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(ParseGraph, RejectsBadInput) {
  EXPECT_THROW(parse_graph("p edge x 1\n"), ParseError);
  EXPECT_THROW(parse_graph(lines({"p edge 3 1", "e 1 4"})), ParseError);
  EXPECT_THROW(parse_graph(lines({"p edge 3 2", "e 1 2", "e 2 1"})), ParseError);
  EXPECT_THROW(parse_graph(lines({"p edge 3 2", "e 1 2"})), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(ParseGraph, CommentsCrlfAndBom) {
  Graph g = parse_graph("\xEF\xBB\xBF" "c a comment\r\np edge 2 1\r\n\r\ne 2 1\r\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(ParseSetSystem, WeightedAndDefaults) {
  SetSystem s = parse_setsystem(lines({"p scp 4 3", "s 1.0 : 1 2", "s 1.0 : 3 4", "s 3.0 : 1 2 3 4"}));
  EXPECT_EQ(s.num_sets(), 3u);
  EXPECT_EQ(s.universe_size(), 4);
  EXPECT_EQ(s.weight(2), Rational(3));
  EXPECT_EQ(s.set(1), Subset(0b1100));
  SetSystem u = parse_setsystem(lines({"p scp 2 1", "s : 1 2"}));
  EXPECT_EQ(u.weight(0), Rational(1));
  SetSystem tight = parse_setsystem(lines({"p scp 2 1", "s 2:1 2"}));
  EXPECT_EQ(tight.weight(0), Rational(2));
}

TEST(ParseSetSystem, Errors) {
  EXPECT_THROW(parse_setsystem(lines({"p scp 2 1", "s -1 : 1"})), ParseError);
  EXPECT_THROW(parse_setsystem(lines({"p scp 2 1", "s 1 : 3"})), ParseError);
  EXPECT_THROW(parse_setsystem(lines({"p scp 2 0"})), ParseError);
  EXPECT_THROW(parse_setsystem(lines({"p scp 65 1", "s : 1"})), ParseError);
}

TEST(ParseTsp, EquilateralAndAsymmetric) {
  TspInstance t = parse_tsp(lines({"p atsp 3", "0 1 1", "1 0 1", "1 1 0"}));
  EXPECT_EQ(t.weight(2, 0), Rational(1));
  // w(0,1)=1, w(1,0)=2, everything else 2: all six triples hold.
  TspInstance a = parse_tsp(lines({"p atsp 3", "0 1 2", "2 0 2", "2 2 0"}));
  EXPECT_EQ(a.weight(1, 0), Rational(2));
  EXPECT_NE(a.weight(0, 1), a.weight(1, 0));
}

TEST(ParseTsp, TriangleWitness) {
  try {
    parse_tsp(lines({"p atsp 3", "0 1 10", "1 0 1", "10 1 0"}));
    FAIL() << "expected a triangle violation";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("(x,y,z) = (0,1,2)"), std::string::npos) << e.what();
  }
}

TEST(ParseTsp, DiagonalIgnored) {
  TspInstance t = parse_tsp(lines({"p atsp 2", "9 1", "1 7"}));
  EXPECT_EQ(t.weight(0, 0), Rational(0));
}

TEST(RoundTrip, CanonicalForms) {
  Graph g = gen_graph(9, 0.4, 3, true);
  EXPECT_EQ(serialize(parse_graph(serialize(g))), serialize(g));
  EXPECT_EQ(parse_graph(serialize(g)), g);
  SetSystem s = gen_setsystem(7, 5, 0.4, 1, 9, 11);
  EXPECT_EQ(parse_setsystem(serialize(s)), s);
  SetSystem frac(3, {Subset(0b011), Subset(0b110)}, {Rational(1, 3), Rational(5, 2)});
  EXPECT_EQ(parse_setsystem(serialize(frac)), frac);
  TspInstance t = gen_semimetric(6, 4);
  EXPECT_EQ(parse_tsp(serialize(t)), t);
  EXPECT_EQ(serialize(parse_tsp(serialize(t))), serialize(t));
}

TEST(Generators, GraphExtremes) {
  EXPECT_EQ(gen_graph(5, 0.0, 1, false).num_edges(), 0u);
  EXPECT_EQ(gen_graph(5, 1.0, 1, false).num_edges(), 10u);
  Graph a = gen_graph(6, 0.3, 42, true);
  Graph b = gen_graph(6, 0.3, 42, true);
  EXPECT_TRUE(is_connected(a));
  EXPECT_EQ(a, b);
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_TRUE(is_connected(gen_graph(10, 0.0, seed, true)));
  EXPECT_EQ(gen_graph(10, 0.0, 5, true).num_edges(), 9u);
}

TEST(Generators, SetSystems) {
  SetSystem full = gen_setsystem(4, 2, 1.0, 1, 1, 0);
  EXPECT_EQ(full.set(0), Subset::full(4));
  EXPECT_EQ(full.set(1), Subset::full(4));
  EXPECT_EQ(full.weight(0), Rational(1));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(gen_setsystem(10, 4, 0.1, 1, 5, seed).feasible());
  }
  EXPECT_EQ(gen_setsystem(8, 5, 0.4, 1, 9, 7), gen_setsystem(8, 5, 0.4, 1, 9, 7));
}

TEST(Generators, SemiMetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TspInstance t = gen_semimetric(7, seed);
    EXPECT_FALSE(find_triangle_violation(7, t.matrix()));
    EXPECT_NO_THROW(parse_tsp(serialize(t)));
  }
  EXPECT_EQ(gen_semimetric(3, 5), gen_semimetric(3, 5));
  EXPECT_THROW(gen_semimetric(2, 1), InvalidInstance);
}

TEST(Generators, ShortestPathClosure) {
  const Rational big = 100;
  std::vector<Rational> w = {0, 1, 5, big, 0, 1, big, big, 0};
  auto c = shortest_path_closure(3, w);
  EXPECT_EQ(c[0 * 3 + 2], Rational(2));
  EXPECT_EQ(c[2 * 3 + 0], big);
}

TEST(Graph, Invariants) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidInstance);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidInstance);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidInstance);
  Graph g(4, {{2, 1}, {0, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  std::vector<int> sub = {2, 1};
  Graph h = g.induced(sub);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(connected_components(g).size(), 2u);
}

TEST(Ordering, BandwidthOfOrdering) {
  Graph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(bandwidth_of_ordering(p3, Ordering::identity(3)), 1);
  // a, c, b: the middle vertex goes last; |1-3| = 2.
  std::vector<int> acb = {0, 2, 1};
  EXPECT_EQ(bandwidth_of_ordering(p3, Ordering::from_sequence(acb)), 2);
  Graph edgeless(4);
  EXPECT_EQ(bandwidth_of_ordering(edgeless, Ordering::identity(4)), 0);
  std::vector<int> bad = {0, 0, 1};
  EXPECT_THROW(Ordering::from_sequence(bad), ContractViolation);
}

TEST(Coloring, ProperAndUsesEveryColor) {
  Graph p3(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_proper_coloring(p3, Coloring{{1, 2, 1}, 2}));
  EXPECT_FALSE(is_proper_coloring(p3, Coloring{{1, 1, 2}, 2}));
  EXPECT_FALSE(is_proper_coloring(p3, Coloring{{1, 2, 1}, 3}));
}
