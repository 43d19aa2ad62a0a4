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

// Seeded instance generators. Outputs are pure functions of the arguments:
// std::mt19937_64 is fully specified by the standard, and the distributions
// below are written out instead of using the implementation-defined
// <random> distributions.

#ifndef EXPAPX_GENERATORS_HPP_
#define EXPAPX_GENERATORS_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "expapx/error.hpp"
#include "expapx/graph.hpp"
#include "expapx/rational.hpp"
#include "expapx/setsystem.hpp"
#include "expapx/tsp.hpp"

namespace expapx {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

  // Uniform in [lo, hi] by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Uniformly random labeled tree via a random Pruefer sequence.
inline std::vector<Edge> random_spanning_tree(int n, SeededRng& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {Edge{0, 1}};
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(rng.uniform(0, n - 1));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(make_edge(leaf, c));
    if (--degree[c] == 1) leaves.insert(c);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.push_back(make_edge(a, b));
  return edges;
}

// Erdos-Renyi G(n, p); with `connected`, a uniform random spanning tree is
// drawn first and the remaining pairs are sampled on top of it.
inline Graph gen_graph(int n, double p, std::uint64_t seed, bool connected) {
  if (n < 0) throw InvalidInstance("vertex count must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInstance("edge probability must lie in [0, 1]");
  SeededRng rng(seed);
  std::vector<Edge> edges;
  std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  if (connected) {
    for (const Edge& e : random_spanning_tree(n, rng)) {
      edges.push_back(e);
      present[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool draw = rng.bernoulli(p);
      if (draw && !present[static_cast<std::size_t>(u) * n + v]) edges.push_back(Edge{u, v});
    }
  }
  return Graph(n, std::move(edges));
}

// Each element joins each set independently with probability `density`;
// elements left uncovered are appended to a random set. Integer weights are
// uniform in [min_weight, max_weight].
inline SetSystem gen_setsystem(int n, int m, double density, std::int64_t min_weight,
                               std::int64_t max_weight, std::uint64_t seed) {
  if (n < 0 || n > kMaxUniverse) throw InvalidInstance("universe size out of range");
  if (m < 1) throw InvalidInstance("need at least one set");
  if (!(density > 0.0 && density <= 1.0)) throw InvalidInstance("density must lie in (0, 1]");
  if (min_weight < 0 || max_weight < min_weight) throw InvalidInstance("bad weight range");
  SeededRng rng(seed);
  std::vector<Subset> sets(static_cast<std::size_t>(m));
  for (auto& s : sets) {
    for (int e = 0; e < n; ++e) {
      if (rng.bernoulli(density)) s.insert(e);
    }
  }
  Subset covered;
  for (Subset s : sets) covered |= s;
  for (int e = 0; e < n; ++e) {
    if (!covered.contains(e)) sets[static_cast<std::size_t>(rng.uniform(0, m - 1))].insert(e);
  }
  std::vector<Rational> weights;
  for (int i = 0; i < m; ++i) weights.emplace_back(rng.uniform(min_weight, max_weight));
  return SetSystem(n, std::move(sets), std::move(weights));
}

// Floyd-Warshall closure of a row-major n x n matrix (diagonal ignored).
inline std::vector<Rational> shortest_path_closure(int n, std::vector<Rational> w) {
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) * n + i] = 0;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational via = w[static_cast<std::size_t>(i) * n + k] + w[static_cast<std::size_t>(k) * n + j];
        if (via < w[static_cast<std::size_t>(i) * n + j]) w[static_cast<std::size_t>(i) * n + j] = via;
      }
    }
  }
  return w;
}

// Arbitrary positive integer arcs in [1, max_weight], then metric closure.
inline TspInstance gen_semimetric(int n, std::uint64_t seed, std::int64_t max_weight = 100) {
  if (n < 3) throw InvalidInstance("semi-metric generator needs n >= 3");
  SeededRng rng(seed);
  std::vector<Rational> w(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) w[static_cast<std::size_t>(i) * n + j] = Rational(rng.uniform(1, max_weight));
    }
  }
  return TspInstance(n, shortest_path_closure(n, std::move(w)));
}

}  // namespace expapx

#endif  // EXPAPX_GENERATORS_HPP_
