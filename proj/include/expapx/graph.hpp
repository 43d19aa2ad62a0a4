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

#ifndef EXPAPX_GRAPH_HPP_
#define EXPAPX_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expapx/error.hpp"

namespace expapx {

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Undirected simple graph on vertices 0..n-1. Edges are kept sorted with
// u < v; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InvalidInstance("negative vertex count");
  }

  Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (Edge& e : edges) {
      if (e.u == e.v) throw InvalidInstance("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw InvalidInstance("edge endpoint out of range");
      }
      e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw InvalidInstance("duplicate edge");
    }
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  // Builds from arbitrary pairs, dropping loops and duplicates.
  static Graph from_pairs(int n, std::span<const Edge> pairs) {
    std::vector<Edge> edges;
    for (const Edge& e : pairs) {
      if (e.u != e.v) edges.push_back(make_edge(e.u, e.v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool adjacent(int u, int v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  // Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const {
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> out;
    for (const Edge& e : edges_) {
      if (local[e.u] >= 0 && local[e.v] >= 0) out.push_back(make_edge(local[e.u], local[e.v]));
    }
    return Graph(static_cast<int>(vertices.size()), std::move(out));
  }

  // Bitmask of neighbors; valid only when n <= 64.
  std::uint64_t neighbor_mask(int v) const {
    std::uint64_t m = 0;
    for (int w : adjacency_[v]) m |= std::uint64_t{1} << w;
    return m;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : g.neighbors(members[head])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

inline bool is_independent(const Graph& g, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.num_vertices() || in[v]) return false;
    in[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) return false;
  }
  return true;
}

inline bool is_dominating(const Graph& g, std::span<const int> vertices) {
  std::vector<char> dominated(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.num_vertices()) return false;
    dominated[v] = 1;
    for (int w : g.neighbors(v)) dominated[w] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

inline bool is_matching(const Graph& g, std::span<const Edge> matching) {
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : matching) {
    if (e.u == e.v || !g.adjacent(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

// Bijection from vertices to positions 1..n.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<int> positions) : positions_(std::move(positions)) {}

  // From the sequence s(f) = f^{-1}(1), ..., f^{-1}(n).
  static Ordering from_sequence(std::span<const int> sequence) {
    std::vector<int> pos(sequence.size(), 0);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      int v = sequence[i];
      if (v < 0 || static_cast<std::size_t>(v) >= sequence.size() || pos[v] != 0) {
        throw ContractViolation("sequence is not a permutation");
      }
      pos[v] = static_cast<int>(i) + 1;
    }
    return Ordering(std::move(pos));
  }

  static Ordering identity(int n) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pos[v] = v + 1;
    return Ordering(std::move(pos));
  }

  int size() const { return static_cast<int>(positions_.size()); }
  int position(int v) const { return positions_[v]; }
  const std::vector<int>& positions() const { return positions_; }

  bool is_permutation() const {
    std::vector<char> seen(positions_.size() + 1, 0);
    for (int p : positions_) {
      if (p < 1 || p > size() || seen[p]) return false;
      seen[p] = 1;
    }
    return true;
  }

  std::vector<int> sequence() const {
    std::vector<int> seq(positions_.size());
    for (std::size_t v = 0; v < positions_.size(); ++v) seq[positions_[v] - 1] = static_cast<int>(v);
    return seq;
  }

  bool operator==(const Ordering&) const = default;

 private:
  std::vector<int> positions_;
};

// Maximum edge stretch of an ordering; 0 for edgeless graphs.
inline int bandwidth_of_ordering(const Graph& g, const Ordering& f) {
  if (f.size() != g.num_vertices() || !f.is_permutation()) {
    throw ContractViolation("ordering is not a permutation of the graph's vertices");
  }
  int width = 0;
  for (const Edge& e : g.edges()) {
    width = std::max(width, std::abs(f.position(e.u) - f.position(e.v)));
  }
  return width;
}

// Proper vertex coloring with colors 1..q, each used at least once.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.num_vertices()) return false;
  std::vector<char> used(static_cast<std::size_t>(c.num_colors) + 1, 0);
  for (int col : c.color) {
    if (col < 1 || col > c.num_colors) return false;
    used[col] = 1;
  }
  for (int q = 1; q <= c.num_colors; ++q) {
    if (!used[q]) return false;
  }
  for (const Edge& e : g.edges()) {
    if (c.color[e.u] == c.color[e.v]) return false;
  }
  return true;
}

}  // namespace expapx

#endif  // EXPAPX_GRAPH_HPP_
