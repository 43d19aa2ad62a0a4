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

#ifndef EXPAPX_MATCHING_HPP_
#define EXPAPX_MATCHING_HPP_

#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "expapx/error.hpp"
#include "expapx/graph.hpp"

namespace expapx {

// Maximum-cardinality matching (Edmonds' blossom algorithm). Edges are
// returned with u < v, sorted.
inline std::vector<Edge> max_matching(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int n = g.num_vertices();
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(static_cast<std::size_t>(n));
  if (!boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0])) {
    throw InternalError("matching verifier rejected the blossom result");
  }
  const auto null = boost::graph_traits<BoostGraph>::null_vertex();
  std::vector<Edge> out;
  for (int v = 0; v < n; ++v) {
    if (mate[v] != null && static_cast<int>(mate[v]) > v) {
      out.push_back(Edge{v, static_cast<int>(mate[v])});
    }
  }
  return out;
}

}  // namespace expapx

#endif  // EXPAPX_MATCHING_HPP_
