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

#ifndef EXPAPX_TESTS_SUPPORT_GRAPHS_HPP_
#define EXPAPX_TESTS_SUPPORT_GRAPHS_HPP_

#include <vector>

#include "expapx/graph.hpp"

namespace testgraphs {

using expapx::Edge;
using expapx::Graph;

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  e.push_back({0, n - 1});
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph(n, e);
}

// K_{1,leaves}, centre 0.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph(leaves + 1, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  }
  return Graph(a + b, e);
}

}  // namespace testgraphs

#endif  // EXPAPX_TESTS_SUPPORT_GRAPHS_HPP_
