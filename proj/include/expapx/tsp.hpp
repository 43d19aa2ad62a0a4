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

#ifndef EXPAPX_TSP_HPP_
#define EXPAPX_TSP_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expapx/error.hpp"
#include "expapx/rational.hpp"

namespace expapx {

struct TriangleWitness {
  int x, y, z;  // w(x,z) > w(x,y) + w(y,z)
};

// First violating ordered triple (x, y, z) in lexicographic order.
inline std::optional<TriangleWitness> find_triangle_violation(int n,
                                                              std::span<const Rational> w) {
  auto at = [&](int a, int b) -> const Rational& { return w[static_cast<std::size_t>(a) * n + b]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (at(x, z) > at(x, y) + at(y, z)) return TriangleWitness{x, y, z};
      }
    }
  }
  return std::nullopt;
}

// Complete directed instance with a semi-metric weight matrix. The diagonal
// is ignored and stored as 0.
class TspInstance {
 public:
  TspInstance() = default;
  TspInstance(int n, std::vector<Rational> weights) : n_(n), w_(std::move(weights)) {
    if (n < 1) throw InvalidInstance("TSP instance needs at least one city");
    if (w_.size() != static_cast<std::size_t>(n) * n) {
      throw InvalidInstance("weight matrix must be n x n");
    }
    for (int i = 0; i < n; ++i) w_[static_cast<std::size_t>(i) * n + i] = 0;
    for (const Rational& x : w_) {
      if (x < 0) throw InvalidInstance("negative arc weight");
    }
    if (auto bad = find_triangle_violation(n, w_)) {
      throw InvalidInstance("triangle inequality violated at (x,y,z) = (" +
                            std::to_string(bad->x) + "," + std::to_string(bad->y) + "," +
                            std::to_string(bad->z) + ")");
    }
  }

  int num_cities() const { return n_; }
  const Rational& weight(int from, int to) const {
    return w_[static_cast<std::size_t>(from) * n_ + to];
  }
  const std::vector<Rational>& matrix() const { return w_; }

  // Sub-matrix on `cities`; city i of the result is cities[i]. The triangle
  // inequality is inherited.
  TspInstance induced(std::span<const int> cities) const {
    const int k = static_cast<int>(cities.size());
    std::vector<Rational> sub(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) sub[static_cast<std::size_t>(a) * k + b] = weight(cities[a], cities[b]);
    }
    TspInstance out;
    out.n_ = k;
    out.w_ = std::move(sub);
    return out;
  }

  bool operator==(const TspInstance&) const = default;

 private:
  int n_ = 0;
  std::vector<Rational> w_;
};

// Cyclic visiting order; each city exactly once.
struct Tour {
  std::vector<int> order;
};

inline bool is_tour(const TspInstance& t, const Tour& tour) {
  if (static_cast<int>(tour.order.size()) != t.num_cities()) return false;
  std::vector<char> seen(tour.order.size(), 0);
  for (int c : tour.order) {
    if (c < 0 || c >= t.num_cities() || seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

inline Rational tour_weight(const TspInstance& t, const Tour& tour) {
  Rational total = 0;
  const std::size_t n = tour.order.size();
  if (n < 2) return total;
  for (std::size_t i = 0; i < n; ++i) total += t.weight(tour.order[i], tour.order[(i + 1) % n]);
  return total;
}

}  // namespace expapx

#endif  // EXPAPX_TSP_HPP_
