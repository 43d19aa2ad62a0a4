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

#ifndef EXPAPX_SETSYSTEM_HPP_
#define EXPAPX_SETSYSTEM_HPP_

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expapx/error.hpp"
#include "expapx/graph.hpp"
#include "expapx/rational.hpp"
#include "expapx/subset.hpp"

namespace expapx {

// Weighted family of subsets of the universe {0, ..., n-1}.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(int universe_size, std::vector<Subset> sets, std::vector<Rational> weights)
      : n_(universe_size), sets_(std::move(sets)), weights_(std::move(weights)) {
    if (n_ < 0 || n_ > kMaxUniverse) {
      throw InvalidInstance("universe size must be in [0, " + std::to_string(kMaxUniverse) + "]");
    }
    if (sets_.size() != weights_.size()) throw InvalidInstance("one weight per set required");
    const Subset universe = Subset::full(n_);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (!sets_[i].subset_of(universe)) {
        throw InvalidInstance("set " + std::to_string(i) + " leaves the universe");
      }
      if (weights_[i] < 0) throw InvalidInstance("negative weight on set " + std::to_string(i));
    }
  }

  static SetSystem unweighted(int universe_size, std::vector<Subset> sets) {
    std::vector<Rational> w(sets.size(), Rational(1));
    return SetSystem(universe_size, std::move(sets), std::move(w));
  }

  int universe_size() const { return n_; }
  std::size_t num_sets() const { return sets_.size(); }
  Subset universe() const { return Subset::full(n_); }
  const std::vector<Subset>& sets() const { return sets_; }
  const std::vector<Rational>& weights() const { return weights_; }
  Subset set(std::size_t i) const { return sets_[i]; }
  const Rational& weight(std::size_t i) const { return weights_[i]; }

  Subset union_of_all() const {
    Subset u;
    for (Subset s : sets_) u |= s;
    return u;
  }
  bool feasible() const { return union_of_all() == universe(); }

  bool all_unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
  }

  bool operator==(const SetSystem&) const = default;

 private:
  int n_ = 0;
  std::vector<Subset> sets_;
  std::vector<Rational> weights_;
};

// Indices into SetSystem::sets(), kept sorted and distinct.
struct Cover {
  std::vector<std::size_t> chosen;

  Cover() = default;
  explicit Cover(std::vector<std::size_t> indices) : chosen(std::move(indices)) { normalize(); }

  void normalize() {
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  }
  std::size_t size() const { return chosen.size(); }
  bool operator==(const Cover&) const = default;
};

inline Rational cover_weight(const SetSystem& s, const Cover& c) {
  Rational w = 0;
  for (std::size_t i : c.chosen) w += s.weight(i);
  return w;
}

inline Subset covered_by(const SetSystem& s, const Cover& c) {
  Subset u;
  for (std::size_t i : c.chosen) u |= s.set(i);
  return u;
}

inline bool is_feasible_cover(const SetSystem& s, const Cover& c) {
  for (std::size_t i : c.chosen) {
    if (i >= s.num_sets()) return false;
  }
  return std::adjacent_find(c.chosen.begin(), c.chosen.end()) == c.chosen.end() &&
         covered_by(s, c) == s.universe();
}

// {N[v] : v in V} with unit weights; set i is the closed neighborhood of i.
inline SetSystem closed_neighborhood_system(const Graph& g) {
  if (g.num_vertices() > kMaxUniverse) {
    throw InvalidInstance("closed-neighborhood systems need at most 64 vertices");
  }
  std::vector<Subset> sets;
  for (int v = 0; v < g.num_vertices(); ++v) {
    sets.push_back(Subset(g.neighbor_mask(v)) | Subset::single(v));
  }
  return SetSystem::unweighted(g.num_vertices(), std::move(sets));
}

}  // namespace expapx

#endif  // EXPAPX_SETSYSTEM_HPP_
