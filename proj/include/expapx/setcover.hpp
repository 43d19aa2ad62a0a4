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

// Greedy set cover with element prices, the universe-scaling and
// set-merging reductions, and dominating set on top of the latter.

#ifndef EXPAPX_SETCOVER_HPP_
#define EXPAPX_SETCOVER_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expapx/error.hpp"
#include "expapx/graph.hpp"
#include "expapx/oracles.hpp"
#include "expapx/rational.hpp"
#include "expapx/setsystem.hpp"
#include "expapx/subset.hpp"

namespace expapx {

struct GreedyTrace {
  std::vector<std::size_t> chosen;  // in selection order
  std::vector<Rational> prices;     // per element
  std::vector<int> cover_order;     // e_1, ..., e_n
};

namespace detail {

// Set with the smallest w(S) / |S \ covered| among `available`; ties go to
// the lowest index. Returns m when nothing adds a new element.
inline std::size_t cheapest_set(const SetSystem& s, const std::vector<char>& available, Subset covered) {
  std::size_t best = s.num_sets();
  int best_new = 0;
  for (std::size_t i = 0; i < s.num_sets(); ++i) {
    if (!available[i]) continue;
    const int fresh = (s.set(i) - covered).size();
    if (fresh == 0) continue;
    // w_i / fresh < w_best / best_new, cross-multiplied.
    if (best == s.num_sets() || s.weight(i) * best_new < s.weight(best) * fresh) {
      best = i;
      best_new = fresh;
    }
  }
  return best;
}

}  // namespace detail

inline std::pair<GreedyTrace, Cover> greedy_cover(const SetSystem& s) {
  detail::require_feasible(s);
  const int n = s.universe_size();
  GreedyTrace trace;
  trace.prices.assign(static_cast<std::size_t>(n), Rational(0));
  std::vector<char> available(s.num_sets(), 1);
  Subset covered;
  while (covered != s.universe()) {
    const std::size_t t = detail::cheapest_set(s, available, covered);
    const Subset fresh = s.set(t) - covered;
    const Rational price = s.weight(t) / fresh.size();
    for (int e : fresh.elements()) {
      trace.prices[e] = price;
      trace.cover_order.push_back(e);
    }
    trace.chosen.push_back(t);
    available[t] = 0;
    covered |= fresh;
  }
  return {trace, Cover(trace.chosen)};
}

// ---------------------------------------------------------------------------
// Universe scaling.

// A set system whose sets point back into a parent system.
struct SubInstance {
  SetSystem system;
  std::vector<std::size_t> origin;  // origin[i] = parent index of set i
  std::vector<int> elements;        // parent element of each local element
};

struct UniverseEntry {
  std::size_t crossing = 0;         // T
  std::vector<std::size_t> committed;  // C_T, selection order
  SubInstance sub;                  // residual universe U \ (C_T u T)
};

struct UniverseReduceOutcome {
  int n = 0;
  Rational rate;
  std::vector<UniverseEntry> entries;
};

// Restricts every set to `residual`, relabels the residual elements in
// increasing order and drops empty restrictions.
inline SubInstance restrict_to(const SetSystem& s, const std::vector<char>& include, Subset residual) {
  SubInstance out;
  out.elements = residual.elements();
  std::vector<int> local(static_cast<std::size_t>(s.universe_size()), -1);
  for (std::size_t k = 0; k < out.elements.size(); ++k) local[out.elements[k]] = static_cast<int>(k);
  std::vector<Subset> sets;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < s.num_sets(); ++i) {
    if (!include[i]) continue;
    const Subset part = s.set(i) & residual;
    if (part.empty()) continue;
    Subset relabeled;
    for (int e : part.elements()) relabeled.insert(local[e]);
    sets.push_back(relabeled);
    weights.push_back(s.weight(i));
    out.origin.push_back(i);
  }
  out.system = SetSystem(static_cast<int>(out.elements.size()), std::move(sets), std::move(weights));
  return out;
}

// Greedy that, instead of committing a set T leaving at most n/r elements
// uncovered, records (C_T, T, I_T) and drops T from the family. Runs while
// the family together with the committed sets still covers U.
inline UniverseReduceOutcome universe_reduce(const SetSystem& s, const Rational& r) {
  if (r <= 1) throw UsageError("universe-scaling rate must exceed 1");
  detail::require_feasible(s);
  const int n = s.universe_size();
  UniverseReduceOutcome out;
  out.n = n;
  out.rate = r;
  if (n == 0) return out;
  std::vector<char> available(s.num_sets(), 1);
  std::vector<char> in_family(s.num_sets(), 1);
  std::vector<std::size_t> committed;
  Subset covered;
  auto family_union = [&]() {
    Subset u = covered;
    for (std::size_t i = 0; i < s.num_sets(); ++i) {
      if (in_family[i]) u |= s.set(i);
    }
    return u;
  };
  while (family_union() == s.universe()) {
    const std::size_t t = detail::cheapest_set(s, available, covered);
    if (t == s.num_sets()) throw InternalError("no set adds an element although the universe is coverable");
    const Subset after = covered | s.set(t);
    const int left = n - after.size();
    if (Rational(left) * r > Rational(n)) {
      committed.push_back(t);
      available[t] = 0;
      covered = after;
      continue;
    }
    UniverseEntry entry;
    entry.crossing = t;
    entry.committed = committed;
    entry.sub = restrict_to(s, in_family, s.universe() - after);
    out.entries.push_back(std::move(entry));
    in_family[t] = 0;
    available[t] = 0;
  }
  if (out.entries.empty()) throw InternalError("universe reduction produced no crossing set");
  return out;
}

// 1 + H_n - H_{ceil(n/r)} with the inner guarantee alpha in place of 1.
inline Rational universe_bound(int n, const Rational& r, const Rational& alpha) {
  if (n == 0) return alpha;
  const auto residual = static_cast<std::int64_t>(ceil_div(Rational(n) / r));
  return alpha + harmonic(n) - harmonic(residual);
}

struct MergeChoice {
  Cover cover;
  Rational weight;
  std::size_t source = 0;  // entry / sub-instance that produced it
};

namespace detail {

inline void keep_lighter(std::optional<MergeChoice>& best, const SetSystem& s, Cover c, std::size_t source) {
  if (!is_feasible_cover(s, c)) throw InternalError("merged candidate is not a cover");
  Rational w = cover_weight(s, c);
  if (!best || w < best->weight) best = MergeChoice{std::move(c), std::move(w), source};
}

inline void check_sub_solution(const SetSystem& sub, const Cover& c, std::size_t index) {
  if (!is_feasible_cover(sub, c)) {
    throw ContractViolation("sub-solution " + std::to_string(index) + " does not cover its instance");
  }
}

}  // namespace detail

inline MergeChoice universe_merge(const SetSystem& s, const UniverseReduceOutcome& out,
                                  const std::vector<std::optional<Cover>>& subs) {
  if (out.n == 0) return MergeChoice{Cover(), Rational(0), 0};
  if (subs.size() != out.entries.size()) throw ContractViolation("one sub-solution per entry required");
  std::optional<MergeChoice> best;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (!subs[k]) continue;
    const UniverseEntry& e = out.entries[k];
    detail::check_sub_solution(e.sub.system, *subs[k], k);
    std::vector<std::size_t> chosen = e.committed;
    chosen.push_back(e.crossing);
    for (std::size_t i : subs[k]->chosen) chosen.push_back(e.sub.origin[i]);
    detail::keep_lighter(best, s, Cover(std::move(chosen)), k);
  }
  if (!best) throw InternalError("every universe-scaling sub-instance was left unsolved");
  return *best;
}

// ---------------------------------------------------------------------------
// Set merging.

struct MergedInstance {
  SetSystem system;
  std::vector<std::vector<std::size_t>> expansion;  // per set: original indices
  std::size_t pivot = 0;                             // original index of S_i
};

struct MergeReduceOutcome {
  int rate = 2;
  std::vector<std::size_t> sorted;               // rank -> original index
  std::vector<std::vector<std::size_t>> blocks;  // original indices
  std::vector<MergedInstance> instances;         // one per rank
};

// Sort by weight (ties: index), cut into blocks of r, and for each S_i build
// {U_j : S_i not in B_j} u {V_i, S_i}; V_i joins the earlier members of S_i's
// block and is emitted even when empty.
inline MergeReduceOutcome setmerge_reduce(const SetSystem& s, int r) {
  if (r < 2) throw UsageError("set-merging rate must be an integer >= 2");
  detail::require_feasible(s);
  const std::size_t m = s.num_sets();
  MergeReduceOutcome out;
  out.rate = r;
  out.sorted.resize(m);
  std::iota(out.sorted.begin(), out.sorted.end(), std::size_t{0});
  std::stable_sort(out.sorted.begin(), out.sorted.end(),
                   [&](std::size_t a, std::size_t b) { return s.weight(a) < s.weight(b); });
  const std::size_t rr = static_cast<std::size_t>(r);
  for (std::size_t k = 0; k < m; k += rr) {
    out.blocks.emplace_back(out.sorted.begin() + static_cast<std::ptrdiff_t>(k),
                            out.sorted.begin() + static_cast<std::ptrdiff_t>(std::min(m, k + rr)));
  }
  auto join = [&](const std::vector<std::size_t>& members, Subset& u, Rational& w) {
    u = Subset();
    w = 0;
    for (std::size_t i : members) {
      u |= s.set(i);
      w += s.weight(i);
    }
  };
  std::vector<Subset> block_union(out.blocks.size());
  std::vector<Rational> block_weight(out.blocks.size());
  for (std::size_t j = 0; j < out.blocks.size(); ++j) join(out.blocks[j], block_union[j], block_weight[j]);

  for (std::size_t rank = 0; rank < m; ++rank) {
    const std::size_t own = rank / rr;
    MergedInstance inst;
    inst.pivot = out.sorted[rank];
    std::vector<Subset> sets;
    std::vector<Rational> weights;
    for (std::size_t j = 0; j < out.blocks.size(); ++j) {
      if (j == own) continue;
      sets.push_back(block_union[j]);
      weights.push_back(block_weight[j]);
      inst.expansion.push_back(out.blocks[j]);
    }
    std::vector<std::size_t> earlier(out.sorted.begin() + static_cast<std::ptrdiff_t>(own * rr),
                                     out.sorted.begin() + static_cast<std::ptrdiff_t>(rank));
    Subset v;
    Rational vw;
    join(earlier, v, vw);
    sets.push_back(v);
    weights.push_back(vw);
    inst.expansion.push_back(earlier);
    sets.push_back(s.set(inst.pivot));
    weights.push_back(s.weight(inst.pivot));
    inst.expansion.push_back({inst.pivot});
    inst.system = SetSystem(s.universe_size(), std::move(sets), std::move(weights));
    out.instances.push_back(std::move(inst));
  }
  return out;
}

inline Cover expand(const MergedInstance& inst, const Cover& c) {
  std::vector<std::size_t> chosen;
  for (std::size_t i : c.chosen) chosen.insert(chosen.end(), inst.expansion[i].begin(), inst.expansion[i].end());
  return Cover(std::move(chosen));
}

// Infeasible sub-instances (passed as nullopt) are skipped.
inline MergeChoice setmerge_merge(const SetSystem& s, const MergeReduceOutcome& out,
                                  const std::vector<std::optional<Cover>>& subs) {
  if (subs.size() != out.instances.size()) throw ContractViolation("one sub-solution per instance required");
  std::optional<MergeChoice> best;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (!subs[k]) continue;
    detail::check_sub_solution(out.instances[k].system, *subs[k], k);
    Cover full = expand(out.instances[k], *subs[k]);
    if (cover_weight(s, full) != cover_weight(out.instances[k].system, *subs[k])) {
      throw InternalError("expansion changed the cover weight");
    }
    detail::keep_lighter(best, s, std::move(full), k);
  }
  if (!best) throw InternalError("every set-merging sub-instance was infeasible");
  return *best;
}

// ---------------------------------------------------------------------------
// Dominating set: set merging over closed neighbourhoods. Each block of r
// vertices acts as one super-vertex dominating the union of their N[v].

struct MdsReduction {
  SetSystem neighborhoods;
  MergeReduceOutcome outcome;
};

inline MdsReduction mds_reduce(const Graph& g, int r) {
  MdsReduction red;
  red.neighborhoods = closed_neighborhood_system(g);
  red.outcome = setmerge_reduce(red.neighborhoods, r);
  return red;
}

inline std::vector<int> mds_merge(const Graph& g, const MdsReduction& red,
                                  const std::vector<std::optional<Cover>>& subs) {
  MergeChoice c = setmerge_merge(red.neighborhoods, red.outcome, subs);
  std::vector<int> out;
  for (std::size_t i : c.cover.chosen) out.push_back(static_cast<int>(i));
  if (!is_dominating(g, out)) throw InternalError("merged vertex set does not dominate");
  return out;
}

// ---------------------------------------------------------------------------
// Inner solvers by name.

enum class CoverSolver { kExact, kBruteForce, kInclusionExclusion, kDivideConquer, kGreedy };

inline CoverSolver parse_cover_solver(const std::string& name) {
  if (name == "exact") return CoverSolver::kExact;
  if (name == "exact-bf") return CoverSolver::kBruteForce;
  if (name == "exact-ie") return CoverSolver::kInclusionExclusion;
  if (name == "exact-dc") return CoverSolver::kDivideConquer;
  if (name == "greedy") return CoverSolver::kGreedy;
  throw UsageError("unknown set cover solver '" + name + "'");
}

// nullopt when the instance has no cover. "exact" picks inclusion-exclusion
// for unit weights, else divide and conquer, else brute force, by size.
inline std::optional<Cover> solve_cover(const SetSystem& s, CoverSolver how, const OracleLimits& limits = {}) {
  if (!s.feasible()) return std::nullopt;
  switch (how) {
    case CoverSolver::kGreedy:
      return greedy_cover(s).second;
    case CoverSolver::kBruteForce:
      return exact_setcover_bruteforce(s, limits).witness;
    case CoverSolver::kInclusionExclusion:
      return exact_setcover_ie(s, limits).witness;
    case CoverSolver::kDivideConquer:
      return exact_setcover_dc(s, limits).witness;
    case CoverSolver::kExact:
      break;
  }
  if (s.all_unit_weights() && s.universe_size() <= limits.setcover_ie_n) return exact_setcover_ie(s, limits).witness;
  if (s.universe_size() <= limits.setcover_dc_n && s.num_sets() <= 64) return exact_setcover_dc(s, limits).witness;
  return exact_setcover_bruteforce(s, limits).witness;
}

}  // namespace expapx

#endif  // EXPAPX_SETCOVER_HPP_
