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

// Reducer/merger pairs, their composition, and approximation certificates.
//
// A ReductionStep maps an instance to sub-instances plus a context, and a
// list of sub-solutions back to a solution. compose() nests a step k levels
// deep; the leaves are solved by an inner solver supplied by the caller, in
// any order (the tree stores results by leaf index).

#ifndef EXPAPX_REDUCTIONS_HPP_
#define EXPAPX_REDUCTIONS_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expapx/assignment.hpp"
#include "expapx/bandwidth.hpp"
#include "expapx/error.hpp"
#include "expapx/generators.hpp"
#include "expapx/graph.hpp"
#include "expapx/oracles.hpp"
#include "expapx/rational.hpp"
#include "expapx/setcover.hpp"
#include "expapx/tsp.hpp"

namespace expapx {

// f(alpha) in one of three closed forms, raised to a composition power.
struct Guarantee {
  enum class Shape { kScale, kShift, kShiftLog };
  Shape shape = Shape::kScale;
  Rational c = 1;
  Rational log_arg = 1;  // kShiftLog: alpha + c * ln(log_arg)
  int power = 1;

  static Guarantee scale(Rational c) { return {Shape::kScale, std::move(c), 1, 1}; }
  static Guarantee shift(Rational c) { return {Shape::kShift, std::move(c), 1, 1}; }
  static Guarantee shift_log(Rational c, Rational r) { return {Shape::kShiftLog, std::move(c), std::move(r), 1}; }

  Guarantee composed(int k) const {
    Guarantee g = *this;
    g.power *= k;
    return g;
  }

  // Exact value where the shape allows it.
  std::optional<Rational> apply(const Rational& alpha) const {
    switch (shape) {
      case Shape::kScale: {
        Rational f = alpha;
        for (int i = 0; i < power; ++i) f *= c;
        return f;
      }
      case Shape::kShift:
        return alpha + c * power;
      case Shape::kShiftLog:
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::string describe() const {
    switch (shape) {
      case Shape::kScale:
        return to_string(*apply(Rational(1))) + "*alpha";
      case Shape::kShift:
        return "alpha+" + to_string(c * power);
      case Shape::kShiftLog:
        return "alpha+" + to_string(c * power) + "*ln(" + to_string(log_arg) + ")";
    }
    return "";
  }
};

template <class Instance, class Solution, class Context>
struct ReductionStep {
  std::string name;
  Rational rate = 2;
  Guarantee guarantee;
  Rational slack = 0;  // additive O(1) in the size bound, per level
  std::function<Rational(const Instance&)> size;
  std::function<std::pair<Context, std::vector<Instance>>(const Instance&)> reduce;
  std::function<std::optional<Solution>(const Instance&, const Context&,
                                        const std::vector<std::optional<Solution>>&)> merge;
  // Instances failing this are neither reduced nor solved (nullopt result).
  std::function<bool(const Instance&)> solvable;
};

template <class Instance, class Context>
struct ReductionNode {
  Instance instance;
  std::optional<Context> context;  // empty at leaves
  std::vector<ReductionNode> children;
  bool solvable = true;
  int depth = 0;
  std::size_t leaf_index = 0;  // valid at solvable leaves
};

template <class Instance, class Solution, class Context>
class ComposedReduction {
 public:
  using Step = ReductionStep<Instance, Solution, Context>;
  using Node = ReductionNode<Instance, Context>;

  ComposedReduction(Step step, int k) : step_(std::move(step)), k_(k) {
    if (k < 0) throw UsageError("composition depth must be nonnegative");
  }

  int depth() const { return k_; }
  const Step& step() const { return step_; }
  Rational rate() const {
    Rational r = 1;
    for (int i = 0; i < k_; ++i) r *= step_.rate;
    return r;
  }
  Guarantee guarantee() const { return step_.guarantee.composed(k_); }

  Node reduce(const Instance& root) const {
    std::size_t leaves = 0;
    Node tree = build(root, 0, leaves);
    check_sizes(tree);
    return tree;
  }

  // Solvable leaves in index order.
  static std::vector<const Instance*> leaves(const Node& tree) {
    std::vector<const Instance*> out;
    collect(tree, out);
    return out;
  }

  std::optional<Solution> merge(const Node& tree, const std::vector<std::optional<Solution>>& leaf_solutions) const {
    return fold(tree, leaf_solutions);
  }

  // Largest leaf size and the allowed bound s/r^k + k*slack.
  std::pair<Rational, Rational> leaf_size_check(const Node& tree) const {
    Rational worst = 0;
    max_leaf(tree, worst);
    return {worst, step_.size(tree.instance) / rate() + step_.slack * k_};
  }

 private:
  Node build(const Instance& inst, int depth, std::size_t& leaves) const {
    Node node{inst, std::nullopt, {}, true, depth, 0};
    if (step_.solvable && !step_.solvable(inst)) {
      node.solvable = false;
      return node;
    }
    if (depth == k_) {
      node.leaf_index = leaves++;
      return node;
    }
    auto [ctx, subs] = step_.reduce(inst);
    node.context = std::move(ctx);
    for (const Instance& sub : subs) node.children.push_back(build(sub, depth + 1, leaves));
    return node;
  }

  void check_sizes(const Node& tree) const {
    auto [worst, allowed] = leaf_size_check(tree);
    if (worst > allowed) {
      throw InternalError(step_.name + ": leaf size " + to_string(worst) + " exceeds " + to_string(allowed));
    }
  }

  void max_leaf(const Node& n, Rational& worst) const {
    if (n.depth == k_ || !n.context) {
      if (n.depth == k_) worst = std::max(worst, step_.size(n.instance));
      return;
    }
    for (const Node& c : n.children) max_leaf(c, worst);
  }

  static void collect(const Node& n, std::vector<const Instance*>& out) {
    if (!n.solvable) return;
    if (!n.context) {
      out.push_back(&n.instance);
      return;
    }
    for (const Node& c : n.children) collect(c, out);
  }

  std::optional<Solution> fold(const Node& n, const std::vector<std::optional<Solution>>& leaf) const {
    if (!n.solvable) return std::nullopt;
    if (!n.context) {
      if (n.leaf_index >= leaf.size()) throw ContractViolation("missing leaf solution");
      return leaf[n.leaf_index];
    }
    std::vector<std::optional<Solution>> subs;
    subs.reserve(n.children.size());
    for (const Node& c : n.children) subs.push_back(fold(c, leaf));
    return step_.merge(n.instance, *n.context, subs);
  }

  Step step_;
  int k_;
};

template <class Instance, class Solution, class Context>
ComposedReduction<Instance, Solution, Context> compose(ReductionStep<Instance, Solution, Context> step, int k) {
  return ComposedReduction<Instance, Solution, Context>(std::move(step), k);
}

// Reduce, solve every leaf with `inner`, merge. Sequential convenience.
template <class Instance, class Solution, class Context, class Inner>
std::optional<Solution> run_composed(const ComposedReduction<Instance, Solution, Context>& red,
                                     const Instance& inst, Inner&& inner) {
  auto tree = red.reduce(inst);
  std::vector<std::optional<Solution>> sols;
  for (const Instance* leaf : red.leaves(tree)) sols.push_back(inner(*leaf));
  return red.merge(tree, sols);
}

// ---------------------------------------------------------------------------
// Certificates.

inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct ApproxCertificate {
  enum class Sense { kAtMost, kAtLeast };
  std::string problem;
  std::string digest;
  Rational value;
  std::string claimed;  // symbolic guarantee
  Sense sense = Sense::kAtMost;
  std::optional<Rational> optimum;
  std::optional<Rational> limit;  // the bound the value is checked against
  bool verified = false;
  std::string path;  // how the solution was produced

  // Sets optimum/limit and verified.
  void check(const Rational& opt, const Rational& bound) {
    optimum = opt;
    limit = bound;
    verified = sense == Sense::kAtMost ? value <= bound : value >= bound;
  }

  std::string inequality() const {
    if (!limit) return "";
    return "value " + to_string(value) + (sense == Sense::kAtMost ? " <= " : " >= ") + to_string(*limit);
  }
};

// ---------------------------------------------------------------------------
// Maximum independent set: k index-contiguous parts, sub-graph i induced by
// the l cyclically consecutive parts starting at i.

struct MisReduction {
  int k = 2;
  int l = 1;
  std::vector<std::vector<int>> parts;
  std::vector<std::vector<int>> vertices;  // per sub-graph, sorted
};

inline std::vector<std::vector<int>> contiguous_parts(int n, int k, std::optional<std::uint64_t> shuffle_seed) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (shuffle_seed) {
    SeededRng rng(*shuffle_seed);
    rng.shuffle(order);
  }
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const long long lo = static_cast<long long>(j) * n / k;
    const long long hi = static_cast<long long>(j + 1) * n / k;
    for (long long p = lo; p < hi; ++p) parts[j].push_back(order[static_cast<std::size_t>(p)]);
    std::sort(parts[j].begin(), parts[j].end());
  }
  return parts;
}

inline std::pair<MisReduction, std::vector<Graph>> mis_reduce(const Graph& g, int k, int l,
                                                              std::optional<std::uint64_t> shuffle_seed = {}) {
  if (l < 1 || k < l) throw UsageError("MIS reduction needs k >= l >= 1");
  MisReduction red{k, l, contiguous_parts(g.num_vertices(), k, shuffle_seed), {}};
  std::vector<Graph> subs;
  for (int i = 0; i < k; ++i) {
    std::vector<int> vs;
    for (int j = 0; j < l; ++j) {
      const auto& p = red.parts[static_cast<std::size_t>((i + j) % k)];
      vs.insert(vs.end(), p.begin(), p.end());
    }
    std::sort(vs.begin(), vs.end());
    subs.push_back(g.induced(vs));
    red.vertices.push_back(std::move(vs));
  }
  return {std::move(red), std::move(subs)};
}

// Largest sub-solution (ties: lowest index), mapped back and re-validated.
inline std::vector<int> mis_merge(const Graph& g, const MisReduction& red,
                                  const std::vector<std::optional<std::vector<int>>>& subs) {
  if (subs.size() != red.vertices.size()) throw ContractViolation("one MIS sub-solution per sub-graph required");
  std::vector<int> best;
  bool any = false;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]) continue;
    std::vector<int> mapped;
    for (int v : *subs[i]) {
      if (v < 0 || v >= static_cast<int>(red.vertices[i].size())) throw ContractViolation("MIS sub-solution vertex out of range");
      mapped.push_back(red.vertices[i][static_cast<std::size_t>(v)]);
    }
    std::sort(mapped.begin(), mapped.end());
    if (!is_independent(g, mapped)) throw ContractViolation("MIS sub-solution " + std::to_string(i) + " is not independent");
    if (!any || mapped.size() > best.size()) best = std::move(mapped);
    any = true;
  }
  if (!any) throw ContractViolation("no MIS sub-solution supplied");
  return best;
}

// r = k/l in lowest terms.
inline std::pair<int, int> mis_parts_for_rate(const Rational& r) {
  if (r < 1) throw UsageError("MIS rate must be at least 1");
  const BigInt p = numerator_of(r), q = denominator_of(r);
  if (p > 64) throw UsageError("MIS rate numerator too large");
  return {static_cast<int>(p), static_cast<int>(q)};
}

// ---------------------------------------------------------------------------
// Coloring.

struct ColoringSplit {
  std::vector<std::vector<int>> parts;
};

inline std::pair<ColoringSplit, std::vector<Graph>> coloring_simple_reduce(const Graph& g, int r,
                                                                           std::optional<std::uint64_t> shuffle_seed = {}) {
  if (r < 2) throw UsageError("simple coloring reduction needs an integer rate >= 2");
  ColoringSplit split{contiguous_parts(g.num_vertices(), r, shuffle_seed)};
  std::vector<Graph> subs;
  for (const auto& p : split.parts) subs.push_back(g.induced(p));
  return {std::move(split), std::move(subs)};
}

inline void require_proper(const Graph& g, const Coloring& c, const std::string& who) {
  if (!is_proper_coloring(g, c)) throw ContractViolation(who + " is not a proper coloring");
}

inline Coloring coloring_simple_merge(const Graph& g, const ColoringSplit& split,
                                      const std::vector<std::optional<Coloring>>& subs) {
  if (subs.size() != split.parts.size()) throw ContractViolation("one coloring per part required");
  Coloring out;
  out.color.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]) throw ContractViolation("missing coloring for part " + std::to_string(i));
    require_proper(g.induced(split.parts[i]), *subs[i], "sub-coloring " + std::to_string(i));
    for (std::size_t k = 0; k < split.parts[i].size(); ++k) {
      out.color[static_cast<std::size_t>(split.parts[i][k])] = out.num_colors + subs[i]->color[k];
    }
    out.num_colors += subs[i]->num_colors;
  }
  require_proper(g, out, "merged coloring");
  return out;
}

struct MisSolver {
  Rational beta = 1;
  std::function<std::vector<int>(const Graph&)> solve;
};

// beta-approximate MIS from the MIS reduction at rate beta with an exact
// inner solver (beta = 1: the exact solver alone).
inline MisSolver reduced_mis_solver(const Rational& beta, const OracleLimits& limits = {}) {
  MisSolver s;
  s.beta = beta;
  s.solve = [beta, limits](const Graph& g) {
    if (beta == 1) return exact_mis(g, limits).witness;
    auto [k, l] = mis_parts_for_rate(beta);
    auto [red, subs] = mis_reduce(g, k, l);
    std::vector<std::optional<std::vector<int>>> sols;
    for (const Graph& sub : subs) sols.push_back(exact_mis(sub, limits).witness);
    return mis_merge(g, red, sols);
  };
  return s;
}

struct ColoringPeel {
  int n = 0;
  std::vector<std::vector<int>> removed;  // I_1, ..., I_t in original labels
  std::vector<int> residual;              // V(G'), sorted
};

// Remove independent sets while more than n/r vertices remain.
inline std::pair<ColoringPeel, Graph> coloring_bh_reduce(const Graph& g, const Rational& r, const MisSolver& mis) {
  if (r <= 1) throw UsageError("peeling coloring reduction needs a rate > 1");
  const int n = g.num_vertices();
  ColoringPeel peel;
  peel.n = n;
  peel.residual.resize(static_cast<std::size_t>(n));
  std::iota(peel.residual.begin(), peel.residual.end(), 0);
  while (Rational(static_cast<int>(peel.residual.size())) * r > Rational(n)) {
    Graph cur = g.induced(peel.residual);
    std::vector<int> local = mis.solve(cur);
    if (local.empty() || !is_independent(cur, local)) throw ContractViolation("MIS solver returned an empty or dependent set");
    std::vector<char> gone(peel.residual.size(), 0);
    std::vector<int> mapped;
    for (int v : local) {
      gone[static_cast<std::size_t>(v)] = 1;
      mapped.push_back(peel.residual[static_cast<std::size_t>(v)]);
    }
    std::sort(mapped.begin(), mapped.end());
    peel.removed.push_back(std::move(mapped));
    std::vector<int> next;
    for (std::size_t i = 0; i < peel.residual.size(); ++i) {
      if (!gone[i]) next.push_back(peel.residual[i]);
    }
    peel.residual = std::move(next);
  }
  return {peel, g.induced(peel.residual)};
}

inline Coloring coloring_bh_merge(const Graph& g, const ColoringPeel& peel, const Coloring& residual_coloring) {
  require_proper(g.induced(peel.residual), residual_coloring, "residual coloring");
  Coloring out;
  out.color.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for (std::size_t i = 0; i < peel.residual.size(); ++i) out.color[peel.residual[i]] = residual_coloring.color[i];
  out.num_colors = residual_coloring.num_colors;
  for (const auto& set : peel.removed) {
    ++out.num_colors;
    for (int v : set) out.color[v] = out.num_colors;
  }
  require_proper(g, out, "merged coloring");
  return out;
}

// alpha * chi + ceil(chi * beta * ln r).
inline Rational coloring_bh_bound(int chi, const Rational& alpha, const Rational& beta, const Rational& r) {
  return alpha * chi + Rational(ceil_times_log(Rational(chi) * beta, r));
}

// ---------------------------------------------------------------------------
// Semi-metric TSP: k rounds of minimum cycle covers on representatives.

struct TspReduction {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> covers;  // per round, cycles in original labels
  std::vector<Rational> cover_weights;
  bool finished = false;         // some cover was a single cycle
  std::vector<int> reduced_cities;  // original label of each reduced city
};

inline std::pair<TspReduction, std::optional<TspInstance>> tsp_reduce(const TspInstance& t, int k) {
  if (k < 0) throw UsageError("TSP reduction depth must be nonnegative");
  const int n = t.num_cities();
  TspReduction red;
  red.n = n;
  red.reduced_cities.resize(static_cast<std::size_t>(n));
  std::iota(red.reduced_cities.begin(), red.reduced_cities.end(), 0);
  if (k > 0 && n < 2) throw InvalidInstance("TSP reduction needs at least two cities");
  TspInstance cur = t;
  for (int round = 0; round < k; ++round) {
    CycleCover cover = min_cycle_cover(cur);
    std::vector<std::vector<int>> cycles;
    std::vector<int> reps;
    for (const auto& cyc : cover.cycles) {
      std::vector<int> mapped;
      for (int c : cyc) mapped.push_back(red.reduced_cities[static_cast<std::size_t>(c)]);
      reps.push_back(cyc.front());  // cycles start at their smallest city
      cycles.push_back(std::move(mapped));
    }
    red.covers.push_back(std::move(cycles));
    red.cover_weights.push_back(cover.weight);
    if (cover.cycles.size() == 1) {
      red.finished = true;
      red.reduced_cities.clear();
      return {std::move(red), std::nullopt};
    }
    std::vector<int> next;
    for (int c : reps) next.push_back(red.reduced_cities[static_cast<std::size_t>(c)]);
    cur = cur.induced(reps);
    red.reduced_cities = std::move(next);
  }
  return {std::move(red), std::move(cur)};
}

namespace detail {

// Eulerian circuit of a connected balanced multigraph from `start`
// (Hierholzer; arcs leave each vertex in insertion order).
inline std::vector<int> euler_circuit(int n, const std::vector<std::pair<int, int>>& arcs, int start) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  for (int v = 0; v < n; ++v) {
    if (indeg[v] != static_cast<int>(out[v].size())) throw InternalError("overlay is not balanced");
  }
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {start}, circuit;
  while (!stack.empty()) {
    const int v = stack.back();
    if (next[v] < out[v].size()) {
      stack.push_back(out[v][next[v]++]);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  if (circuit.size() != arcs.size() + 1) throw InternalError("overlay is not connected");
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace detail

// Overlay every cover and the inner tour, walk an Eulerian circuit from city
// 0 and keep first visits.
inline Tour tsp_merge(const TspInstance& t, const TspReduction& red, const std::optional<Tour>& inner) {
  const int n = t.num_cities();
  if (n <= 1) return Tour{std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::vector<std::pair<int, int>> arcs;
  for (const auto& cover : red.covers) {
    for (const auto& cyc : cover) {
      for (std::size_t i = 0; i < cyc.size(); ++i) arcs.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
    }
  }
  if (!red.finished) {
    if (!inner) throw ContractViolation("TSP merge needs a tour of the reduced instance");
    const int m = static_cast<int>(red.reduced_cities.size());
    if (static_cast<int>(inner->order.size()) != m) throw ContractViolation("inner tour has the wrong length");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int c : inner->order) {
      if (c < 0 || c >= m || seen[c]) throw ContractViolation("inner tour is not a permutation");
      seen[c] = 1;
    }
    if (m >= 2) {
      for (int i = 0; i < m; ++i) {
        arcs.push_back({red.reduced_cities[inner->order[i]], red.reduced_cities[inner->order[(i + 1) % m]]});
      }
    }
  }
  std::vector<int> circuit = detail::euler_circuit(n, arcs, 0);
  Tour tour;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int c : circuit) {
    if (!seen[c]) {
      seen[c] = 1;
      tour.order.push_back(c);
    }
  }
  if (!is_tour(t, tour)) throw InternalError("shortcut circuit misses a city");
  return tour;
}

// ---------------------------------------------------------------------------
// Steps for compose().

inline ReductionStep<SetSystem, Cover, MergeReduceOutcome> setmerge_step(int r) {
  ReductionStep<SetSystem, Cover, MergeReduceOutcome> s;
  s.name = "setcover-merge";
  s.rate = r;
  s.guarantee = Guarantee::scale(r);
  s.slack = 2;
  s.size = [](const SetSystem& x) { return Rational(static_cast<long long>(x.num_sets())); };
  s.reduce = [r](const SetSystem& x) {
    MergeReduceOutcome o = setmerge_reduce(x, r);
    std::vector<SetSystem> subs;
    for (const auto& inst : o.instances) subs.push_back(inst.system);
    return std::make_pair(std::move(o), std::move(subs));
  };
  s.merge = [](const SetSystem& x, const MergeReduceOutcome& o, const std::vector<std::optional<Cover>>& subs) {
    return std::optional<Cover>(setmerge_merge(x, o, subs).cover);
  };
  s.solvable = [](const SetSystem& x) { return x.feasible(); };
  return s;
}

inline ReductionStep<SetSystem, Cover, UniverseReduceOutcome> universe_step(const Rational& r) {
  ReductionStep<SetSystem, Cover, UniverseReduceOutcome> s;
  s.name = "setcover-universe";
  s.rate = r;
  s.guarantee = Guarantee::shift_log(1, r);
  s.slack = 0;
  s.size = [](const SetSystem& x) { return Rational(x.universe_size()); };
  s.reduce = [r](const SetSystem& x) {
    UniverseReduceOutcome o = universe_reduce(x, r);
    std::vector<SetSystem> subs;
    for (const auto& e : o.entries) subs.push_back(e.sub.system);
    return std::make_pair(std::move(o), std::move(subs));
  };
  s.merge = [](const SetSystem& x, const UniverseReduceOutcome& o, const std::vector<std::optional<Cover>>& subs) {
    return std::optional<Cover>(universe_merge(x, o, subs).cover);
  };
  s.solvable = [](const SetSystem& x) { return x.feasible(); };
  return s;
}

inline ReductionStep<Graph, std::vector<int>, MisReduction> mis_step(int k, int l,
                                                                     std::optional<std::uint64_t> shuffle_seed = {}) {
  ReductionStep<Graph, std::vector<int>, MisReduction> s;
  s.name = "mis";
  s.rate = Rational(k, l);
  s.guarantee = Guarantee::scale(Rational(k, l));
  s.slack = l;
  s.size = [](const Graph& g) { return Rational(g.num_vertices()); };
  s.reduce = [k, l, shuffle_seed](const Graph& g) { return mis_reduce(g, k, l, shuffle_seed); };
  s.merge = [](const Graph& g, const MisReduction& red, const std::vector<std::optional<std::vector<int>>>& subs) {
    return std::optional<std::vector<int>>(mis_merge(g, red, subs));
  };
  return s;
}

inline ReductionStep<Graph, Coloring, ColoringSplit> coloring_step(int r, std::optional<std::uint64_t> shuffle_seed = {}) {
  ReductionStep<Graph, Coloring, ColoringSplit> s;
  s.name = "coloring-simple";
  s.rate = r;
  s.guarantee = Guarantee::scale(r);
  s.slack = 1;
  s.size = [](const Graph& g) { return Rational(g.num_vertices()); };
  s.reduce = [r, shuffle_seed](const Graph& g) { return coloring_simple_reduce(g, r, shuffle_seed); };
  s.merge = [](const Graph& g, const ColoringSplit& split, const std::vector<std::optional<Coloring>>& subs) {
    return std::optional<Coloring>(coloring_simple_merge(g, split, subs));
  };
  return s;
}

inline ReductionStep<Graph, Ordering, BandwidthReduction> bandwidth_halving_step() {
  ReductionStep<Graph, Ordering, BandwidthReduction> s;
  s.name = "bandwidth-halving";
  s.rate = 2;
  s.guarantee = Guarantee::scale(9);
  s.slack = 1;
  s.size = [](const Graph& g) { return Rational(g.num_vertices()); };
  s.reduce = [](const Graph& g) {
    BandwidthReduction red = bandwidth_reduce(g);
    Graph sub = red.reduced;
    return std::make_pair(std::move(red), std::vector<Graph>{std::move(sub)});
  };
  s.merge = [](const Graph&, const BandwidthReduction& red, const std::vector<std::optional<Ordering>>& subs) {
    if (subs.size() != 1 || !subs[0]) throw ContractViolation("bandwidth merge needs an ordering of the reduced graph");
    return std::optional<Ordering>(bandwidth_merge(red, *subs[0]));
  };
  return s;
}

inline ReductionStep<TspInstance, Tour, TspReduction> tsp_step() {
  ReductionStep<TspInstance, Tour, TspReduction> s;
  s.name = "tsp";
  s.rate = 2;
  s.guarantee = Guarantee::shift(1);
  s.slack = 0;
  s.size = [](const TspInstance& t) { return Rational(t.num_cities()); };
  s.reduce = [](const TspInstance& t) {
    auto [red, sub] = tsp_reduce(t, 1);
    std::vector<TspInstance> subs;
    if (sub) subs.push_back(std::move(*sub));
    return std::make_pair(std::move(red), std::move(subs));
  };
  s.merge = [](const TspInstance& t, const TspReduction& red, const std::vector<std::optional<Tour>>& subs) {
    std::optional<Tour> inner;
    if (!subs.empty()) inner = subs[0];
    return std::optional<Tour>(tsp_merge(t, red, inner));
  };
  return s;
}

}  // namespace expapx

#endif  // EXPAPX_REDUCTIONS_HPP_
