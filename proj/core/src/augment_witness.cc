// Copyright 2026 The bikit Authors.
//
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

#include "bikit/augment_witness.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bikit/error.h"
#include "bikit/hitting_set.h"
#include "bikit/parallel.h"
#include "bikit/random.h"
#include "bikit/search_grid.h"

namespace bikit {
namespace {

// Cached group matrices above this many doubles are recomputed per target.
constexpr std::size_t kMaxCachedEntries = std::size_t{1} << 24;

std::int64_t Choose(std::int64_t n, int r) {
  if (r < 0 || n < r) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

void CheckPool(const InformationGraph& g, std::span<const Edge> pool,
               int cap) {
  if (static_cast<int>(pool.size()) > cap) {
    throw Error(ErrorKind::kLimitExceeded,
                "candidate pool of " + std::to_string(pool.size()) +
                    " edges exceeds cap " + std::to_string(cap));
  }
  for (const Edge& e : pool) {
    if (e.IsSelfLoop()) {
      throw Error(ErrorKind::kSelfLoop, "self-loop " + ToString(e));
    }
    if (e.u < 0 || e.v >= g.num_vertices()) {
      throw Error(ErrorKind::kVertexRange,
                  "edge " + ToString(e) + " out of range");
    }
    if (g.HasEdge(e)) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "pool edge " + ToString(e) + " already in graph");
    }
  }
}

// Off-diagonal lower-confidence proximities of G + group, per group.
class GroupTable {
 public:
  GroupTable(const ProximityEngine& engine,
             const std::vector<std::vector<Edge>>& groups)
      : engine_(engine), groups_(groups) {
    const std::size_t n = engine.graph().num_vertices();
    cached_ = groups.size() * n * n <= kMaxCachedEntries;
  }

  // Calls fn(group index, lower values) for every group; lower values are
  // row-major n x n.
  template <typename Fn>
  void ForEach(Fn&& fn) {
    if (cached_ && table_.empty()) table_ = Compute();
    if (cached_) {
      for (std::size_t gi = 0; gi < groups_.size(); ++gi) fn(gi, table_[gi]);
      return;
    }
    auto fresh = Compute();
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) fn(gi, fresh[gi]);
  }

 private:
  std::vector<std::vector<double>> Compute() const {
    std::vector<std::vector<double>> out(groups_.size());
    ParallelFor(ResolveWorkers(engine_.config().workers), groups_.size(),
                [&](std::size_t a, std::size_t b) {
                  for (std::size_t gi = a; gi < b; ++gi) {
                    ProximityMatrix m = engine_.Matrix(groups_[gi]);
                    std::vector<double> lower(m.values().begin(),
                                              m.values().end());
                    for (double& x : lower) x -= m.half_width();
                    out[gi] = std::move(lower);
                  }
                });
    return out;
  }

  const ProximityEngine& engine_;
  const std::vector<std::vector<Edge>>& groups_;
  bool cached_ = false;
  std::vector<std::vector<double>> table_;
};

struct WitnessSolution {
  EdgeAddition edges;
  double target = 0.0;
  std::size_t num_sets = 0;
  std::int64_t budget = 0;
};

// Everything one sample stream needs to answer the feasibility predicate.
struct WitnessContext {
  WitnessContext(const InformationGraph& g, const EstimatorConfig& cfg,
                 const std::vector<std::vector<Edge>>& groups)
      : engine(g, cfg), base(engine.Matrix()), table(engine, groups) {}

  ProximityEngine engine;
  ProximityMatrix base;
  GroupTable table;
};

std::optional<WitnessSolution> SolveTarget(
    WitnessContext& ctx, const std::vector<std::vector<Edge>>& groups,
    WitnessVariant variant, int k, double x) {
  const int n = ctx.base.size();
  const double b =
      WitnessThreshold(variant, k, x, ctx.engine.graph().alpha());
  std::vector<std::pair<VertexId, VertexId>> deficient;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (ctx.base.value(u, v) < b) deficient.emplace_back(u, v);
    }
  }
  WitnessSolution sol;
  sol.target = x;
  sol.num_sets = deficient.size();
  sol.budget = WitnessEdgeBudget(variant, k, deficient.size());
  if (deficient.empty()) return sol;

  HittingSetInstance inst;
  inst.universe_size = groups.size();
  inst.sets.resize(deficient.size());
  ctx.table.ForEach([&](std::size_t gi, const std::vector<double>& lower) {
    for (std::size_t s = 0; s < deficient.size(); ++s) {
      const auto [u, v] = deficient[s];
      if (lower[static_cast<std::size_t>(u) * n + v] >= b) {
        inst.sets[s].push_back(gi);
      }
    }
  });
  for (const auto& set : inst.sets) {
    if (set.empty()) return std::nullopt;
  }
  for (std::size_t gi : GreedyHittingSet(inst)) {
    for (const Edge& e : groups[gi]) sol.edges.Insert(e);
  }
  if (static_cast<std::int64_t>(sol.edges.size()) > sol.budget) {
    return std::nullopt;
  }
  return sol;
}

}  // namespace

int WitnessGroupSize(WitnessVariant variant) {
  return variant == WitnessVariant::kThree ? 3 : 2;
}

double WitnessThreshold(WitnessVariant variant, int k, double x,
                        double alpha) {
  const double kk = k;
  if (variant == WitnessVariant::kThree) {
    return 4.0 * x / (12.0 * std::pow(kk, 4.0) + 3.0 * kk * kk);
  }
  return x * alpha / (12.0 * kk * kk + 3.0);
}

std::int64_t WitnessEdgeBudget(WitnessVariant variant, int k,
                               std::size_t num_sets) {
  std::int64_t groups = 0;
  if (variant == WitnessVariant::kThree) {
    const std::int64_t s = 7 * static_cast<std::int64_t>(k) - 6;
    groups = Choose(s, 3) + Choose(s, 2) + s;
  } else {
    const std::int64_t s = Choose(2 * static_cast<std::int64_t>(k), 2);
    groups = Choose(s, 2) + s;
  }
  return WitnessGroupSize(variant) * groups * GreedyFactor(num_sets);
}

std::vector<Edge> DefaultWitnessPool(const InformationGraph& g, int cap) {
  std::vector<Edge> pool = g.NonEdges();
  if (static_cast<int>(pool.size()) <= cap) return pool;
  std::stable_sort(pool.begin(), pool.end(), [&](const Edge& a, const Edge& b) {
    return g.Degree(a.u) + g.Degree(a.v) < g.Degree(b.u) + g.Degree(b.v);
  });
  pool.resize(std::max(cap, 0));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::vector<Edge>> EnumerateGroups(std::span<const Edge> pool,
                                               int c) {
  std::vector<std::vector<Edge>> out;
  const int p = static_cast<int>(pool.size());
  std::vector<int> idx;
  for (int size = 1; size <= c && size <= p; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Edge> group;
      for (int i : idx) group.push_back(pool[i]);
      out.push_back(std::move(group));
      int i = size - 1;
      while (i >= 0 && idx[i] == p - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<WitnessCandidate> EnumerateWitnesses(
    const InformationGraph& g, VertexId u, VertexId v, double b, int c,
    std::span<const Edge> pool, const EstimatorConfig& cfg, int pool_cap) {
  if (c < 1 || c > 3) {
    throw Error(ErrorKind::kInvalidParameter,
                "witness size must be 1, 2 or 3, got " + std::to_string(c));
  }
  CheckPool(g, pool, pool_cap);
  ProximityEngine engine(g, cfg);
  if (engine.Pair(u, v).value >= b) return {};
  const auto groups = EnumerateGroups(pool, c);
  std::vector<char> ok(groups.size(), 0);
  ParallelFor(ResolveWorkers(cfg.workers), groups.size(),
              [&](std::size_t a, std::size_t e) {
                for (std::size_t gi = a; gi < e; ++gi) {
                  ok[gi] = engine.Pair(u, v, groups[gi]).Lower() >= b;
                }
              });
  std::vector<WitnessCandidate> out;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (!ok[gi]) continue;
    out.push_back({groups[gi], {{std::min(u, v), std::max(u, v), b}}});
  }
  return out;
}

AugmentationResult ImproveWitness(const InformationGraph& g, int k,
                                  double epsilon, WitnessVariant variant,
                                  const WitnessOptions& options) {
  Stopwatch clock;
  CheckBudgetParameter(k);
  CheckEpsilon(epsilon);
  const std::vector<Edge> pool =
      options.pool ? *options.pool : DefaultWitnessPool(g, options.pool_cap);
  CheckPool(g, pool, options.pool_cap);
  const auto groups = EnumerateGroups(pool, WitnessGroupSize(variant));

  WitnessContext ctx(g, options.estimator, groups);
  const BroadcastValue before = Broadcast(ctx.base);
  const SearchGrid grid = MakeSearchGrid(before.value.value, epsilon);

  std::function<std::optional<WitnessSolution>(int)> feasible =
      [&](int i) { return SolveTarget(ctx, groups, variant, k, grid.Value(i)); };
  std::function<std::optional<WitnessSolution>(int)> verify;
  std::optional<WitnessContext> fresh;
  if (options.estimator.method == EstimationMethod::kMonteCarlo) {
    EstimatorConfig reseeded = options.estimator;
    reseeded.seed = ChildSeed(options.estimator.seed, 0x7665726966ULL);
    verify = [&, reseeded](int i) {
      if (!fresh) fresh.emplace(g, reseeded, groups);
      return SolveTarget(*fresh, groups, variant, k, grid.Value(i));
    };
  }
  const auto outcome =
      FeasibilityBinarySearch<WitnessSolution>(grid, feasible, verify);

  AugmentationResult r;
  r.algorithm = variant == WitnessVariant::kThree ? Algorithm::kWitness3
                                                  : Algorithm::kWitness2;
  r.k = k;
  r.epsilon = epsilon;
  r.edges = outcome.solution.edges;
  r.before = before.value;
  r.after = Broadcast(ctx.engine.Matrix(r.edges.edges())).value;
  auto& d = r.diagnostics;
  d.grid_index = outcome.index;
  d.grid_size = grid.size();
  d.target = grid.Value(outcome.index);
  d.edge_budget = outcome.solution.budget;
  d.num_sets = outcome.solution.num_sets;
  d.universe_size = groups.size();
  d.predicate_calls = outcome.predicate_calls;
  d.runtime_ms = clock.ElapsedMs();
  return r;
}

}  // namespace bikit
