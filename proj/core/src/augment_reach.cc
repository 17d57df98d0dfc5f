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

#include "bikit/augment_reach.h"

#include <optional>
#include <string>

#include "bikit/augment_kcenter.h"
#include "bikit/augment_submod.h"
#include "bikit/error.h"
#include "bikit/hitting_set.h"
#include "bikit/parallel.h"
#include "bikit/random.h"
#include "bikit/search_grid.h"

namespace bikit {
namespace {

constexpr std::size_t kMaxCachedEntries = std::size_t{1} << 24;
constexpr std::uint64_t kVerifyStream = 0x7665726966ULL;

void CheckSource(const InformationGraph& g, VertexId source) {
  if (source < 0 || source >= g.num_vertices()) {
    throw Error(ErrorKind::kVertexRange,
                "source " + std::to_string(source) + " out of range");
  }
}

struct ReachSolution {
  EdgeAddition edges;
  std::size_t num_sets = 0;
  std::int64_t budget = 0;
};

// Lower-confidence rows prox_{G+e}(v_s, .) for every single non-edge e.
class SingleEdgeRows {
 public:
  SingleEdgeRows(const ProximityEngine& engine, VertexId source,
                 std::vector<Edge> pool)
      : engine_(engine), source_(source), pool_(std::move(pool)) {
    cached_ = pool_.size() * engine.graph().num_vertices() <=
              kMaxCachedEntries;
  }

  const std::vector<Edge>& pool() const { return pool_; }

  std::vector<std::vector<double>> Rows() {
    if (cached_ && !table_.empty()) return table_;
    std::vector<std::vector<double>> out(pool_.size());
    ParallelFor(ResolveWorkers(engine_.config().workers), pool_.size(),
                [&](std::size_t a, std::size_t b) {
                  for (std::size_t i = a; i < b; ++i) {
                    ProximityRow r = engine_.Row(source_, {&pool_[i], 1});
                    for (double& x : r.values) x -= r.half_width;
                    out[i] = std::move(r.values);
                  }
                });
    if (cached_) table_ = out;
    return out;
  }

 private:
  const ProximityEngine& engine_;
  VertexId source_;
  std::vector<Edge> pool_;
  bool cached_ = false;
  std::vector<std::vector<double>> table_;
};

struct WitnessContext {
  WitnessContext(const InformationGraph& g, const EstimatorConfig& cfg,
                 VertexId source)
      : engine(g, cfg),
        base(engine.Row(source)),
        rows(engine, source, g.NonEdges()) {}
  ProximityEngine engine;
  ProximityRow base;
  SingleEdgeRows rows;
};

std::optional<ReachSolution> SolveWitness(WitnessContext& ctx, int k,
                                          double x) {
  const double thr = ReachWitnessThreshold(x, k);
  std::vector<VertexId> deficient;
  for (VertexId u = 0; u < static_cast<VertexId>(ctx.base.values.size());
       ++u) {
    if (u != ctx.base.source && ctx.base.values[u] < x) {
      deficient.push_back(u);
    }
  }
  ReachSolution sol;
  sol.num_sets = deficient.size();
  sol.budget = 2 * static_cast<std::int64_t>(k) * GreedyFactor(sol.num_sets);
  if (deficient.empty()) return sol;
  const auto rows = ctx.rows.Rows();
  HittingSetInstance inst;
  inst.universe_size = rows.size();
  inst.sets.resize(deficient.size());
  for (std::size_t e = 0; e < rows.size(); ++e) {
    for (std::size_t s = 0; s < deficient.size(); ++s) {
      if (rows[e][deficient[s]] >= thr) inst.sets[s].push_back(e);
    }
  }
  for (const auto& set : inst.sets) {
    if (set.empty()) return std::nullopt;
  }
  for (std::size_t e : GreedyHittingSet(inst)) {
    sol.edges.Insert(ctx.rows.pool()[e]);
  }
  if (static_cast<std::int64_t>(sol.edges.size()) > sol.budget) {
    return std::nullopt;
  }
  return sol;
}

struct BallContext {
  BallContext(const InformationGraph& g, const EstimatorConfig& cfg)
      : engine(g, cfg), base(engine.Matrix()) {}
  ProximityEngine engine;
  ProximityMatrix base;
};

std::optional<ReachSolution> SolveBall(const BallContext& ctx,
                                       VertexId source, int k, double x) {
  const InformationGraph& g = ctx.engine.graph();
  const int n = g.num_vertices();
  const double radius = ReachBallRadius(x, k, g.alpha());
  const double hw = ctx.base.half_width();
  ReachSolution sol;
  HittingSetInstance inst;
  inst.universe_size = n;
  for (VertexId u = 0; u < n; ++u) {
    // A ball already holding v_s gives prox(v_s, u) >= radius on its own.
    if (u == source || ctx.base.value(source, u) - hw >= radius) continue;
    std::vector<std::size_t> set;
    for (VertexId w = 0; w < n; ++w) {
      if (w == source) continue;
      if (w == u || ctx.base.value(u, w) - hw >= radius) set.push_back(w);
    }
    inst.sets.push_back(std::move(set));
  }
  sol.num_sets = inst.sets.size();
  sol.budget = 2 * static_cast<std::int64_t>(k) * GreedyFactor(sol.num_sets);
  if (inst.sets.empty()) return sol;
  for (std::size_t w : GreedyHittingSet(inst)) {
    const Edge e(source, static_cast<VertexId>(w));
    if (!g.HasEdge(e)) sol.edges.Insert(e);
  }
  if (static_cast<std::int64_t>(sol.edges.size()) > sol.budget) {
    return std::nullopt;
  }
  return sol;
}

AugmentationResult Finish(Algorithm algorithm, const InformationGraph& g,
                          VertexId source, int k, double epsilon,
                          const ProximityEngine& engine,
                          const ProximityEstimate& before,
                          const SearchGrid& grid,
                          const SearchOutcome<ReachSolution>& outcome,
                          const Stopwatch& clock) {
  AugmentationResult r;
  r.algorithm = algorithm;
  r.k = k;
  r.epsilon = epsilon;
  r.source = source;
  r.edges = outcome.solution.edges;
  r.before = before;
  r.after = Reach(engine.Row(source, r.edges.edges())).value;
  auto& d = r.diagnostics;
  d.grid_index = outcome.index;
  d.grid_size = grid.size();
  d.target = grid.Value(outcome.index);
  d.edge_budget = outcome.solution.budget;
  d.num_sets = outcome.solution.num_sets;
  d.predicate_calls = outcome.predicate_calls;
  d.alpha_at_most_half = g.alpha() <= 0.5;
  d.runtime_ms = clock.ElapsedMs();
  return r;
}

}  // namespace

AugmentationResult ImproveReachWitness(const InformationGraph& g,
                                       VertexId source, int k, double epsilon,
                                       const EstimatorConfig& cfg) {
  Stopwatch clock;
  CheckBudgetParameter(k);
  CheckEpsilon(epsilon);
  CheckSource(g, source);
  WitnessContext ctx(g, cfg, source);
  const ProximityEstimate before = Reach(ctx.base).value;
  const SearchGrid grid = MakeSearchGrid(before.value, epsilon);
  std::function<std::optional<ReachSolution>(int)> feasible = [&](int i) {
    return SolveWitness(ctx, k, grid.Value(i));
  };
  std::function<std::optional<ReachSolution>(int)> verify;
  std::optional<WitnessContext> fresh;
  if (cfg.method == EstimationMethod::kMonteCarlo) {
    EstimatorConfig reseeded = cfg;
    reseeded.seed = ChildSeed(cfg.seed, kVerifyStream);
    verify = [&, reseeded](int i) {
      if (!fresh) fresh.emplace(g, reseeded, source);
      return SolveWitness(*fresh, k, grid.Value(i));
    };
  }
  const auto outcome =
      FeasibilityBinarySearch<ReachSolution>(grid, feasible, verify);
  AugmentationResult r =
      Finish(Algorithm::kReachWitness, g, source, k, epsilon, ctx.engine,
             before, grid, outcome, clock);
  r.diagnostics.universe_size = ctx.rows.pool().size();
  return r;
}

AugmentationResult ImproveReachBall(const InformationGraph& g,
                                    VertexId source, int k, double epsilon,
                                    const EstimatorConfig& cfg) {
  Stopwatch clock;
  CheckBudgetParameter(k);
  CheckEpsilon(epsilon);
  CheckSource(g, source);
  BallContext ctx(g, cfg);
  const ProximityEstimate before = Reach(ctx.base, source).value;
  const SearchGrid grid = MakeSearchGrid(before.value, epsilon);
  std::function<std::optional<ReachSolution>(int)> feasible = [&](int i) {
    return SolveBall(ctx, source, k, grid.Value(i));
  };
  std::function<std::optional<ReachSolution>(int)> verify;
  std::optional<BallContext> fresh;
  if (cfg.method == EstimationMethod::kMonteCarlo) {
    EstimatorConfig reseeded = cfg;
    reseeded.seed = ChildSeed(cfg.seed, kVerifyStream);
    verify = [&, reseeded](int i) {
      if (!fresh) fresh.emplace(g, reseeded);
      return SolveBall(*fresh, source, k, grid.Value(i));
    };
  }
  const auto outcome =
      FeasibilityBinarySearch<ReachSolution>(grid, feasible, verify);
  AugmentationResult r = Finish(Algorithm::kReachBall, g, source, k, epsilon,
                                ctx.engine, before, grid, outcome, clock);
  r.diagnostics.universe_size = g.num_vertices() - 1;
  return r;
}

AugmentationResult ImproveReach(const InformationGraph& g, VertexId source,
                                int k, double epsilon,
                                const EstimatorConfig& cfg) {
  Stopwatch clock;
  std::optional<AugmentationResult> branch[2];
  ParallelFor(ResolveWorkers(cfg.workers), 2,
              [&](std::size_t a, std::size_t b) {
                for (std::size_t i = a; i < b; ++i) {
                  branch[i] = i == 0
                                  ? ImproveReachWitness(g, source, k, epsilon, cfg)
                                  : ImproveReachBall(g, source, k, epsilon, cfg);
                }
              });
  const bool ball_wins = branch[1]->after.value > branch[0]->after.value;
  AugmentationResult r = std::move(*branch[ball_wins ? 1 : 0]);
  r.algorithm = Algorithm::kReach;
  r.diagnostics.branch = ball_wins ? "ball" : "witness";
  r.diagnostics.runtime_ms = clock.ElapsedMs();
  return r;
}

AugmentationResult ImproveBroadcast(Algorithm algorithm,
                                    const InformationGraph& g, int k,
                                    double epsilon,
                                    const WitnessOptions& options) {
  switch (algorithm) {
    case Algorithm::kBicriteria:
      return ImproveBicriteria(g, k, options.estimator);
    case Algorithm::kSingleCriteria:
      return ImproveSingleCriteria(g, k, options.estimator);
    case Algorithm::kWitness3:
      return ImproveWitness(g, k, epsilon, WitnessVariant::kThree, options);
    case Algorithm::kWitness2:
      return ImproveWitness(g, k, epsilon, WitnessVariant::kTwo, options);
    case Algorithm::kSubmod:
      return ImproveSubmod(g, k, epsilon, options.estimator);
    default:
      throw Error(ErrorKind::kInvalidParameter,
                  std::string(AlgorithmName(algorithm)) +
                      " is not a broadcast algorithm");
  }
}

AugmentationResult ReachViaBroadcast(const InformationGraph& g,
                                     VertexId source, int k,
                                     Algorithm broadcast_algorithm,
                                     double epsilon,
                                     const WitnessOptions& options) {
  Stopwatch clock;
  CheckSource(g, source);
  AugmentationResult r =
      ImproveBroadcast(broadcast_algorithm, g, k, epsilon, options);
  ProximityEngine engine(g, options.estimator);
  r.before = Reach(engine.Row(source)).value;
  r.after = Reach(engine.Row(source, r.edges.edges())).value;
  r.algorithm = Algorithm::kReachViaBroadcast;
  r.source = source;
  r.diagnostics.inner_algorithm = broadcast_algorithm;
  r.diagnostics.runtime_ms = clock.ElapsedMs();
  return r;
}

}  // namespace bikit
