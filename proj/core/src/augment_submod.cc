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

#include "bikit/augment_submod.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "bikit/error.h"
#include "bikit/parallel.h"
#include "bikit/random.h"
#include "bikit/search_grid.h"

namespace bikit {
namespace {

double PotentialOfRow(const PotentialState& state,
                      const std::vector<double>& row) {
  const int n = static_cast<int>(row.size());
  const double offset = std::log2(state.beta_prime / 2.0);
  double total = 0.0;
  for (const auto& [i, j] : state.active) {
    const double mu = ClampedDistance(row[i], n, state.alpha) +
                      ClampedDistance(row[j], n, state.alpha) + offset;
    if (mu > 0.0) total += mu;
  }
  return total;
}

struct SubmodSolution {
  EdgeAddition edges;
  VertexId center = 0;
  int iterations = 0;
  std::vector<double> trace;
};

std::optional<SubmodSolution> SolveTarget(const ProximityEngine& engine,
                                          const ProximityMatrix& base,
                                          double beta_prime, double epsilon,
                                          int budget) {
  const int n = base.size();
  std::vector<GreedyStarOutcome> outcomes(n);
  ParallelFor(ResolveWorkers(engine.config().workers), n,
              [&](std::size_t a, std::size_t b) {
                for (std::size_t u = a; u < b; ++u) {
                  outcomes[u] = GreedyStarForCenter(
                      engine, base, static_cast<VertexId>(u), beta_prime,
                      epsilon, budget);
                }
              });
  std::optional<SubmodSolution> best;
  for (VertexId u = 0; u < n; ++u) {
    const auto& o = outcomes[u];
    if (!o.within_budget) continue;
    if (!best || o.edges.size() < best->edges.size()) {
      best = SubmodSolution{o.edges, u, o.iterations, o.potential_trace};
    }
  }
  return best;
}

}  // namespace

PotentialState MakePotentialState(const ProximityMatrix& base, VertexId u,
                                  double beta_prime) {
  PotentialState s;
  s.center = u;
  s.beta_prime = beta_prime;
  s.alpha = base.alpha();
  const int n = base.size();
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (base.value(i, j) < beta_prime / 2.0) s.active.emplace_back(i, j);
    }
  }
  auto row = base.Row(u);
  s.row.assign(row.begin(), row.end());
  return s;
}

double MuValue(const PotentialState& state, VertexId i, VertexId j) {
  const int n = static_cast<int>(state.row.size());
  return ClampedDistance(state.row[i], n, state.alpha) +
         ClampedDistance(state.row[j], n, state.alpha) +
         std::log2(state.beta_prime / 2.0);
}

double PotentialValue(const PotentialState& state) {
  return PotentialOfRow(state, state.row);
}

double PotentialThreshold(double alpha, double epsilon) {
  return epsilon * -std::log2(alpha);
}

double SubmodBetaPrime(double x, int k, double alpha) {
  return x * alpha * alpha / (12.0 * k * k + 3.0);
}

int SubmodIterationBudget(int k, int n, double epsilon, double alpha) {
  const double n3 = 2.0 * std::pow(static_cast<double>(n), 3.0);
  const double thr = PotentialThreshold(alpha, epsilon);
  const double ratio = std::max(n3 / epsilon, n3 / (epsilon * thr));
  return static_cast<int>(std::ceil(2.0 * k * std::log(ratio))) + 1;
}

GreedyStarOutcome GreedyStarForCenter(const InformationGraph& g, VertexId u,
                                      double beta_prime, double epsilon,
                                      int budget, const EstimatorConfig& cfg) {
  ProximityEngine engine(g, cfg);
  return GreedyStarForCenter(engine, engine.Matrix(), u, beta_prime, epsilon,
                             budget);
}

GreedyStarOutcome GreedyStarForCenter(const ProximityEngine& engine,
                                      const ProximityMatrix& base, VertexId u,
                                      double beta_prime, double epsilon,
                                      int budget) {
  const InformationGraph& g = engine.graph();
  if (u < 0 || u >= g.num_vertices()) {
    throw Error(ErrorKind::kVertexRange,
                "center " + std::to_string(u) + " out of range");
  }
  PotentialState state = MakePotentialState(base, u, beta_prime);
  const double threshold = PotentialThreshold(g.alpha(), epsilon);
  GreedyStarOutcome out;
  double psi = PotentialValue(state);
  out.potential_trace.push_back(psi);
  const int workers = ResolveWorkers(engine.config().workers);
  while (psi > threshold) {
    if (out.iterations >= budget) break;
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v != u && !g.HasEdge(u, v) && !state.chosen.Contains(Edge(u, v))) {
        candidates.push_back(v);
      }
    }
    if (candidates.empty()) break;
    std::vector<double> scores(candidates.size());
    std::vector<std::vector<double>> rows(candidates.size());
    ParallelFor(workers, candidates.size(), [&](std::size_t a, std::size_t b) {
      for (std::size_t c = a; c < b; ++c) {
        std::vector<Edge> extra(state.chosen.edges().begin(),
                                state.chosen.edges().end());
        extra.emplace_back(u, candidates[c]);
        rows[c] = engine.Row(u, extra).values;
        scores[c] = PotentialOfRow(state, rows[c]);
      }
    });
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c) {
      if (scores[c] < scores[best]) best = c;
    }
    state.chosen.Insert(Edge(u, candidates[best]));
    state.row = std::move(rows[best]);
    psi = scores[best];
    ++out.iterations;
    out.potential_trace.push_back(psi);
  }
  out.within_budget = psi <= threshold;
  out.edges = state.chosen;
  return out;
}

AugmentationResult ImproveSubmod(const InformationGraph& g, int k,
                                 double epsilon, const EstimatorConfig& cfg) {
  Stopwatch clock;
  CheckBudgetParameter(k);
  CheckEpsilon(epsilon);
  ProximityEngine engine(g, cfg);
  const ProximityMatrix base = engine.Matrix();
  const BroadcastValue before = Broadcast(base);
  const SearchGrid grid = MakeSearchGrid(before.value.value, epsilon);
  const int budget =
      SubmodIterationBudget(k, g.num_vertices(), epsilon, g.alpha());

  std::function<std::optional<SubmodSolution>(int)> feasible = [&](int i) {
    return SolveTarget(engine, base,
                       SubmodBetaPrime(grid.Value(i), k, g.alpha()), epsilon,
                       budget);
  };
  std::function<std::optional<SubmodSolution>(int)> verify;
  std::optional<ProximityEngine> fresh;
  std::optional<ProximityMatrix> fresh_base;
  if (cfg.method == EstimationMethod::kMonteCarlo) {
    verify = [&](int i) {
      if (!fresh) {
        fresh.emplace(engine.Reseeded(ChildSeed(cfg.seed, 0x7665726966ULL)));
        fresh_base.emplace(fresh->Matrix());
      }
      return SolveTarget(*fresh, *fresh_base,
                         SubmodBetaPrime(grid.Value(i), k, g.alpha()), epsilon,
                         budget);
    };
  }
  const auto outcome =
      FeasibilityBinarySearch<SubmodSolution>(grid, feasible, verify);

  AugmentationResult r;
  r.algorithm = Algorithm::kSubmod;
  r.k = k;
  r.epsilon = epsilon;
  r.edges = outcome.solution.edges;
  r.before = before.value;
  r.after = Broadcast(engine.Matrix(r.edges.edges())).value;
  auto& d = r.diagnostics;
  d.grid_index = outcome.index;
  d.grid_size = grid.size();
  d.target = grid.Value(outcome.index);
  d.edge_budget = budget;
  d.center = outcome.solution.center;
  d.iterations = outcome.solution.iterations;
  d.potential_trace = outcome.solution.trace;
  d.predicate_calls = outcome.predicate_calls;
  d.runtime_ms = clock.ElapsedMs();
  return r;
}

}  // namespace bikit
