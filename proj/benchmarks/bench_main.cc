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

#include <algorithm>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "bikit/bikit.h"

namespace bikit {
namespace {

InformationGraph RandomGraph(int n, double p, std::uint64_t seed) {
  return Generate({RandomFamily{n, p}, 0.5}, seed).graph;
}

void BM_ExactMatrix(benchmark::State& state) {
  const InformationGraph g = RandomGraph(static_cast<int>(state.range(0)), 0.4, 1);
  EstimatorConfig cfg;
  cfg.exact_edge_limit = 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeProximityMatrix(g, cfg));
  }
  state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_ExactMatrix)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_MonteCarloMatrix(benchmark::State& state) {
  const InformationGraph g = RandomGraph(static_cast<int>(state.range(0)), 0.2, 2);
  EstimatorConfig cfg;
  cfg.method = EstimationMethod::kMonteCarlo;
  cfg.samples = 10000;
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeProximityMatrix(g, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_MonteCarloMatrix)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_GreedyHittingSet(benchmark::State& state) {
  std::mt19937_64 rng(3);
  HittingSetInstance inst;
  inst.universe_size = static_cast<std::size_t>(state.range(0));
  std::uniform_int_distribution<std::size_t> element(0, inst.universe_size - 1);
  for (int s = 0; s < state.range(0); ++s) {
    std::vector<std::size_t> set;
    for (int i = 0; i < 8; ++i) set.push_back(element(rng));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    inst.sets.push_back(std::move(set));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(GreedyHittingSet(inst));
  }
}
BENCHMARK(BM_GreedyHittingSet)->Range(64, 4096);

void BM_Algorithm(benchmark::State& state, Algorithm algorithm) {
  const InformationGraph g = Generate({PathFamily{7}, 0.5}, 0).graph;
  WitnessOptions options;
  options.estimator.exact_edge_limit = 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ImproveBroadcast(algorithm, g, 1, 0.5, options));
  }
}
BENCHMARK_CAPTURE(BM_Algorithm, bicriteria, Algorithm::kBicriteria)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, witness2, Algorithm::kWitness2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, witness3, Algorithm::kWitness3)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, submod, Algorithm::kSubmod)
    ->Unit(benchmark::kMillisecond);

void BM_ImproveReach(benchmark::State& state) {
  const InformationGraph g = Generate({PathFamily{7}, 0.5}, 0).graph;
  EstimatorConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ImproveReach(g, 0, 1, 0.5, cfg));
  }
}
BENCHMARK(BM_ImproveReach)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bikit

BENCHMARK_MAIN();
