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

#ifndef BIKIT_AUGMENT_WITNESS_H_
#define BIKIT_AUGMENT_WITNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bikit/augmentation.h"
#include "bikit/graph.h"
#include "bikit/proximity.h"

namespace bikit {

// (i): groups of up to three edges; (ii): groups of up to two edges.
enum class WitnessVariant { kThree, kTwo };

struct CertifiedPair {
  VertexId u = 0;
  VertexId v = 0;
  double b = 0.0;
};

// A group of candidate additions and the (u, v, b) targets it reaches.
struct WitnessCandidate {
  std::vector<Edge> edges;
  std::vector<CertifiedPair> certified;
};

inline constexpr int kDefaultPoolCap = 32;

struct WitnessOptions {
  EstimatorConfig estimator;
  int pool_cap = kDefaultPoolCap;
  // Explicit candidate pool; defaults to all non-edges pruned to pool_cap.
  std::optional<std::vector<Edge>> pool;
};

int WitnessGroupSize(WitnessVariant variant);

// Per-pair threshold b for grid target x:
//   (i)  4x / (12k^4 + 3k^2)      (ii)  x alpha / (12k^2 + 3)
double WitnessThreshold(WitnessVariant variant, int k, double x,
                        double alpha);

// Edge budget for a hitting-set instance with num_sets sets: group size
// times the number of groups a witnessing solution can contain, times the
// greedy factor ceil(ln(num_sets) + 1). Zero when num_sets is 0.
std::int64_t WitnessEdgeBudget(WitnessVariant variant, int k,
                               std::size_t num_sets);

// All non-edges; when more than `cap`, keeps the `cap` with the smallest
// endpoint-degree sum (ties lexicographic). Result is sorted.
std::vector<Edge> DefaultWitnessPool(const InformationGraph& g, int cap);

// All groups of 1..c pool edges, by size and then lexicographically by pool
// position.
std::vector<std::vector<Edge>> EnumerateGroups(std::span<const Edge> pool,
                                               int c);

// Groups of at most c pool edges whose addition lifts prox(u, v) to at least
// b (Monte Carlo: value - half_width >= b). Empty if prox(u, v) >= b already.
// Throws kLimitExceeded when the pool is larger than pool_cap and
// kDuplicateEdge when a pool edge is already in g.
std::vector<WitnessCandidate> EnumerateWitnesses(
    const InformationGraph& g, VertexId u, VertexId v, double b, int c,
    std::span<const Edge> pool, const EstimatorConfig& cfg,
    int pool_cap = kDefaultPoolCap);

AugmentationResult ImproveWitness(const InformationGraph& g, int k,
                                  double epsilon, WitnessVariant variant,
                                  const WitnessOptions& options);

}  // namespace bikit

#endif  // BIKIT_AUGMENT_WITNESS_H_
