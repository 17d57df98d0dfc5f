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

#ifndef BIKIT_AUGMENTATION_H_
#define BIKIT_AUGMENTATION_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bikit/graph.h"
#include "bikit/proximity.h"

namespace bikit {

enum class Algorithm {
  kBicriteria,
  kSingleCriteria,
  kWitness3,
  kWitness2,
  kSubmod,
  kReachWitness,
  kReachBall,
  kReach,
  kReachViaBroadcast,
};

// CLI names: bicriteria, single, witness3, witness2, submod, reach-witness,
// reach-ball, reach, reach-via-broadcast.
std::string_view AlgorithmName(Algorithm algorithm);
// Throws kInvalidParameter for unknown names.
Algorithm ParseAlgorithm(std::string_view name);
bool IsBroadcastAlgorithm(Algorithm algorithm);

struct AugmentationDiagnostics {
  std::vector<VertexId> centers;
  std::optional<double> radius;
  // Upper bound 2 * radius - 2 log2(alpha) on the optimal diameter in the
  // implied metric (single-criteria only).
  std::optional<double> diameter_bound;
  std::optional<int> grid_index;
  std::optional<int> grid_size;
  std::optional<double> target;
  std::optional<std::int64_t> edge_budget;
  std::optional<std::size_t> num_sets;
  std::optional<std::size_t> universe_size;
  std::optional<VertexId> center;
  std::optional<int> iterations;
  std::vector<double> potential_trace;
  std::optional<std::string> branch;
  std::optional<bool> alpha_at_most_half;
  std::optional<Algorithm> inner_algorithm;
  int predicate_calls = 0;
  double runtime_ms = 0.0;
};

struct AugmentationResult {
  Algorithm algorithm = Algorithm::kBicriteria;
  int k = 0;
  double epsilon = 0.0;  // 0 when the algorithm takes no epsilon
  std::optional<VertexId> source;  // reach algorithms
  EdgeAddition edges;
  // Broadcast for broadcast algorithms, reach of `source` otherwise.
  ProximityEstimate before;
  ProximityEstimate after;
  std::optional<double> optimum;  // supplied beta* or upsilon*
  std::optional<double> guarantee_bound;
  AugmentationDiagnostics diagnostics;
};

// Proven lower bound on the achieved value for a known optimum (beta* for
// broadcast algorithms, upsilon* for reach algorithms). For
// reach-via-broadcast pass the inner broadcast algorithm; its bound is
// evaluated at upsilon*^2.
double GuaranteeBound(Algorithm algorithm, int k, double epsilon,
                      double alpha, double optimum,
                      std::optional<Algorithm> inner = std::nullopt);

// Fills result.optimum and result.guarantee_bound.
void AttachGuarantee(AugmentationResult& result, double alpha,
                     double optimum);

// ceil(ln(num_sets) + 1), or 0 when there are no sets.
std::int64_t GreedyFactor(std::size_t num_sets);

// Edge-count budgets of the fixed-budget algorithms.
inline int BicriteriaBudget(int k) { return 2 * k - 1; }
inline int SingleCriteriaBudget(int k) { return k; }

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void CheckBudgetParameter(int k);
void CheckEpsilon(double epsilon);

}  // namespace bikit

#endif  // BIKIT_AUGMENTATION_H_
