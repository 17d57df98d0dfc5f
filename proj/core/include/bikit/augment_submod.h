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

#ifndef BIKIT_AUGMENT_SUBMOD_H_
#define BIKIT_AUGMENT_SUBMOD_H_

#include <utility>
#include <vector>

#include "bikit/augmentation.h"
#include "bikit/graph.h"
#include "bikit/proximity.h"

namespace bikit {

// Star-greedy state for one center u and target beta'.
struct PotentialState {
  VertexId center = 0;
  double beta_prime = 0.0;
  double alpha = 0.5;
  // Unordered pairs i < j with prox_G(i, j) < beta' / 2.
  std::vector<std::pair<VertexId, VertexId>> active;
  EdgeAddition chosen;
  // prox_{G+S}(u, .)
  std::vector<double> row;
};

// Builds the state for S = {} from the proximity matrix of G.
PotentialState MakePotentialState(const ProximityMatrix& base, VertexId u,
                                  double beta_prime);

// -log2 p(u,i) - log2 p(u,j) + log2(beta'/2), distances capped as in the
// implied metric.
double MuValue(const PotentialState& state, VertexId i, VertexId j);
// Sum over active pairs of max(0, mu).
double PotentialValue(const PotentialState& state);

// Loop threshold log2(1 / alpha^epsilon).
double PotentialThreshold(double alpha, double epsilon);

// beta' = x alpha^2 / (12k^2 + 3).
double SubmodBetaPrime(double x, int k, double alpha);

// ceil(2k ln(R)) + 1 with R = max(2n^3/eps, 2n^3/(eps * threshold)).
int SubmodIterationBudget(int k, int n, double epsilon, double alpha);

struct GreedyStarOutcome {
  bool within_budget = false;
  EdgeAddition edges;
  int iterations = 0;
  // Potential before the first and after every iteration.
  std::vector<double> potential_trace;
};

// Greedy over non-edges incident to u; each step takes the edge minimizing
// the resulting potential (ties to the smaller far endpoint). Stops once the
// potential is at most the threshold; within_budget is false if that needs
// more than `budget` edges or the candidates run out, and edges then holds
// the partial star.
GreedyStarOutcome GreedyStarForCenter(const InformationGraph& g, VertexId u,
                                      double beta_prime, double epsilon,
                                      int budget, const EstimatorConfig& cfg);
GreedyStarOutcome GreedyStarForCenter(const ProximityEngine& engine,
                                      const ProximityMatrix& base, VertexId u,
                                      double beta_prime, double epsilon,
                                      int budget);

AugmentationResult ImproveSubmod(const InformationGraph& g, int k,
                                 double epsilon, const EstimatorConfig& cfg);

}  // namespace bikit

#endif  // BIKIT_AUGMENT_SUBMOD_H_
