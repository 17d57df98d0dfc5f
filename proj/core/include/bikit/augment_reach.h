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

#ifndef BIKIT_AUGMENT_REACH_H_
#define BIKIT_AUGMENT_REACH_H_

#include "bikit/augment_witness.h"
#include "bikit/augmentation.h"
#include "bikit/graph.h"
#include "bikit/proximity.h"

namespace bikit {

// Per-vertex thresholds at grid target x.
inline double ReachWitnessThreshold(double x, int k) {
  return x / (2.0 * k + 2.0);
}
inline double ReachBallRadius(double x, int k, double alpha) {
  return x / (1.0 + 2.0 * k * alpha);
}

// Hitting set over single-edge witnesses: every vertex u with
// prox(v_s, u) < x needs one non-edge lifting prox(v_s, u) to x/(2k+2).
AugmentationResult ImproveReachWitness(const InformationGraph& g,
                                       VertexId source, int k, double epsilon,
                                       const EstimatorConfig& cfg);

// Hitting set over vertices: every vertex u whose x/(1+2k alpha)-neighborhood
// misses v_s needs a chosen vertex in that neighborhood; chosen vertices are
// joined to v_s.
AugmentationResult ImproveReachBall(const InformationGraph& g,
                                    VertexId source, int k, double epsilon,
                                    const EstimatorConfig& cfg);

// Runs both reductions and keeps the larger achieved reach (ties to the
// witness branch).
AugmentationResult ImproveReach(const InformationGraph& g, VertexId source,
                                int k, double epsilon,
                                const EstimatorConfig& cfg);

// Runs a broadcast algorithm and reports the reach of `source`.
AugmentationResult ReachViaBroadcast(const InformationGraph& g,
                                     VertexId source, int k,
                                     Algorithm broadcast_algorithm,
                                     double epsilon,
                                     const WitnessOptions& options);

// Dispatches to the broadcast algorithm named by `algorithm`. epsilon is
// ignored by the k-center algorithms.
AugmentationResult ImproveBroadcast(Algorithm algorithm,
                                    const InformationGraph& g, int k,
                                    double epsilon,
                                    const WitnessOptions& options);

}  // namespace bikit

#endif  // BIKIT_AUGMENT_REACH_H_
