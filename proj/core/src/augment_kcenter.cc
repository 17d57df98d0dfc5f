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

#include "bikit/augment_kcenter.h"

#include <cmath>

#include "bikit/center_select.h"

namespace bikit {
namespace {

AugmentationResult StarOverCenters(const InformationGraph& g, int k,
                                   int count, Algorithm algorithm,
                                   const EstimatorConfig& cfg) {
  Stopwatch clock;
  CheckBudgetParameter(k);
  ProximityEngine engine(g, cfg);
  const ProximityMatrix matrix = engine.Matrix();
  const CenterSelection sel =
      GonzalezCenters(ComputeImpliedMetric(matrix), count);

  AugmentationResult r;
  r.algorithm = algorithm;
  r.k = k;
  r.edges = StarEdges(g, sel.centers);
  r.before = Broadcast(matrix).value;
  r.after = Broadcast(engine.Matrix(r.edges.edges())).value;
  r.diagnostics.centers = sel.centers;
  r.diagnostics.radius = sel.radius;
  r.diagnostics.edge_budget = count - 1;
  r.diagnostics.runtime_ms = clock.ElapsedMs();
  return r;
}

}  // namespace

AugmentationResult ImproveBicriteria(const InformationGraph& g, int k,
                                     const EstimatorConfig& cfg) {
  CheckBudgetParameter(k);
  return StarOverCenters(g, k, 2 * k, Algorithm::kBicriteria, cfg);
}

AugmentationResult ImproveSingleCriteria(const InformationGraph& g, int k,
                                         const EstimatorConfig& cfg) {
  CheckBudgetParameter(k);
  AugmentationResult r =
      StarOverCenters(g, k, k + 1, Algorithm::kSingleCriteria, cfg);
  r.diagnostics.diameter_bound =
      2.0 * *r.diagnostics.radius - 2.0 * std::log2(g.alpha());
  return r;
}

}  // namespace bikit
