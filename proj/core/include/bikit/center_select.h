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

#ifndef BIKIT_CENTER_SELECT_H_
#define BIKIT_CENTER_SELECT_H_

#include <vector>

#include "bikit/graph.h"
#include "bikit/proximity.h"

namespace bikit {

struct CenterSelection {
  std::vector<VertexId> centers;
  // max over vertices of the distance to the nearest center
  double radius = 0.0;
  // assignment[v] = index into `centers` of v's nearest center
  std::vector<int> assignment;
};

// Farthest-first traversal starting at vertex 0; ties go to the smallest
// index. count is clamped to n. Throws kInvalidParameter for count < 1.
CenterSelection GonzalezCenters(const ImpliedMetric& metric, int count);

// Star from hubs[0] to every other hub, skipping edges already in g.
EdgeAddition StarEdges(const InformationGraph& g,
                       const std::vector<VertexId>& hubs);

}  // namespace bikit

#endif  // BIKIT_CENTER_SELECT_H_
