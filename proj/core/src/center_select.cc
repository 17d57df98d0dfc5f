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

#include "bikit/center_select.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "bikit/error.h"

namespace bikit {

CenterSelection GonzalezCenters(const ImpliedMetric& metric, int count) {
  if (count < 1) {
    throw Error(ErrorKind::kInvalidParameter,
                "center count must be at least 1, got " +
                    std::to_string(count));
  }
  const int n = metric.size();
  count = std::min(count, n);
  CenterSelection sel;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  sel.assignment.assign(n, 0);
  VertexId next = 0;
  for (int c = 0; c < count; ++c) {
    sel.centers.push_back(next);
    for (VertexId v = 0; v < n; ++v) {
      const double d = metric.at(next, v);
      if (d < nearest[v]) {
        nearest[v] = d;
        sel.assignment[v] = c;
      }
    }
    nearest[next] = 0.0;
    sel.assignment[next] = c;
    double far = -1.0;
    for (VertexId v = 0; v < n; ++v) {
      if (nearest[v] > far) {
        far = nearest[v];
        next = v;
      }
    }
  }
  sel.radius = *std::max_element(nearest.begin(), nearest.end());
  return sel;
}

EdgeAddition StarEdges(const InformationGraph& g,
                       const std::vector<VertexId>& hubs) {
  if (hubs.empty()) {
    throw Error(ErrorKind::kInvalidParameter, "star needs at least one hub");
  }
  if (std::set<VertexId>(hubs.begin(), hubs.end()).size() != hubs.size()) {
    throw Error(ErrorKind::kInvalidParameter, "star hubs must be distinct");
  }
  EdgeAddition out;
  for (std::size_t i = 1; i < hubs.size(); ++i) {
    Edge e(hubs[0], hubs[i]);
    if (!g.HasEdge(e)) out.Insert(e);
  }
  return out;
}

}  // namespace bikit
