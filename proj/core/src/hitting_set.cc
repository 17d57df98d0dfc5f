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

#include "bikit/hitting_set.h"

#include <string>

#include "bikit/error.h"

namespace bikit {

std::vector<std::size_t> GreedyHittingSet(const HittingSetInstance& instance) {
  const std::size_t u = instance.universe_size;
  std::vector<std::vector<std::size_t>> containing(u);
  std::vector<std::size_t> count(u, 0);
  for (std::size_t s = 0; s < instance.sets.size(); ++s) {
    const auto& set = instance.sets[s];
    if (set.empty()) {
      throw Error(ErrorKind::kInfeasible,
                  "set " + std::to_string(s) + " cannot be hit");
    }
    for (std::size_t e : set) {
      if (e >= u) {
        throw Error(ErrorKind::kInvalidParameter,
                    "element " + std::to_string(e) + " outside universe");
      }
      containing[e].push_back(s);
      ++count[e];
    }
  }

  std::vector<bool> hit(instance.sets.size(), false);
  std::size_t remaining = instance.sets.size();
  std::vector<std::size_t> picks;
  while (remaining > 0) {
    std::size_t best = 0;
    for (std::size_t e = 1; e < u; ++e) {
      if (count[e] > count[best]) best = e;
    }
    picks.push_back(best);
    for (std::size_t s : containing[best]) {
      if (hit[s]) continue;
      hit[s] = true;
      --remaining;
      for (std::size_t e : instance.sets[s]) --count[e];
    }
  }
  return picks;
}

}  // namespace bikit
