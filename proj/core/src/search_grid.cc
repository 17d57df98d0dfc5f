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

#include "bikit/search_grid.h"

#include <string>

#include "bikit/error.h"

namespace bikit {

SearchGrid MakeSearchGrid(double lo, double epsilon) {
  if (!(lo > 0.0) || lo > 1.0) {
    throw Error(ErrorKind::kInvalidParameter,
                "grid start must lie in (0, 1], got " + std::to_string(lo));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::kInvalidParameter,
                "epsilon must be positive, got " + std::to_string(epsilon));
  }
  SearchGrid grid;
  grid.epsilon = epsilon;
  grid.lo = lo;
  int i = static_cast<int>(std::floor(std::log(1.0 / lo) / std::log1p(epsilon)));
  if (i < 0) i = 0;
  // Guard against rounding in the logarithms.
  while (i > 0 && grid.Value(i) > 1.0) --i;
  while (grid.Value(i + 1) <= 1.0) ++i;
  grid.last_index = i;
  return grid;
}

}  // namespace bikit
