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

#ifndef BIKIT_SEARCH_GRID_H_
#define BIKIT_SEARCH_GRID_H_

#include <cmath>
#include <functional>
#include <optional>

namespace bikit {

// Targets lo * (1 + epsilon)^i for i = 0..last_index, where last_index is
// the largest i with lo * (1 + epsilon)^i <= 1.
struct SearchGrid {
  double epsilon = 0.5;
  double lo = 1.0;
  int last_index = 0;

  int size() const { return last_index + 1; }
  double Value(int i) const { return lo * std::pow(1.0 + epsilon, i); }
};

// Throws kInvalidParameter unless 0 < lo <= 1 and epsilon > 0.
SearchGrid MakeSearchGrid(double lo, double epsilon);

template <typename Solution>
struct SearchOutcome {
  int index = 0;
  Solution solution{};
  int predicate_calls = 0;
};

// Binary search for the largest grid index whose predicate succeeds,
// keeping "lo feasible, hi infeasible" with a virtual infeasible index
// last_index + 1. Index 0 counts as feasible even if the predicate fails
// there; its solution is then the default Solution (no additions).
//
// If `verify` is given (noisy predicates), the returned index is re-checked
// with it and stepped down until verification passes or index 0 is reached.
template <typename Solution>
SearchOutcome<Solution> FeasibilityBinarySearch(
    const SearchGrid& grid,
    const std::function<std::optional<Solution>(int)>& feasible,
    const std::function<std::optional<Solution>(int)>& verify = nullptr) {
  SearchOutcome<Solution> out;
  int lo = 0;
  int hi = grid.last_index + 1;
  std::optional<Solution> best;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    ++out.predicate_calls;
    if (auto s = feasible(mid)) {
      lo = mid;
      best = std::move(s);
    } else {
      hi = mid;
    }
  }
  if (verify) {
    while (lo > 0) {
      ++out.predicate_calls;
      if (auto s = verify(lo)) {
        best = std::move(s);
        break;
      }
      --lo;
      best.reset();
    }
  }
  if (lo == 0 && !best) {
    ++out.predicate_calls;
    best = verify ? verify(0) : feasible(0);
  }
  out.index = lo;
  if (best) out.solution = std::move(*best);
  return out;
}

}  // namespace bikit

#endif  // BIKIT_SEARCH_GRID_H_
