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

#ifndef BIKIT_HITTING_SET_H_
#define BIKIT_HITTING_SET_H_

#include <cstddef>
#include <vector>

namespace bikit {

struct HittingSetInstance {
  std::size_t universe_size = 0;
  // Each set lists universe indices, ascending and without repeats.
  std::vector<std::vector<std::size_t>> sets;
};

// Greedy: repeatedly takes the element hitting the most unhit sets, ties to
// the smallest index. Returns the picks in order. Throws kInfeasible when a
// set is empty and kInvalidParameter for out-of-range indices.
std::vector<std::size_t> GreedyHittingSet(const HittingSetInstance& instance);

}  // namespace bikit

#endif  // BIKIT_HITTING_SET_H_
