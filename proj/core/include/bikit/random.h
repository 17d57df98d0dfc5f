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

#ifndef BIKIT_RANDOM_H_
#define BIKIT_RANDOM_H_

#include <cstdint>

namespace bikit {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used as a counter-based
// generator: every random decision is a pure function of (seed, counters),
// so results do not depend on evaluation order or worker count.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent child stream of `seed` for a given index.
constexpr std::uint64_t ChildSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix64(Mix64(seed) ^ Mix64(index + 0x632be59bd9b4e019ULL));
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double UnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Threshold t such that (bits < t) has probability p for uniform 64-bit bits.
std::uint64_t BernoulliThreshold(double p);

}  // namespace bikit

#endif  // BIKIT_RANDOM_H_
