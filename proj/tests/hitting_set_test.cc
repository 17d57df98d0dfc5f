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

#include <random>
#include <vector>

#include "bikit/augmentation.h"
#include "bikit/error.h"
#include "gtest/gtest.h"
#include "support/test_oracles.h"

namespace bikit {
namespace {

using Picks = std::vector<std::size_t>;

TEST(GreedyHittingSetTest, HandRun) {
  // a = 0, b = 1, c = 2.
  HittingSetInstance inst{3, {{0, 1}, {1, 2}, {0}}};
  EXPECT_EQ(GreedyHittingSet(inst), (Picks{0, 1}));
}

TEST(GreedyHittingSetTest, SharedElement) {
  HittingSetInstance inst{5, {{0, 3}, {3}, {1, 3, 4}, {2, 3}}};
  EXPECT_EQ(GreedyHittingSet(inst), (Picks{3}));
}

TEST(GreedyHittingSetTest, DisjointSingletons) {
  HittingSetInstance inst{4, {{2}, {0}, {3}}};
  EXPECT_EQ(GreedyHittingSet(inst), (Picks{0, 2, 3}));
}

TEST(GreedyHittingSetTest, NoSets) {
  EXPECT_TRUE(GreedyHittingSet(HittingSetInstance{4, {}}).empty());
}

TEST(GreedyHittingSetTest, EmptySetIsInfeasible) {
  try {
    GreedyHittingSet(HittingSetInstance{3, {{0}, {}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
  EXPECT_THROW(GreedyHittingSet(HittingSetInstance{2, {{0, 2}}}), Error);
}

TEST(GreedyHittingSetTest, MatchesReferenceOnRandomInstances) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t universe = 1 + trial % 12;
    std::uniform_int_distribution<std::size_t> elem(0, universe - 1);
    HittingSetInstance inst{universe, {}};
    const int sets = trial % 9;
    for (int s = 0; s < sets; ++s) {
      std::vector<bool> in(universe, false);
      in[elem(rng)] = true;
      for (std::size_t e = 0; e < universe; ++e)
        if (rng() % 4 == 0) in[e] = true;
      std::vector<std::size_t> set;
      for (std::size_t e = 0; e < universe; ++e)
        if (in[e]) set.push_back(e);
      inst.sets.push_back(set);
    }
    Picks picks = GreedyHittingSet(inst);
    EXPECT_EQ(picks, testing::ReferenceGreedy(universe, inst.sets));
    for (const auto& set : inst.sets) {
      bool hit = false;
      for (std::size_t p : picks)
        hit |= std::find(set.begin(), set.end(), p) != set.end();
      EXPECT_TRUE(hit);
    }
  }
}

TEST(GreedyFactorTest, CeilLogPlusOne) {
  EXPECT_EQ(GreedyFactor(0), 0);
  EXPECT_EQ(GreedyFactor(1), 1);
  EXPECT_EQ(GreedyFactor(2), 2);   // ln 2 + 1 = 1.69
  EXPECT_EQ(GreedyFactor(7), 3);   // ln 7 + 1 = 2.95
  EXPECT_EQ(GreedyFactor(8), 4);   // ln 8 + 1 = 3.08
  EXPECT_EQ(GreedyFactor(1000), 8);
}

}  // namespace
}  // namespace bikit
