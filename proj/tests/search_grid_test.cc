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

#include <cmath>
#include <optional>
#include <random>

#include "bikit/error.h"
#include "gtest/gtest.h"
#include "support/test_oracles.h"

namespace bikit {
namespace {

using Pred = std::function<std::optional<int>(int)>;

TEST(SearchGridTest, Values) {
  SearchGrid grid = MakeSearchGrid(0.25, 0.5);
  EXPECT_EQ(grid.last_index, 3);  // 0.25, 0.375, 0.5625, 0.84375
  EXPECT_DOUBLE_EQ(grid.Value(3), 0.84375);
  EXPECT_EQ(MakeSearchGrid(1.0, 0.5).last_index, 0);
  EXPECT_EQ(MakeSearchGrid(0.5, 1.0).last_index, 1);
  EXPECT_THROW(MakeSearchGrid(0.0, 0.5), Error);
  EXPECT_THROW(MakeSearchGrid(0.5, 0.0), Error);
  EXPECT_THROW(MakeSearchGrid(1.5, 0.5), Error);
}

TEST(SearchGridTest, LengthIsLogarithmic) {
  for (double lo : {1e-9, 1e-4, 0.01, 0.3, 0.999}) {
    for (double eps : {0.05, 0.5, 2.0}) {
      SearchGrid grid = MakeSearchGrid(lo, eps);
      EXPECT_LE(grid.Value(grid.last_index), 1.0);
      EXPECT_GT(grid.Value(grid.last_index + 1), 1.0);
      EXPECT_NEAR(grid.last_index,
                  std::floor(std::log(1 / lo) / std::log1p(eps)), 1.0);
    }
  }
}

TEST(BinarySearchTest, AlwaysFeasibleGivesLastIndex) {
  SearchGrid grid = MakeSearchGrid(0.01, 0.5);
  auto out = FeasibilityBinarySearch<int>(
      grid, Pred([](int i) { return std::optional<int>(i * 10); }));
  EXPECT_EQ(out.index, grid.last_index);
  EXPECT_EQ(out.solution, grid.last_index * 10);
}

TEST(BinarySearchTest, OnlyIndexZero) {
  SearchGrid grid = MakeSearchGrid(0.01, 0.5);
  auto out = FeasibilityBinarySearch<int>(grid, Pred([](int i) {
    return i == 0 ? std::optional<int>(7) : std::nullopt;
  }));
  EXPECT_EQ(out.index, 0);
  EXPECT_EQ(out.solution, 7);
}

TEST(BinarySearchTest, IndexZeroFeasibleEvenIfPredicateFails) {
  SearchGrid grid = MakeSearchGrid(0.01, 0.5);
  auto out = FeasibilityBinarySearch<int>(
      grid, Pred([](int) { return std::optional<int>(); }));
  EXPECT_EQ(out.index, 0);
  EXPECT_EQ(out.solution, 0);
}

TEST(BinarySearchTest, MatchesLinearScanOnMonotonePredicates) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    SearchGrid grid = MakeSearchGrid(std::pow(0.5, 1 + trial % 20), 0.3);
    std::uniform_int_distribution<int> cut(0, grid.last_index);
    const int threshold = cut(rng);
    auto pred = [&](int i) {
      return i <= threshold ? std::optional<int>(i) : std::nullopt;
    };
    auto out = FeasibilityBinarySearch<int>(grid, Pred(pred));
    EXPECT_EQ(out.index, testing::LinearScanLargest(
                             grid.size(), [&](int i) { return pred(i).has_value(); }));
    EXPECT_LE(out.predicate_calls,
              2 + static_cast<int>(std::ceil(std::log2(grid.size() + 1))));
  }
}

TEST(BinarySearchTest, VerifyStepsDown) {
  SearchGrid grid = MakeSearchGrid(0.001, 0.5);
  auto feasible = [](int) { return std::optional<int>(1); };
  auto verify = [](int i) {
    return i <= 4 ? std::optional<int>(2) : std::nullopt;
  };
  auto out = FeasibilityBinarySearch<int>(grid, Pred(feasible), Pred(verify));
  EXPECT_EQ(out.index, 4);
  EXPECT_EQ(out.solution, 2);
}

}  // namespace
}  // namespace bikit
