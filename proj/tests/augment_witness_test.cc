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

#include "bikit/augment_witness.h"

#include <cmath>
#include <optional>
#include <random>
#include <set>

#include "bikit/error.h"
#include "bikit/generators.h"
#include "bikit/oracle.h"
#include "gtest/gtest.h"
#include "support/test_oracles.h"

namespace bikit {
namespace {

InformationGraph Path(int n, double alpha = 0.5) {
  return Generate({PathFamily{n}, alpha}, 0).graph;
}

WitnessOptions Exact() { return WitnessOptions{}; }

std::int64_t Choose(std::int64_t n, int r) {
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return n < r ? 0 : out;
}

// Hitting-set predicate rebuilt from the naive oracle: returns the union of
// greedily chosen groups, or nullopt when infeasible.
std::optional<std::set<Edge>> ReferencePredicate(const InformationGraph& g,
                                                 int k, int c, double b) {
  const int n = g.num_vertices();
  auto base = testing::NaiveProximityMatrix(g);
  std::vector<std::pair<int, int>> deficient;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (base[u * n + v] < b) deficient.emplace_back(u, v);
  if (deficient.empty()) return std::set<Edge>{};
  auto pool = testing::ComplementEdges(g);
  std::vector<std::vector<Edge>> groups;
  const int p = static_cast<int>(pool.size());
  for (int a = 0; a < p; ++a) groups.push_back({pool[a]});
  if (c >= 2)
    for (int a = 0; a < p; ++a)
      for (int d = a + 1; d < p; ++d) groups.push_back({pool[a], pool[d]});
  if (c >= 3)
    for (int a = 0; a < p; ++a)
      for (int d = a + 1; d < p; ++d)
        for (int e = d + 1; e < p; ++e)
          groups.push_back({pool[a], pool[d], pool[e]});
  std::vector<std::vector<std::size_t>> sets(deficient.size());
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto after = testing::NaiveProximityMatrix(g, groups[gi]);
    for (std::size_t s = 0; s < deficient.size(); ++s) {
      auto [u, v] = deficient[s];
      if (after[u * n + v] >= b) sets[s].push_back(gi);
    }
  }
  for (const auto& s : sets)
    if (s.empty()) return std::nullopt;
  std::set<Edge> chosen;
  for (std::size_t gi : testing::ReferenceGreedy(groups.size(), sets))
    chosen.insert(groups[gi].begin(), groups[gi].end());
  const std::int64_t s = c == 3 ? 7 * k - 6 : Choose(2 * k, 2);
  const std::int64_t witness_groups =
      (c == 3 ? Choose(s, 3) : 0) + Choose(s, 2) + s;
  const auto factor = static_cast<std::int64_t>(
      std::ceil(std::log(static_cast<double>(sets.size())) + 1));
  if (static_cast<std::int64_t>(chosen.size()) > c * witness_groups * factor)
    return std::nullopt;
  return chosen;
}

TEST(EnumerateWitnessesTest, PathOfThree) {
  InformationGraph p3 = Path(3);
  auto pool = p3.NonEdges();
  auto out = EnumerateWitnesses(p3, 0, 2, 0.6, 1, pool, EstimatorConfig{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].edges, (std::vector<Edge>{Edge(0, 2)}));
  ASSERT_EQ(out[0].certified.size(), 1u);
  EXPECT_EQ(out[0].certified[0].u, 0);
  EXPECT_EQ(out[0].certified[0].v, 2);
  EXPECT_EQ(out[0].certified[0].b, 0.6);
}

TEST(EnumerateWitnessesTest, PathOfFour) {
  std::vector<Edge> pool{Edge(0, 3)};
  auto out = EnumerateWitnesses(Path(4), 0, 3, 0.5, 1, pool, EstimatorConfig{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].edges, pool);
  // (0,2) alone lifts prox(0,3) only to 0.3125.
  std::vector<Edge> weak{Edge(0, 2)};
  EXPECT_TRUE(
      EnumerateWitnesses(Path(4), 0, 3, 0.5, 1, weak, EstimatorConfig{}).empty());
}

TEST(EnumerateWitnessesTest, SatisfiedPairIsSkipped) {
  auto pool = Path(4).NonEdges();
  EXPECT_TRUE(
      EnumerateWitnesses(Path(4), 0, 1, 0.5, 3, pool, EstimatorConfig{}).empty());
}

TEST(EnumerateWitnessesTest, PoolCapAndValidation) {
  InformationGraph p8 = Path(8);
  auto pool = p8.NonEdges();  // 21 non-edges
  try {
    EnumerateWitnesses(p8, 0, 7, 0.9, 1, pool, EstimatorConfig{}, 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLimitExceeded);
  }
  std::vector<Edge> bad{Edge(0, 1)};
  EXPECT_THROW(EnumerateWitnesses(p8, 0, 7, 0.9, 1, bad, EstimatorConfig{}),
               Error);
  EXPECT_THROW(EnumerateWitnesses(p8, 0, 7, 0.9, 4, {}, EstimatorConfig{}),
               Error);
}

TEST(EnumerateWitnessesTest, MatchesNaiveCheck) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    InformationGraph g = testing::RandomConnectedGraph(rng, 6, 0.1, 0.5, 7);
    auto pool = g.NonEdges();
    if (pool.size() > 10) pool.resize(10);
    auto base = testing::NaiveProximityMatrix(g);
    const double b = std::min(1.0, base[0 * 6 + 5] * 1.4);
    auto out = EnumerateWitnesses(g, 0, 5, b, 2, pool, EstimatorConfig{});
    std::set<std::vector<Edge>> got;
    for (const auto& w : out) got.insert(w.edges);
    std::set<std::vector<Edge>> expected;
    if (base[5] < b) {
      for (std::size_t a = 0; a < pool.size(); ++a) {
        std::vector<Edge> one{pool[a]};
        if (testing::NaiveProximity(g, 0, 5, one) >= b) expected.insert(one);
        for (std::size_t d = a + 1; d < pool.size(); ++d) {
          std::vector<Edge> two{pool[a], pool[d]};
          if (testing::NaiveProximity(g, 0, 5, two) >= b) expected.insert(two);
        }
      }
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(EnumerateGroupsTest, OrderAndCount) {
  std::vector<Edge> pool{Edge(0, 2), Edge(0, 3), Edge(1, 3), Edge(1, 4)};
  auto groups = EnumerateGroups(pool, 3);
  EXPECT_EQ(groups.size(), 4u + 6u + 4u);
  EXPECT_EQ(groups[0], (std::vector<Edge>{Edge(0, 2)}));
  EXPECT_EQ(groups[4], (std::vector<Edge>{Edge(0, 2), Edge(0, 3)}));
  EXPECT_EQ(groups.back(), (std::vector<Edge>{Edge(0, 3), Edge(1, 3), Edge(1, 4)}));
  EXPECT_EQ(EnumerateGroups(pool, 2).size(), 10u);
}

TEST(WitnessParametersTest, ThresholdsAndBudgets) {
  EXPECT_DOUBLE_EQ(WitnessThreshold(WitnessVariant::kThree, 1, 0.3, 0.5),
                   4 * 0.3 / 15.0);
  EXPECT_DOUBLE_EQ(WitnessThreshold(WitnessVariant::kTwo, 2, 0.3, 0.5),
                   0.3 * 0.5 / 51.0);
  // k = 1: one group of each size, three groups of up to three edges.
  EXPECT_EQ(WitnessEdgeBudget(WitnessVariant::kThree, 1, 1), 3);
  EXPECT_EQ(WitnessEdgeBudget(WitnessVariant::kThree, 2, 8), 3 * (56 + 28 + 8) * 4);
  EXPECT_EQ(WitnessEdgeBudget(WitnessVariant::kTwo, 1, 2), 2 * 1 * 2);
  EXPECT_EQ(WitnessEdgeBudget(WitnessVariant::kTwo, 2, 1), 2 * (15 + 6));
  EXPECT_EQ(WitnessEdgeBudget(WitnessVariant::kTwo, 2, 0), 0);
}

TEST(WitnessPoolTest, DegreePruning) {
  InformationGraph star = Generate({StarFamily{7}, 0.5}, 0).graph;
  EXPECT_EQ(DefaultWitnessPool(star, 100).size(), 15u);
  auto pruned = DefaultWitnessPool(star, 4);
  ASSERT_EQ(pruned.size(), 4u);
  EXPECT_TRUE(std::is_sorted(pruned.begin(), pruned.end()));
  for (const Edge& e : pruned) EXPECT_FALSE(star.HasEdge(e));
}

TEST(ImproveWitnessTest, PathOfFourVariantTwo) {
  InformationGraph p4 = Path(4);
  AugmentationResult r = ImproveWitness(p4, 1, 0.5, WitnessVariant::kTwo, Exact());
  const double beta_star = 0.4375;
  EXPECT_GE(r.after.value, beta_star * 0.5 / (1.5 * 15));
  EXPECT_LE(static_cast<std::int64_t>(r.edges.size()),
            *r.diagnostics.edge_budget);
  EXPECT_EQ(r.algorithm, Algorithm::kWitness2);
}

TEST(ImproveWitnessTest, GridIndexMatchesLinearScan) {
  std::mt19937_64 rng(72);
  std::vector<InformationGraph> graphs{Path(4), Path(5), Path(4, 0.3)};
  for (int i = 0; i < 6; ++i) {
    graphs.push_back(testing::RandomConnectedGraph(rng, 5, 0.15, 0.4, 6));
  }
  for (const auto& g : graphs) {
    for (WitnessVariant variant : {WitnessVariant::kTwo, WitnessVariant::kThree}) {
      const int c = variant == WitnessVariant::kThree ? 3 : 2;
      AugmentationResult r = ImproveWitness(g, 1, 0.5, variant, Exact());
      const int n = g.num_vertices();
      const double lo =
          testing::NaiveBroadcast(n, testing::NaiveProximityMatrix(g));
      const int size = *r.diagnostics.grid_size;
      auto threshold = [&](int i) {
        const double x = lo * std::pow(1.5, i);
        return c == 3 ? 4 * x / 15.0 : x * g.alpha() / 15.0;
      };
      const int best = testing::LinearScanLargest(size, [&](int i) {
        return ReferencePredicate(g, 1, c, threshold(i)).has_value();
      });
      EXPECT_EQ(*r.diagnostics.grid_index, best);
      auto chosen = ReferencePredicate(g, 1, c, threshold(best));
      ASSERT_TRUE(chosen.has_value());
      EXPECT_EQ(std::set<Edge>(r.edges.edges().begin(), r.edges.edges().end()),
                *chosen);
    }
  }
}

TEST(ImproveWitnessTest, CliqueNeedsNothing) {
  InformationGraph k4 = Generate({CliqueFamily{4}, 0.5}, 0).graph;
  for (auto variant : {WitnessVariant::kTwo, WitnessVariant::kThree}) {
    AugmentationResult r = ImproveWitness(k4, 2, 0.5, variant, Exact());
    EXPECT_TRUE(r.edges.empty());
    EXPECT_EQ(r.after.value, r.before.value);
  }
}

TEST(ImproveWitnessTest, PathOfSixVariantThree) {
  InformationGraph p6 = Path(6);
  AugmentationResult r =
      ImproveWitness(p6, 1, 0.5, WitnessVariant::kThree, Exact());
  const double beta_star = BruteForceBroadcastOpt(p6, 1).beta_star;
  EXPECT_LE(static_cast<std::int64_t>(r.edges.size()),
            *r.diagnostics.edge_budget);
  EXPECT_GE(r.after.value, 4 * beta_star / (1.5 * 15));
}

TEST(ImproveWitnessPropertyTest, DeficientPairsReachTheirThreshold) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    InformationGraph g = testing::RandomConnectedGraph(rng, 6, 0.1, 0.5, 7);
    for (auto variant : {WitnessVariant::kTwo, WitnessVariant::kThree}) {
      AugmentationResult r = ImproveWitness(g, 1, 0.5, variant, Exact());
      EXPECT_LE(static_cast<std::int64_t>(r.edges.size()),
                *r.diagnostics.edge_budget);
      const double b = WitnessThreshold(variant, 1, *r.diagnostics.target, 0.5);
      auto before = testing::NaiveProximityMatrix(g);
      auto after = testing::NaiveProximityMatrix(g, r.edges.edges());
      for (std::size_t i = 0; i < before.size(); ++i) {
        if (before[i] < b) {
          EXPECT_GE(after[i] + 1e-12, b);
        }
      }
      EXPECT_GE(r.after.value + 1e-12, std::min(b, r.before.value));
    }
  }
}

TEST(ImproveWitnessTest, ExplicitPoolRestrictsAdditions) {
  WitnessOptions opts;
  opts.pool = std::vector<Edge>{Edge(1, 3)};
  AugmentationResult r = ImproveWitness(Path(4), 1, 0.5, WitnessVariant::kTwo, opts);
  for (const Edge& e : r.edges.edges()) EXPECT_EQ(e, Edge(1, 3));
  WitnessOptions capped;
  capped.pool_cap = 2;
  capped.pool = Path(4).NonEdges();
  EXPECT_THROW(ImproveWitness(Path(4), 1, 0.5, WitnessVariant::kTwo, capped),
               Error);
}

TEST(ImproveWitnessTest, MonteCarloIsDeterministic) {
  WitnessOptions opts;
  opts.estimator.method = EstimationMethod::kMonteCarlo;
  opts.estimator.samples = 4000;
  opts.estimator.seed = 8;
  AugmentationResult a = ImproveWitness(Path(5), 1, 0.5, WitnessVariant::kTwo, opts);
  opts.estimator.workers = 3;
  AugmentationResult b = ImproveWitness(Path(5), 1, 0.5, WitnessVariant::kTwo, opts);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.after.value, b.after.value);
  EXPECT_EQ(*a.diagnostics.grid_index, *b.diagnostics.grid_index);
}

}  // namespace
}  // namespace bikit
