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

#ifndef BIKIT_ORACLE_H_
#define BIKIT_ORACLE_H_

#include <cstdint>

#include "bikit/graph.h"
#include "bikit/proximity.h"

namespace bikit {

struct OracleLimits {
  int max_non_edges = 15;
  int max_total_edges = 20;  // m + k
  std::int64_t max_subsets = 10'000'000;  // k-center subsets
  int workers = 0;
};

struct BroadcastOptimum {
  double beta_star = 0.0;
  EdgeAddition best;
};

struct ReachOptimum {
  double upsilon_star = 0.0;
  EdgeAddition best;
  VertexId argmin = 0;  // vertex attaining the reach after `best`
};

// Exact optimum over all min(k, #non-edges)-subsets of non-edges. Ties within
// a relative 1e-12 keep the lexicographically smallest edge set. Throws
// kLimitExceeded outside `limits`.
BroadcastOptimum BruteForceBroadcastOpt(const InformationGraph& g, int k,
                                        const OracleLimits& limits = {});
ReachOptimum BruteForceReachOpt(const InformationGraph& g, VertexId source,
                                int k, const OracleLimits& limits = {});

// Minimum over all center subsets of size `count` of the covering radius.
double BruteForceKCenter(const ImpliedMetric& metric, int count,
                         const OracleLimits& limits = {});

struct FundamentalCheck {
  bool hypothesis = false;  // Pr[P_u or P_0] >= beta and Pr[P_0] <= beta/2
  bool conclusion = false;  // Pr[P_u[i,u]] * Pr[P_u[u,j]] >= beta/2
  double p_union = 0.0;
  double p_avoiding = 0.0;
  double p_prefix = 0.0;
  double p_suffix = 0.0;
  std::int64_t paths_through = 0;
  std::int64_t paths_avoiding = 0;

  bool Holds() const { return !hypothesis || conclusion; }
};

// Simple-path cap of the fundamental-inequality check.
inline constexpr std::int64_t kMaxSimplePaths = 100000;

// P_u: simple i-j paths through u; P_0: simple i-j paths avoiding u. All
// probabilities are path-set contributions computed by exhaustive subset
// enumeration (needs m <= limits.max_total_edges, at most kMaxSimplePaths
// paths). Requires i, j, u distinct.
FundamentalCheck CheckFundamentalInequality(const InformationGraph& g,
                                            VertexId i, VertexId j,
                                            VertexId u, double beta,
                                            const OracleLimits& limits = {});

// Probability that at least one edge set in `paths` is fully present
// (bitmasks over the edge indices of g). Requires m <= 26.
double PathSetContribution(int num_edges, double alpha,
                           const std::vector<std::uint32_t>& paths);

}  // namespace bikit

#endif  // BIKIT_ORACLE_H_
