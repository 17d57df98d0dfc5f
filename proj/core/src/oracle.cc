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

#include "bikit/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "bikit/error.h"
#include "bikit/parallel.h"
#include "bikit/partition_distribution.h"

namespace bikit {
namespace {

constexpr double kTieTolerance = 1e-12;

// All r-subsets of {0..p-1} in lexicographic order.
std::vector<std::vector<int>> Combinations(int p, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > p) return out;
  while (true) {
    out.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == p - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

void CheckOracleLimits(const InformationGraph& g, int k,
                       const OracleLimits& limits, int non_edges) {
  if (k < 0) {
    throw Error(ErrorKind::kInvalidParameter,
                "k must be non-negative, got " + std::to_string(k));
  }
  if (non_edges > limits.max_non_edges) {
    throw Error(ErrorKind::kLimitExceeded,
                "oracle needs at most " + std::to_string(limits.max_non_edges) +
                    " non-edges, graph has " + std::to_string(non_edges));
  }
  const int r = std::min(k, non_edges);
  if (g.num_edges() + r > limits.max_total_edges) {
    throw Error(ErrorKind::kLimitExceeded,
                "oracle needs m + k <= " +
                    std::to_string(limits.max_total_edges) + ", got " +
                    std::to_string(g.num_edges() + r));
  }
}

// Evaluates score(G + subset) for every subset and keeps the best.
template <typename Score>
std::pair<double, std::size_t> BestSubset(
    const std::vector<std::vector<Edge>>& subsets, int workers, Score score) {
  std::vector<double> values(subsets.size());
  ParallelFor(workers, subsets.size(), [&](std::size_t a, std::size_t b) {
    for (std::size_t i = a; i < b; ++i) values[i] = score(subsets[i]);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best] * (1.0 + kTieTolerance)) best = i;
  }
  return {values[best], best};
}

std::vector<std::vector<Edge>> CandidateSubsets(const InformationGraph& g,
                                                int k) {
  const std::vector<Edge> non_edges = g.NonEdges();
  const int r = std::min<int>(k, non_edges.size());
  std::vector<std::vector<Edge>> subsets;
  for (const auto& idx : Combinations(non_edges.size(), r)) {
    std::vector<Edge> s;
    for (int i : idx) s.push_back(non_edges[i]);
    subsets.push_back(std::move(s));
  }
  return subsets;
}

}  // namespace

BroadcastOptimum BruteForceBroadcastOpt(const InformationGraph& g, int k,
                                        const OracleLimits& limits) {
  const int non_edges = static_cast<int>(g.NonEdges().size());
  CheckOracleLimits(g, k, limits, non_edges);
  const PartitionDistribution base = PartitionDistribution::ForGraph(g);
  const int n = g.num_vertices();
  const auto subsets = CandidateSubsets(g, k);
  const auto [value, index] =
      BestSubset(subsets, ResolveWorkers(limits.workers),
                 [&](const std::vector<Edge>& s) {
                   const auto m = base.WithEdges(s).PairProbabilities();
                   double lo = 1.0;
                   for (int u = 0; u < n; ++u) {
                     for (int v = u + 1; v < n; ++v) {
                       lo = std::min(lo, m[static_cast<std::size_t>(u) * n + v]);
                     }
                   }
                   return lo;
                 });
  return {value, EdgeAddition(subsets[index])};
}

ReachOptimum BruteForceReachOpt(const InformationGraph& g, VertexId source,
                                int k, const OracleLimits& limits) {
  if (source < 0 || source >= g.num_vertices()) {
    throw Error(ErrorKind::kVertexRange,
                "source " + std::to_string(source) + " out of range");
  }
  const int non_edges = static_cast<int>(g.NonEdges().size());
  CheckOracleLimits(g, k, limits, non_edges);
  const PartitionDistribution base = PartitionDistribution::ForGraph(g);
  const auto subsets = CandidateSubsets(g, k);
  auto reach_of = [&](const std::vector<Edge>& s) {
    const auto row = base.WithEdges(s).RowProbabilities(source);
    double lo = 1.0;
    VertexId arg = source;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v != source && (arg == source || row[v] < lo)) {
        lo = row[v];
        arg = v;
      }
    }
    return std::pair<double, VertexId>(lo, arg);
  };
  const auto [value, index] =
      BestSubset(subsets, ResolveWorkers(limits.workers),
                 [&](const std::vector<Edge>& s) { return reach_of(s).first; });
  return {value, EdgeAddition(subsets[index]), reach_of(subsets[index]).second};
}

double BruteForceKCenter(const ImpliedMetric& metric, int count,
                         const OracleLimits& limits) {
  const int n = metric.size();
  if (count < 1) {
    throw Error(ErrorKind::kInvalidParameter,
                "center count must be at least 1, got " +
                    std::to_string(count));
  }
  count = std::min(count, n);
  double subsets = 1.0;
  for (int i = 1; i <= count; ++i) subsets = subsets * (n - count + i) / i;
  if (subsets > static_cast<double>(limits.max_subsets)) {
    throw Error(ErrorKind::kLimitExceeded,
                "k-center oracle would enumerate " +
                    std::to_string(static_cast<std::int64_t>(subsets)) +
                    " subsets");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& centers : Combinations(n, count)) {
    double radius = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int c : centers) nearest = std::min(nearest, metric.at(c, v));
      radius = std::max(radius, nearest);
    }
    best = std::min(best, radius);
  }
  return best;
}

double PathSetContribution(int num_edges, double alpha,
                           const std::vector<std::uint32_t>& paths) {
  if (num_edges > 26) {
    throw Error(ErrorKind::kLimitExceeded,
                "path-set enumeration needs at most 26 edges");
  }
  const std::uint32_t full = num_edges == 0 ? 1u : (1u << num_edges);
  std::vector<char> covered(full, 0);
  for (std::uint32_t p : paths) covered[p] = 1;
  // Superset closure: a subset contains some path iff a path mask is below it.
  for (int bit = 0; bit < num_edges; ++bit) {
    for (std::uint32_t s = 0; s < full; ++s) {
      if ((s >> bit & 1u) && covered[s ^ (1u << bit)]) covered[s] = 1;
    }
  }
  std::vector<double> weight(num_edges + 1);
  for (int c = 0; c <= num_edges; ++c) {
    weight[c] = std::pow(alpha, c) * std::pow(1.0 - alpha, num_edges - c);
  }
  double total = 0.0;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (covered[s]) total += weight[std::popcount(s)];
  }
  return total;
}

FundamentalCheck CheckFundamentalInequality(const InformationGraph& g,
                                            VertexId i, VertexId j,
                                            VertexId u, double beta,
                                            const OracleLimits& limits) {
  const int n = g.num_vertices();
  for (VertexId x : {i, j, u}) {
    if (x < 0 || x >= n) {
      throw Error(ErrorKind::kVertexRange,
                  "vertex " + std::to_string(x) + " out of range");
    }
  }
  if (i == j || i == u || j == u) {
    throw Error(ErrorKind::kInvalidParameter, "i, j and u must be distinct");
  }
  const int m = g.num_edges();
  if (m > std::min(limits.max_total_edges, 26)) {
    throw Error(ErrorKind::kLimitExceeded,
                "fundamental-inequality check needs at most " +
                    std::to_string(std::min(limits.max_total_edges, 26)) +
                    " edges");
  }
  // Edge index lookup for masks.
  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edges()[e];
    index[static_cast<std::size_t>(ed.u) * n + ed.v] = e;
    index[static_cast<std::size_t>(ed.v) * n + ed.u] = e;
  }

  FundamentalCheck out;
  std::vector<std::uint32_t> through, avoiding, prefix, suffix;
  std::vector<char> on_path(n, 0);
  std::vector<VertexId> stack{i};
  on_path[i] = 1;
  std::int64_t found = 0;
  // Depth-first enumeration of simple i-j paths.
  std::function<void(VertexId, std::uint32_t, std::uint32_t)> dfs =
      [&](VertexId v, std::uint32_t mask, std::uint32_t before_u) {
        if (v == j) {
          if (++found > kMaxSimplePaths) {
            throw Error(ErrorKind::kLimitExceeded,
                        "more than " + std::to_string(kMaxSimplePaths) +
                            " simple paths");
          }
          if (on_path[u]) {
            through.push_back(mask);
            prefix.push_back(before_u);
            suffix.push_back(mask & ~before_u);
          } else {
            avoiding.push_back(mask);
          }
          return;
        }
        for (VertexId w : g.Neighbors(v)) {
          if (on_path[w]) continue;
          const std::uint32_t bit =
              1u << index[static_cast<std::size_t>(v) * n + w];
          on_path[w] = 1;
          const std::uint32_t next = mask | bit;
          dfs(w, next, w == u ? next : before_u);
          on_path[w] = 0;
        }
      };
  dfs(i, 0u, 0u);

  out.paths_through = static_cast<std::int64_t>(through.size());
  out.paths_avoiding = static_cast<std::int64_t>(avoiding.size());
  std::vector<std::uint32_t> all = through;
  all.insert(all.end(), avoiding.begin(), avoiding.end());
  const double a = g.alpha();
  out.p_union = PathSetContribution(m, a, all);
  out.p_avoiding = PathSetContribution(m, a, avoiding);
  out.p_prefix = PathSetContribution(m, a, prefix);
  out.p_suffix = PathSetContribution(m, a, suffix);
  out.hypothesis = out.p_union >= beta && out.p_avoiding <= beta / 2.0;
  out.conclusion = out.p_prefix * out.p_suffix >= beta / 2.0;
  return out;
}

}  // namespace bikit
