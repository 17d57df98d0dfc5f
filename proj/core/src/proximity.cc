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

#include "bikit/proximity.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_set>

#include "bikit/error.h"
#include "bikit/graph_io.h"
#include "bikit/parallel.h"
#include "bikit/partition_distribution.h"
#include "bikit/random.h"

namespace bikit {
namespace {

constexpr std::uint64_t kEdgeSalt = 0x8cb92ba72f3d8dd7ULL;

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {}
  void Reset() { std::iota(parent.begin(), parent.end(), 0); }
  int Find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

struct EdgeCoins {
  std::vector<Edge> edges;
  std::vector<std::uint64_t> keys;
};

EdgeCoins MakeCoins(std::vector<Edge> edges) {
  EdgeCoins c;
  c.keys.reserve(edges.size());
  for (const Edge& e : edges) c.keys.push_back(Mix64(e.Key() + kEdgeSalt));
  c.edges = std::move(edges);
  return c;
}

// Runs union-find over the edges kept in sample `s`.
inline void SampleComponents(const EdgeCoins& coins, std::uint64_t seed,
                             std::uint64_t threshold, std::int64_t s,
                             UnionFind& uf) {
  uf.Reset();
  const std::uint64_t child = ChildSeed(seed, static_cast<std::uint64_t>(s));
  for (std::size_t i = 0; i < coins.edges.size(); ++i) {
    if (Mix64(child ^ coins.keys[i]) < threshold) {
      uf.Unite(coins.edges[i].u, coins.edges[i].v);
    }
  }
}

void CheckVertex(const InformationGraph& g, VertexId v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw Error(ErrorKind::kVertexRange,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(g.num_vertices()) + ")");
  }
}

}  // namespace

std::string_view MethodName(EstimationMethod method) {
  return method == EstimationMethod::kExact ? "exact" : "monte-carlo";
}

EstimationMethod ParseMethod(std::string_view name) {
  if (name == "exact") return EstimationMethod::kExact;
  if (name == "monte-carlo" || name == "mc") {
    return EstimationMethod::kMonteCarlo;
  }
  throw Error(ErrorKind::kInvalidParameter,
              "unknown estimation method '" + std::string(name) + "'");
}

double HoeffdingHalfWidth(std::int64_t samples) {
  if (samples <= 0) return 1.0;
  return std::sqrt(std::log(2.0 / kHoeffdingDelta) /
                   (2.0 * static_cast<double>(samples)));
}

ProximityMatrix::ProximityMatrix(int n, double alpha,
                                 std::vector<double> values, double half_width,
                                 std::int64_t samples, EstimationMethod method)
    : n_(n),
      alpha_(alpha),
      values_(std::move(values)),
      half_width_(half_width),
      samples_(samples),
      method_(method) {}

ProximityEstimate ProximityMatrix::at(VertexId u, VertexId v) const {
  if (u == v) return {1.0, 0.0, samples_, method_};
  return {value(u, v), half_width_, samples_, method_};
}

ProximityEstimate ProximityRow::at(VertexId v) const {
  if (v == source) return {1.0, 0.0, samples, method};
  return {values[v], half_width, samples, method};
}

ProximityEngine::ProximityEngine(const InformationGraph& g,
                                 const EstimatorConfig& cfg)
    : graph_(g), cfg_(cfg) {
  if (cfg_.method == EstimationMethod::kExact) {
    if (g.num_edges() > cfg_.exact_edge_limit) {
      throw Error(ErrorKind::kLimitExceeded,
                  "exact proximity needs at most " +
                      std::to_string(cfg_.exact_edge_limit) +
                      " edges, graph has " + std::to_string(g.num_edges()));
    }
    base_ = std::make_shared<const PartitionDistribution>(
        PartitionDistribution::ForGraph(g));
  } else {
    if (cfg_.samples < 1) {
      throw Error(ErrorKind::kInvalidParameter,
                  "sample count must be positive, got " +
                      std::to_string(cfg_.samples));
    }
    threshold_ = BernoulliThreshold(g.alpha());
  }
}

ProximityEngine::~ProximityEngine() = default;
ProximityEngine::ProximityEngine(const ProximityEngine&) = default;

ProximityEngine ProximityEngine::Reseeded(std::uint64_t seed) const {
  ProximityEngine copy(*this);
  copy.cfg_.seed = seed;
  return copy;
}

void ProximityEngine::CheckExtra(std::span<const Edge> extra) const {
  std::unordered_set<std::uint64_t> seen;
  for (const Edge& e : extra) {
    if (e.u < 0 || e.v >= graph_.num_vertices()) {
      throw Error(ErrorKind::kVertexRange,
                  "edge " + ToString(e) + " out of range");
    }
    if (e.IsSelfLoop()) {
      throw Error(ErrorKind::kSelfLoop, "self-loop " + ToString(e));
    }
    if (graph_.HasEdge(e) || !seen.insert(e.Key()).second) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "edge " + ToString(e) + " already present");
    }
  }
  if (cfg_.method == EstimationMethod::kExact &&
      graph_.num_edges() + static_cast<int>(extra.size()) >
          cfg_.exact_edge_limit) {
    throw Error(ErrorKind::kLimitExceeded,
                "exact proximity needs at most " +
                    std::to_string(cfg_.exact_edge_limit) + " edges, G + S has " +
                    std::to_string(graph_.num_edges() + extra.size()));
  }
}

double ProximityEngine::Clamp(double value) const {
  const double floor =
      std::pow(graph_.alpha(), static_cast<double>(graph_.num_vertices()));
  return std::max(value, floor);
}

std::vector<Edge> ProximityEngine::Combined(
    std::span<const Edge> extra) const {
  std::vector<Edge> all(graph_.edges().begin(), graph_.edges().end());
  all.insert(all.end(), extra.begin(), extra.end());
  return all;
}

ProximityMatrix ProximityEngine::Matrix(std::span<const Edge> extra) const {
  CheckExtra(extra);
  const int n = graph_.num_vertices();
  if (cfg_.method == EstimationMethod::kExact) {
    std::vector<double> values = extra.empty()
                                     ? base_->PairProbabilities()
                                     : base_->WithEdges(extra).PairProbabilities();
    return ProximityMatrix(n, graph_.alpha(), std::move(values), 0.0, 0,
                           EstimationMethod::kExact);
  }

  const EdgeCoins coins = MakeCoins(Combined(extra));
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const int workers = ResolveWorkers(cfg_.workers);
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(workers), cfg_.samples);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  ParallelFor(workers, chunks, [&](std::size_t c0, std::size_t c1) {
    UnionFind uf(n);
    std::vector<int> order(n);
    for (std::size_t c = c0; c < c1; ++c) {
      std::vector<std::uint64_t> counts(nn, 0);
      const std::int64_t s0 = cfg_.samples * static_cast<std::int64_t>(c) /
                              static_cast<std::int64_t>(chunks);
      const std::int64_t s1 = cfg_.samples * static_cast<std::int64_t>(c + 1) /
                              static_cast<std::int64_t>(chunks);
      for (std::int64_t s = s0; s < s1; ++s) {
        SampleComponents(coins, cfg_.seed, threshold_, s, uf);
        for (int v = 0; v < n; ++v) order[v] = v;
        for (int v = 0; v < n; ++v) uf.parent[v] = uf.Find(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          return uf.parent[a] != uf.parent[b] ? uf.parent[a] < uf.parent[b]
                                              : a < b;
        });
        for (int a = 0; a < n;) {
          int b = a;
          while (b < n && uf.parent[order[b]] == uf.parent[order[a]]) ++b;
          for (int i = a; i < b; ++i) {
            for (int j = i + 1; j < b; ++j) {
              ++counts[static_cast<std::size_t>(order[i]) * n + order[j]];
            }
          }
          a = b;
        }
      }
      partial[c] = std::move(counts);
    }
  });
  std::vector<std::uint64_t> total(nn, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < nn; ++i) total[i] += p[i];
  }
  std::vector<double> values(nn, 1.0);
  const double inv = 1.0 / static_cast<double>(cfg_.samples);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double p =
          Clamp(static_cast<double>(total[static_cast<std::size_t>(u) * n + v]) *
                inv);
      values[static_cast<std::size_t>(u) * n + v] = p;
      values[static_cast<std::size_t>(v) * n + u] = p;
    }
  }
  return ProximityMatrix(n, graph_.alpha(), std::move(values),
                         HoeffdingHalfWidth(cfg_.samples), cfg_.samples,
                         EstimationMethod::kMonteCarlo);
}

ProximityRow ProximityEngine::Row(VertexId source,
                                  std::span<const Edge> extra) const {
  CheckVertex(graph_, source);
  CheckExtra(extra);
  const int n = graph_.num_vertices();
  ProximityRow row;
  row.source = source;
  if (cfg_.method == EstimationMethod::kExact) {
    row.values = extra.empty() ? base_->RowProbabilities(source)
                               : base_->WithEdges(extra).RowProbabilities(source);
    return row;
  }

  const EdgeCoins coins = MakeCoins(Combined(extra));
  const int workers = ResolveWorkers(cfg_.workers);
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(workers), cfg_.samples);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  ParallelFor(workers, chunks, [&](std::size_t c0, std::size_t c1) {
    UnionFind uf(n);
    for (std::size_t c = c0; c < c1; ++c) {
      std::vector<std::uint64_t> counts(n, 0);
      const std::int64_t s0 = cfg_.samples * static_cast<std::int64_t>(c) /
                              static_cast<std::int64_t>(chunks);
      const std::int64_t s1 = cfg_.samples * static_cast<std::int64_t>(c + 1) /
                              static_cast<std::int64_t>(chunks);
      for (std::int64_t s = s0; s < s1; ++s) {
        SampleComponents(coins, cfg_.seed, threshold_, s, uf);
        const int root = uf.Find(source);
        for (int v = 0; v < n; ++v) {
          if (uf.Find(v) == root) ++counts[v];
        }
      }
      partial[c] = std::move(counts);
    }
  });
  std::vector<std::uint64_t> total(n, 0);
  for (const auto& p : partial) {
    for (int v = 0; v < n; ++v) total[v] += p[v];
  }
  row.values.assign(n, 1.0);
  const double inv = 1.0 / static_cast<double>(cfg_.samples);
  for (int v = 0; v < n; ++v) {
    if (v != source) row.values[v] = Clamp(static_cast<double>(total[v]) * inv);
  }
  row.half_width = HoeffdingHalfWidth(cfg_.samples);
  row.samples = cfg_.samples;
  row.method = EstimationMethod::kMonteCarlo;
  return row;
}

ProximityEstimate ProximityEngine::Pair(VertexId u, VertexId v,
                                        std::span<const Edge> extra) const {
  CheckVertex(graph_, u);
  CheckVertex(graph_, v);
  CheckExtra(extra);
  const bool exact = cfg_.method == EstimationMethod::kExact;
  ProximityEstimate est;
  est.method = cfg_.method;
  if (!exact) {
    est.samples = cfg_.samples;
    est.half_width = HoeffdingHalfWidth(cfg_.samples);
  }
  if (u == v) {
    est.value = 1.0;
    est.half_width = 0.0;
    return est;
  }
  if (exact) {
    est.value = extra.empty() ? base_->PairProbability(u, v)
                              : base_->WithEdges(extra).PairProbability(u, v);
    return est;
  }

  const EdgeCoins coins = MakeCoins(Combined(extra));
  const int n = graph_.num_vertices();
  const int workers = ResolveWorkers(cfg_.workers);
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(workers), cfg_.samples);
  std::vector<std::uint64_t> partial(chunks, 0);
  ParallelFor(workers, chunks, [&](std::size_t c0, std::size_t c1) {
    UnionFind uf(n);
    for (std::size_t c = c0; c < c1; ++c) {
      const std::int64_t s0 = cfg_.samples * static_cast<std::int64_t>(c) /
                              static_cast<std::int64_t>(chunks);
      const std::int64_t s1 = cfg_.samples * static_cast<std::int64_t>(c + 1) /
                              static_cast<std::int64_t>(chunks);
      std::uint64_t hits = 0;
      for (std::int64_t s = s0; s < s1; ++s) {
        uf.Reset();
        const std::uint64_t child =
            ChildSeed(cfg_.seed, static_cast<std::uint64_t>(s));
        // Coins are keyed per edge, so stopping early changes nothing.
        for (std::size_t i = 0; i < coins.edges.size(); ++i) {
          if (Mix64(child ^ coins.keys[i]) < threshold_ &&
              uf.Unite(coins.edges[i].u, coins.edges[i].v) &&
              uf.Find(u) == uf.Find(v)) {
            ++hits;
            break;
          }
        }
      }
      partial[c] = hits;
    }
  });
  std::uint64_t hits = 0;
  for (std::uint64_t h : partial) hits += h;
  est.value = Clamp(static_cast<double>(hits) /
                    static_cast<double>(cfg_.samples));
  return est;
}

ProximityEstimate ExactProximity(const InformationGraph& g, VertexId u,
                                 VertexId v, int exact_edge_limit) {
  EstimatorConfig cfg;
  cfg.method = EstimationMethod::kExact;
  cfg.exact_edge_limit = exact_edge_limit;
  return ProximityEngine(g, cfg).Pair(u, v);
}

ProximityEstimate MonteCarloProximity(const InformationGraph& g, VertexId u,
                                      VertexId v, const EstimatorConfig& cfg) {
  EstimatorConfig mc = cfg;
  mc.method = EstimationMethod::kMonteCarlo;
  return ProximityEngine(g, mc).Pair(u, v);
}

ProximityMatrix ComputeProximityMatrix(const InformationGraph& g,
                                       const EstimatorConfig& cfg) {
  return ProximityEngine(g, cfg).Matrix();
}

BroadcastValue Broadcast(const ProximityMatrix& matrix) {
  const int n = matrix.size();
  BroadcastValue out;
  out.value = matrix.at(0, 0);
  out.argmin = Edge(0, 0);
  bool found = false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!found || matrix.value(u, v) < out.value.value) {
        out.value = matrix.at(u, v);
        out.argmin = Edge(u, v);
        found = true;
      }
    }
  }
  return out;
}

ReachValue Reach(const ProximityMatrix& matrix, VertexId source) {
  ProximityRow row;
  row.source = source;
  auto r = matrix.Row(source);
  row.values.assign(r.begin(), r.end());
  row.half_width = matrix.half_width();
  row.samples = matrix.samples();
  row.method = matrix.method();
  return Reach(row);
}

ReachValue Reach(const ProximityRow& row) {
  ReachValue out;
  out.value = row.at(row.source);
  out.argmin = row.source;
  bool found = false;
  for (VertexId v = 0; v < static_cast<VertexId>(row.values.size()); ++v) {
    if (v == row.source) continue;
    if (!found || row.values[v] < out.value.value) {
      out.value = row.at(v);
      out.argmin = v;
      found = true;
    }
  }
  return out;
}

ImpliedMetric::ImpliedMetric(int n, std::vector<double> distances)
    : n_(n), d_(std::move(distances)) {}

double ClampedDistance(double p, int n, double alpha) {
  const double cap = static_cast<double>(n) * -std::log2(alpha);
  if (p >= 1.0) return 0.0;
  if (p <= 0.0) return cap;
  return std::min(-std::log2(p), cap);
}

ImpliedMetric ComputeImpliedMetric(const ProximityMatrix& matrix) {
  const int n = matrix.size();
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double phi = ClampedDistance(matrix.value(u, v), n, matrix.alpha());
      d[static_cast<std::size_t>(u) * n + v] = phi;
      d[static_cast<std::size_t>(v) * n + u] = phi;
    }
  }
  return ImpliedMetric(n, std::move(d));
}

std::vector<VertexId> Neighborhood(const ProximityMatrix& matrix, VertexId v,
                                   double x) {
  std::vector<VertexId> out;
  for (VertexId u = 0; u < matrix.size(); ++u) {
    if (u == v || matrix.value(v, u) >= x) out.push_back(u);
  }
  return out;
}

std::vector<VertexId> Neighborhood(const ProximityRow& row, double x) {
  std::vector<VertexId> out;
  for (VertexId u = 0; u < static_cast<VertexId>(row.values.size()); ++u) {
    if (u == row.source || row.values[u] >= x) out.push_back(u);
  }
  return out;
}

std::vector<VertexId> Neighborhood(const InformationGraph& g, VertexId v,
                                   double x, const EstimatorConfig& cfg) {
  return Neighborhood(ProximityEngine(g, cfg).Row(v), x);
}

void WriteMatrixCsv(const ProximityMatrix& matrix, std::ostream& out) {
  const int n = matrix.size();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v > 0) out << ',';
      out << FormatExact(matrix.value(u, v));
    }
    out << '\n';
  }
}

}  // namespace bikit
