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

#ifndef BIKIT_PROXIMITY_H_
#define BIKIT_PROXIMITY_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "bikit/graph.h"

namespace bikit {

class PartitionDistribution;

enum class EstimationMethod { kExact, kMonteCarlo };

std::string_view MethodName(EstimationMethod method);
// Accepts "exact", "monte-carlo" and "mc". Throws kInvalidParameter.
EstimationMethod ParseMethod(std::string_view name);

struct EstimatorConfig {
  EstimationMethod method = EstimationMethod::kExact;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  // Exact mode refuses graphs (including any added edges) with more edges.
  int exact_edge_limit = 20;
  // <= 0: all hardware threads. Results do not depend on this value.
  int workers = 0;
};

// Failure probability used for reported Monte Carlo half-widths.
inline constexpr double kHoeffdingDelta = 1e-6;

// sqrt(ln(2 / delta) / (2 * samples)).
double HoeffdingHalfWidth(std::int64_t samples);

struct ProximityEstimate {
  double value = 0.0;
  double half_width = 0.0;  // 0 for exact
  std::int64_t samples = 0;  // 0 for exact
  EstimationMethod method = EstimationMethod::kExact;

  // Conservative lower end of the confidence interval.
  double Lower() const { return value - half_width; }
};

// Symmetric n x n proximity matrix with unit diagonal. All off-diagonal
// entries share one half-width because they come from one sample stream.
class ProximityMatrix {
 public:
  ProximityMatrix(int n, double alpha, std::vector<double> values,
                  double half_width, std::int64_t samples,
                  EstimationMethod method);

  int size() const { return n_; }
  double alpha() const { return alpha_; }
  double value(VertexId u, VertexId v) const {
    return values_[static_cast<std::size_t>(u) * n_ + v];
  }
  ProximityEstimate at(VertexId u, VertexId v) const;
  std::span<const double> Row(VertexId u) const {
    return std::span<const double>(values_).subspan(
        static_cast<std::size_t>(u) * n_, n_);
  }
  std::span<const double> values() const { return values_; }
  double half_width() const { return half_width_; }
  std::int64_t samples() const { return samples_; }
  EstimationMethod method() const { return method_; }

 private:
  int n_;
  double alpha_;
  std::vector<double> values_;
  double half_width_;
  std::int64_t samples_;
  EstimationMethod method_;
};

// Proximities from one source to every vertex.
struct ProximityRow {
  VertexId source = 0;
  std::vector<double> values;
  double half_width = 0.0;
  std::int64_t samples = 0;
  EstimationMethod method = EstimationMethod::kExact;

  ProximityEstimate at(VertexId v) const;
};

// Estimator bound to one graph. Every query may name extra edges to evaluate
// G + S without rebuilding anything.
//
// Exact mode keeps the partition distribution of G and folds in only S.
// Monte Carlo mode keys the coin of edge e in sample s on (seed, s, e), so
// candidate sets sharing edges share their coins (common random numbers) and
// the result is independent of the worker count.
class ProximityEngine {
 public:
  // Throws kLimitExceeded in exact mode when G alone is over the limit,
  // kInvalidParameter for a non-positive sample count in Monte Carlo mode.
  ProximityEngine(const InformationGraph& g, const EstimatorConfig& cfg);
  ~ProximityEngine();
  ProximityEngine(const ProximityEngine&);
  ProximityEngine& operator=(const ProximityEngine&) = delete;

  const InformationGraph& graph() const { return graph_; }
  const EstimatorConfig& config() const { return cfg_; }

  // Extra edges must be absent from G and distinct (kDuplicateEdge).
  ProximityMatrix Matrix(std::span<const Edge> extra = {}) const;
  ProximityRow Row(VertexId source, std::span<const Edge> extra = {}) const;
  ProximityEstimate Pair(VertexId u, VertexId v,
                         std::span<const Edge> extra = {}) const;

  // Same graph and settings, different sample stream.
  ProximityEngine Reseeded(std::uint64_t seed) const;

 private:
  void CheckExtra(std::span<const Edge> extra) const;
  double Clamp(double value) const;
  std::vector<Edge> Combined(std::span<const Edge> extra) const;

  InformationGraph graph_;
  EstimatorConfig cfg_;
  std::shared_ptr<const PartitionDistribution> base_;  // exact mode only
  std::uint64_t threshold_ = 0;
};

ProximityEstimate ExactProximity(const InformationGraph& g, VertexId u,
                                 VertexId v, int exact_edge_limit = 20);
ProximityEstimate MonteCarloProximity(const InformationGraph& g, VertexId u,
                                      VertexId v, const EstimatorConfig& cfg);
ProximityMatrix ComputeProximityMatrix(const InformationGraph& g,
                                       const EstimatorConfig& cfg);

struct BroadcastValue {
  ProximityEstimate value;
  Edge argmin;  // lexicographically smallest minimizing pair
};

struct ReachValue {
  ProximityEstimate value;
  VertexId argmin = 0;  // smallest minimizing vertex
};

// A single-vertex graph has broadcast 1 with argmin (0, 0).
BroadcastValue Broadcast(const ProximityMatrix& matrix);
ReachValue Reach(const ProximityMatrix& matrix, VertexId source);
ReachValue Reach(const ProximityRow& row);

// phi(u, v) = -log2 prox(u, v), with distances capped at n * log2(1 / alpha)
// (the distance of proximity alpha^n) so that zero estimates stay finite.
class ImpliedMetric {
 public:
  ImpliedMetric(int n, std::vector<double> distances);

  int size() const { return n_; }
  double at(VertexId u, VertexId v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const double> values() const { return d_; }

 private:
  int n_;
  std::vector<double> d_;
};

ImpliedMetric ComputeImpliedMetric(const ProximityMatrix& matrix);

// -log2(p) with the same cap as the implied metric.
double ClampedDistance(double p, int n, double alpha);

// {u : prox(v, u) >= x}, ascending.
std::vector<VertexId> Neighborhood(const ProximityMatrix& matrix, VertexId v,
                                   double x);
std::vector<VertexId> Neighborhood(const ProximityRow& row, double x);
std::vector<VertexId> Neighborhood(const InformationGraph& g, VertexId v,
                                   double x, const EstimatorConfig& cfg);

// Row-major CSV, 17 significant digits, no header.
void WriteMatrixCsv(const ProximityMatrix& matrix, std::ostream& out);

}  // namespace bikit

#endif  // BIKIT_PROXIMITY_H_
