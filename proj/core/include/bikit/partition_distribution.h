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

#ifndef BIKIT_PARTITION_DISTRIBUTION_H_
#define BIKIT_PARTITION_DISTRIBUTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "bikit/graph.h"

namespace bikit {

// Exact probability distribution over the connected-component partitions of
// a graph sampled from an edge set (each edge kept independently with
// probability alpha).
//
// This is the sum over all 2^m edge subsets, with subsets that induce the
// same partition merged as soon as they coincide. Edges are folded in one at
// a time, so a distribution for G can be extended to G + S by folding in
// only the edges of S. The state count is bounded by both 2^m and the Bell
// number of n.
//
// Partitions are stored as restricted-growth label strings (the first vertex
// of each block fixes the block's number), which makes them canonical.
class PartitionDistribution {
 public:
  // All vertices isolated with probability 1.
  PartitionDistribution(int num_vertices, double alpha);

  static PartitionDistribution ForGraph(const InformationGraph& g);

  void AddEdge(const Edge& e);
  void AddEdges(std::span<const Edge> edges);
  PartitionDistribution WithEdges(std::span<const Edge> edges) const;

  int num_vertices() const { return n_; }
  std::size_t num_states() const { return probs_.size(); }
  double TotalProbability() const;

  // Row-major n x n matrix of Pr[u ~ v]; diagonal exactly 1.
  std::vector<double> PairProbabilities() const;
  // Pr[source ~ v] for every v; entry `source` is exactly 1.
  std::vector<double> RowProbabilities(VertexId source) const;
  double PairProbability(VertexId u, VertexId v) const;

 private:
  std::span<const std::uint8_t> Labels(std::size_t state) const {
    return std::span<const std::uint8_t>(labels_).subspan(state * n_, n_);
  }

  int n_;
  double alpha_;
  std::vector<std::uint8_t> labels_;  // num_states * n_
  std::vector<double> probs_;
};

// Largest vertex count the partition representation supports.
inline constexpr int kMaxPartitionVertices = 255;

}  // namespace bikit

#endif  // BIKIT_PARTITION_DISTRIBUTION_H_
