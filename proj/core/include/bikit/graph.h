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

#ifndef BIKIT_GRAPH_H_
#define BIKIT_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace bikit {

// Dense 0-based vertex index; identity is the position in the input file.
using VertexId = std::int32_t;

// Unordered vertex pair stored canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  // Canonicalizes the endpoint order. Self-loops are representable so that
  // validation can report them; InformationGraph rejects them.
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  std::uint64_t Key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }
  bool IsSelfLoop() const { return u == v; }
  bool Touches(VertexId w) const { return u == w || v == w; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string ToString(const Edge& e);

// A set of vertex pairs to be added to a graph. Kept sorted; validity against
// a particular graph is checked by InformationGraph::WithEdges.
class EdgeAddition {
 public:
  EdgeAddition() = default;
  explicit EdgeAddition(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool Contains(const Edge& e) const;

  // Inserts e if absent; returns false when already present.
  bool Insert(const Edge& e);

  friend bool operator==(const EdgeAddition&, const EdgeAddition&) = default;

 private:
  std::vector<Edge> edges_;
};

// Connected undirected graph with a uniform edge activation probability.
// Immutable after construction and safe to share across threads.
class InformationGraph {
 public:
  // Validates: n >= 1, 0 < alpha < 1, endpoints in range, no self-loops,
  // no duplicate edges, connectivity. Throws bikit::Error.
  InformationGraph(int num_vertices, double alpha, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  double alpha() const { return alpha_; }

  // Sorted canonical edge list.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const VertexId> Neighbors(VertexId v) const;
  int Degree(VertexId v) const;
  bool HasEdge(VertexId a, VertexId b) const;
  bool HasEdge(const Edge& e) const { return HasEdge(e.u, e.v); }

  // All vertex pairs absent from the graph, in lexicographic order.
  std::vector<Edge> NonEdges() const;

  // G + S. Throws kDuplicateEdge if any pair of S is already present.
  InformationGraph WithEdges(const EdgeAddition& additions) const;
  InformationGraph WithEdges(std::span<const Edge> additions) const;

  friend bool operator==(const InformationGraph& a,
                         const InformationGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.alpha_ == b.alpha_ &&
           a.edges_ == b.edges_;
  }

 private:
  int num_vertices_;
  double alpha_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adjacency_offsets_;
  std::vector<VertexId> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

// Connected components of (n, edges); returns one component label per vertex,
// labels numbered in order of first appearance.
std::vector<int> ComponentLabels(int num_vertices, std::span<const Edge> edges);

}  // namespace bikit

#endif  // BIKIT_GRAPH_H_
