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

#include "bikit/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bikit/error.h"

namespace bikit {

std::string ToString(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

EdgeAddition::EdgeAddition(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.IsSelfLoop()) {
      throw Error(ErrorKind::kSelfLoop, "self-loop " + ToString(e));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorKind::kDuplicateEdge,
                "edge " + ToString(*dup) + " listed twice in addition set");
  }
}

bool EdgeAddition::Contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeAddition::Insert(const Edge& e) {
  if (e.IsSelfLoop()) {
    throw Error(ErrorKind::kSelfLoop, "self-loop " + ToString(e));
  }
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

std::vector<int> ComponentLabels(int num_vertices,
                                 std::span<const Edge> edges) {
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(num_vertices, -1), root_label(num_vertices, -1);
  int next = 0;
  for (int v = 0; v < num_vertices; ++v) {
    int r = find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

InformationGraph::InformationGraph(int num_vertices, double alpha,
                                   std::vector<Edge> edges)
    : num_vertices_(num_vertices), alpha_(alpha), edges_(std::move(edges)) {
  if (num_vertices_ < 1) {
    throw Error(ErrorKind::kInvalidParameter,
                "graph needs at least one vertex");
  }
  if (!(alpha_ > 0.0 && alpha_ < 1.0)) {
    std::ostringstream msg;
    msg << "alpha " << alpha_ << " outside (0, 1)";
    throw Error(ErrorKind::kAlphaRange, msg.str());
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= num_vertices_) {
      throw Error(ErrorKind::kVertexRange,
                  "edge " + ToString(e) + " has an endpoint outside [0, " +
                      std::to_string(num_vertices_) + ")");
    }
    if (e.IsSelfLoop()) {
      throw Error(ErrorKind::kSelfLoop, "self-loop " + ToString(e));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorKind::kDuplicateEdge,
                "duplicate edge " + ToString(*dup));
  }

  std::vector<int> labels = ComponentLabels(num_vertices_, edges_);
  auto other = std::find_if(labels.begin(), labels.end(),
                            [](int l) { return l != 0; });
  if (other != labels.end()) {
    throw Error(ErrorKind::kConnectivity,
                "graph is disconnected: vertex 0 and vertex " +
                    std::to_string(other - labels.begin()) +
                    " lie in different components");
  }

  std::vector<int> degree(num_vertices_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
    edge_keys_.insert(e.Key());
  }
  adjacency_offsets_.assign(num_vertices_ + 1, 0);
  for (int v = 0; v < num_vertices_; ++v) {
    adjacency_offsets_[v + 1] = adjacency_offsets_[v] + degree[v];
  }
  adjacency_.resize(adjacency_offsets_.back());
  std::vector<std::size_t> fill(adjacency_offsets_.begin(),
                                adjacency_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < num_vertices_; ++v) {
    std::sort(adjacency_.begin() + adjacency_offsets_[v],
              adjacency_.begin() + adjacency_offsets_[v + 1]);
  }
}

std::span<const VertexId> InformationGraph::Neighbors(VertexId v) const {
  return std::span<const VertexId>(adjacency_).subspan(
      adjacency_offsets_[v], adjacency_offsets_[v + 1] - adjacency_offsets_[v]);
}

int InformationGraph::Degree(VertexId v) const {
  return static_cast<int>(adjacency_offsets_[v + 1] - adjacency_offsets_[v]);
}

bool InformationGraph::HasEdge(VertexId a, VertexId b) const {
  if (a == b) return false;
  return edge_keys_.count(Edge(a, b).Key()) > 0;
}

std::vector<Edge> InformationGraph::NonEdges() const {
  std::vector<Edge> out;
  for (VertexId a = 0; a < num_vertices_; ++a) {
    for (VertexId b = a + 1; b < num_vertices_; ++b) {
      if (!HasEdge(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

InformationGraph InformationGraph::WithEdges(
    const EdgeAddition& additions) const {
  return WithEdges(additions.edges());
}

InformationGraph InformationGraph::WithEdges(
    std::span<const Edge> additions) const {
  std::vector<Edge> all(edges_);
  for (const Edge& e : additions) {
    if (e.IsSelfLoop()) {
      throw Error(ErrorKind::kSelfLoop, "self-loop " + ToString(e));
    }
    if (HasEdge(e)) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "edge " + ToString(e) + " already present in the graph");
    }
    all.push_back(e);
  }
  return InformationGraph(num_vertices_, alpha_, std::move(all));
}

}  // namespace bikit
