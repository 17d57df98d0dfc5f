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

#ifndef BIKIT_GENERATORS_H_
#define BIKIT_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bikit/graph.h"

namespace bikit {

struct PathFamily {
  int n = 2;
};
struct CycleFamily {
  int n = 3;
};
struct CliqueFamily {
  int n = 2;
};
// Vertex 0 is the center; n counts all vertices.
struct StarFamily {
  int n = 2;
};
// Center 0 joined to `leaves` leaf vertices through disjoint paths of
// `length` edges. Leaf i (0-based) is vertex (i + 1) * length.
struct SubdividedStarFamily {
  int leaves = 3;
  int length = 1;
};
// Complete binary tree of the given depth, heap-ordered (root 0).
struct BinaryTreeFamily {
  int depth = 1;
};
// Erdos-Renyi G(n, p), redrawn until connected.
struct RandomFamily {
  int n = 2;
  double p = 0.5;
};
// Set-cover gadget: a pivot vertex, one vertex per set and per element, and
// disjoint paths of `length` edges joining pivot-set, every set-set pair, and
// set-element for each membership. Elements are 0..num_elements-1; sets and
// the optional planted cover use 0-based set indices.
struct SetCoverGadgetFamily {
  int num_elements = 0;
  std::vector<std::vector<int>> sets;
  int length = 2;
  std::optional<std::vector<int>> planted_cover;
};

using GraphFamily =
    std::variant<PathFamily, CycleFamily, CliqueFamily, StarFamily,
                 SubdividedStarFamily, BinaryTreeFamily, RandomFamily,
                 SetCoverGadgetFamily>;

struct GraphFamilySpec {
  GraphFamily family;
  double alpha = 0.5;
};

struct GadgetLayout {
  VertexId pivot = 0;
  std::vector<VertexId> set_vertices;
  std::vector<VertexId> element_vertices;
};

struct GeneratedGraph {
  InformationGraph graph;
  // Pivot-to-set edges of the planted cover (set-cover gadget only).
  EdgeAddition planted;
  std::optional<GadgetLayout> layout;
};

// Deterministic in (spec, seed). Throws kInvalidParameter on bad parameters
// and kConnectivity if a random family stays disconnected after
// kMaxRandomRedraws draws.
GeneratedGraph Generate(const GraphFamilySpec& spec, std::uint64_t seed);

inline constexpr int kMaxRandomRedraws = 1000;

// Short family name used by the CLI ("path", "setcover-gadget", ...).
std::string FamilyName(const GraphFamily& family);

}  // namespace bikit

#endif  // BIKIT_GENERATORS_H_
