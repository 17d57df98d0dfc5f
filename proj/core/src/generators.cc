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

#include "bikit/generators.h"

#include <algorithm>
#include <random>
#include <set>

#include "bikit/error.h"
#include "bikit/random.h"

namespace bikit {
namespace {

void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::kInvalidParameter, message);
}

// Appends a path of `length` edges from a to b using fresh internal vertices.
void AddPath(VertexId a, VertexId b, int length, int& next_vertex,
             std::vector<Edge>& edges) {
  VertexId prev = a;
  for (int step = 1; step < length; ++step) {
    VertexId internal = next_vertex++;
    edges.emplace_back(prev, internal);
    prev = internal;
  }
  edges.emplace_back(prev, b);
}

GeneratedGraph Plain(int n, double alpha, std::vector<Edge> edges) {
  return GeneratedGraph{InformationGraph(n, alpha, std::move(edges)), {}, {}};
}

struct Builder {
  double alpha;
  std::uint64_t seed;

  GeneratedGraph operator()(const PathFamily& f) const {
    Require(f.n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < f.n; ++i) edges.emplace_back(i, i + 1);
    return Plain(f.n, alpha, std::move(edges));
  }

  GeneratedGraph operator()(const CycleFamily& f) const {
    Require(f.n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < f.n; ++i) edges.emplace_back(i, (i + 1) % f.n);
    return Plain(f.n, alpha, std::move(edges));
  }

  GeneratedGraph operator()(const CliqueFamily& f) const {
    Require(f.n >= 1, "clique needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < f.n; ++i)
      for (int j = i + 1; j < f.n; ++j) edges.emplace_back(i, j);
    return Plain(f.n, alpha, std::move(edges));
  }

  GeneratedGraph operator()(const StarFamily& f) const {
    Require(f.n >= 1, "star needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < f.n; ++i) edges.emplace_back(0, i);
    return Plain(f.n, alpha, std::move(edges));
  }

  GeneratedGraph operator()(const SubdividedStarFamily& f) const {
    Require(f.leaves >= 1, "subdivided star needs leaves >= 1");
    Require(f.length >= 1, "subdivided star needs length >= 1");
    const int n = 1 + f.leaves * f.length;
    std::vector<Edge> edges;
    for (int leg = 0; leg < f.leaves; ++leg) {
      VertexId prev = 0;
      for (int step = 1; step <= f.length; ++step) {
        VertexId cur = leg * f.length + step;
        edges.emplace_back(prev, cur);
        prev = cur;
      }
    }
    return Plain(n, alpha, std::move(edges));
  }

  GeneratedGraph operator()(const BinaryTreeFamily& f) const {
    Require(f.depth >= 0 && f.depth <= 24, "binary tree depth must be in [0, 24]");
    const int n = (1 << (f.depth + 1)) - 1;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return Plain(n, alpha, std::move(edges));
  }

  GeneratedGraph operator()(const RandomFamily& f) const {
    Require(f.n >= 1, "random graph needs n >= 1");
    Require(f.p >= 0.0 && f.p <= 1.0, "random graph needs p in [0, 1]");
    for (int attempt = 0; attempt < kMaxRandomRedraws; ++attempt) {
      // mt19937_64's output sequence is fixed by the standard; the uniform
      // conversion is done by hand so draws are portable across libraries.
      std::mt19937_64 rng(ChildSeed(seed, attempt));
      std::vector<Edge> edges;
      for (int i = 0; i < f.n; ++i) {
        for (int j = i + 1; j < f.n; ++j) {
          if (UnitInterval(rng()) < f.p) edges.emplace_back(i, j);
        }
      }
      std::vector<int> labels = ComponentLabels(f.n, edges);
      if (*std::max_element(labels.begin(), labels.end()) == 0) {
        return Plain(f.n, alpha, std::move(edges));
      }
    }
    throw Error(ErrorKind::kConnectivity,
                "random graph stayed disconnected after " +
                    std::to_string(kMaxRandomRedraws) + " draws");
  }

  GeneratedGraph operator()(const SetCoverGadgetFamily& f) const {
    Require(f.length >= 2 && f.length % 2 == 0,
            "set-cover gadget length must be an even integer >= 2");
    Require(f.num_elements >= 1, "set-cover gadget needs at least one element");
    Require(!f.sets.empty(), "set-cover gadget needs at least one set");
    const int num_sets = static_cast<int>(f.sets.size());
    std::vector<bool> covered(f.num_elements, false);
    for (int s = 0; s < num_sets; ++s) {
      std::set<int> seen;
      for (int elem : f.sets[s]) {
        Require(elem >= 0 && elem < f.num_elements,
                "set " + std::to_string(s) + " names element " +
                    std::to_string(elem) + " outside [0, " +
                    std::to_string(f.num_elements) + ")");
        Require(seen.insert(elem).second,
                "set " + std::to_string(s) + " lists element " +
                    std::to_string(elem) + " twice");
        covered[elem] = true;
      }
    }
    for (int elem = 0; elem < f.num_elements; ++elem) {
      Require(covered[elem], "element " + std::to_string(elem) +
                                 " belongs to no set; the gadget would be "
                                 "disconnected");
    }

    GadgetLayout layout;
    layout.pivot = 0;
    int next = 1;
    for (int s = 0; s < num_sets; ++s) layout.set_vertices.push_back(next++);
    for (int e = 0; e < f.num_elements; ++e)
      layout.element_vertices.push_back(next++);

    std::vector<Edge> edges;
    for (int s = 0; s < num_sets; ++s)
      AddPath(layout.pivot, layout.set_vertices[s], f.length, next, edges);
    for (int s = 0; s < num_sets; ++s)
      for (int t = s + 1; t < num_sets; ++t)
        AddPath(layout.set_vertices[s], layout.set_vertices[t], f.length, next,
                edges);
    for (int s = 0; s < num_sets; ++s)
      for (int elem : f.sets[s])
        AddPath(layout.set_vertices[s], layout.element_vertices[elem], f.length,
                next, edges);

    EdgeAddition planted;
    if (f.planted_cover) {
      std::vector<bool> hit(f.num_elements, false);
      for (int s : *f.planted_cover) {
        Require(s >= 0 && s < num_sets,
                "planted cover names unknown set " + std::to_string(s));
        Require(planted.Insert(Edge(layout.pivot, layout.set_vertices[s])),
                "planted cover lists set " + std::to_string(s) + " twice");
        for (int elem : f.sets[s]) hit[elem] = true;
      }
      Require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
              "planted cover does not cover every element");
    }
    return GeneratedGraph{InformationGraph(next, alpha, std::move(edges)),
                          std::move(planted), std::move(layout)};
  }
};

struct NameOf {
  std::string operator()(const PathFamily&) const { return "path"; }
  std::string operator()(const CycleFamily&) const { return "cycle"; }
  std::string operator()(const CliqueFamily&) const { return "clique"; }
  std::string operator()(const StarFamily&) const { return "star"; }
  std::string operator()(const SubdividedStarFamily&) const {
    return "subdivided-star";
  }
  std::string operator()(const BinaryTreeFamily&) const {
    return "binary-tree";
  }
  std::string operator()(const RandomFamily&) const { return "random"; }
  std::string operator()(const SetCoverGadgetFamily&) const {
    return "setcover-gadget";
  }
};

}  // namespace

GeneratedGraph Generate(const GraphFamilySpec& spec, std::uint64_t seed) {
  return std::visit(Builder{spec.alpha, seed}, spec.family);
}

std::string FamilyName(const GraphFamily& family) {
  return std::visit(NameOf{}, family);
}

}  // namespace bikit
