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

#include "bikit/partition_distribution.h"

#include <cstring>
#include <numeric>

#include "bikit/error.h"
#include "bikit/random.h"

namespace bikit {
namespace {

std::uint64_t HashLabels(const std::uint8_t* data, int n) {
  std::uint64_t h = static_cast<std::uint64_t>(n);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, data + i, 8);
    h = Mix64(h ^ chunk);
  }
  std::uint64_t tail = 0;
  for (int shift = 0; i < n; ++i, shift += 8) {
    tail |= static_cast<std::uint64_t>(data[i]) << shift;
  }
  return Mix64(h ^ tail);
}

// Open-addressing accumulator: identical label strings are merged by adding
// their probabilities. Insertion order is preserved, which keeps every later
// floating-point reduction deterministic.
class StateAccumulator {
 public:
  StateAccumulator(int n, std::size_t expected) : n_(n) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, -1);
    labels_.reserve(expected * n);
    probs_.reserve(expected);
  }

  void Add(const std::uint8_t* labels, double p) {
    if ((probs_.size() + 1) * 2 > slots_.size()) Grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = HashLabels(labels, n_) & mask;
    while (true) {
      std::int64_t idx = slots_[pos];
      if (idx < 0) {
        slots_[pos] = static_cast<std::int64_t>(probs_.size());
        labels_.insert(labels_.end(), labels, labels + n_);
        probs_.push_back(p);
        return;
      }
      if (std::memcmp(labels_.data() + idx * n_, labels, n_) == 0) {
        probs_[idx] += p;
        return;
      }
      pos = (pos + 1) & mask;
    }
  }

  std::vector<std::uint8_t> TakeLabels() { return std::move(labels_); }
  std::vector<double> TakeProbs() { return std::move(probs_); }

 private:
  void Grow() {
    std::vector<std::int64_t> next(slots_.size() * 2, -1);
    std::size_t mask = next.size() - 1;
    for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
      std::size_t pos = HashLabels(labels_.data() + idx * n_, n_) & mask;
      while (next[pos] >= 0) pos = (pos + 1) & mask;
      next[pos] = static_cast<std::int64_t>(idx);
    }
    slots_ = std::move(next);
  }

  int n_;
  std::vector<std::int64_t> slots_;
  std::vector<std::uint8_t> labels_;
  std::vector<double> probs_;
};

}  // namespace

PartitionDistribution::PartitionDistribution(int num_vertices, double alpha)
    : n_(num_vertices), alpha_(alpha) {
  if (n_ < 1 || n_ > kMaxPartitionVertices) {
    throw Error(ErrorKind::kLimitExceeded,
                "exact enumeration supports 1.." +
                    std::to_string(kMaxPartitionVertices) + " vertices, got " +
                    std::to_string(n_));
  }
  labels_.resize(n_);
  std::iota(labels_.begin(), labels_.end(), 0);
  probs_.assign(1, 1.0);
}

PartitionDistribution PartitionDistribution::ForGraph(
    const InformationGraph& g) {
  PartitionDistribution dist(g.num_vertices(), g.alpha());
  dist.AddEdges(g.edges());
  return dist;
}

void PartitionDistribution::AddEdge(const Edge& e) {
  const std::size_t states = probs_.size();
  StateAccumulator acc(n_, states * 2);
  std::vector<std::uint8_t> merged(n_);
  for (std::size_t s = 0; s < states; ++s) {
    const std::uint8_t* labels = labels_.data() + s * n_;
    const double p = probs_[s];
    const std::uint8_t la = labels[e.u], lb = labels[e.v];
    if (la == lb) {
      acc.Add(labels, p);
      continue;
    }
    acc.Add(labels, p * (1.0 - alpha_));
    const std::uint8_t lo = la < lb ? la : lb;
    const std::uint8_t hi = la < lb ? lb : la;
    for (int i = 0; i < n_; ++i) {
      std::uint8_t l = labels[i];
      merged[i] = l == hi ? lo : (l > hi ? l - 1 : l);
    }
    acc.Add(merged.data(), p * alpha_);
  }
  labels_ = acc.TakeLabels();
  probs_ = acc.TakeProbs();
}

void PartitionDistribution::AddEdges(std::span<const Edge> edges) {
  for (const Edge& e : edges) AddEdge(e);
}

PartitionDistribution PartitionDistribution::WithEdges(
    std::span<const Edge> edges) const {
  PartitionDistribution copy = *this;
  copy.AddEdges(edges);
  return copy;
}

double PartitionDistribution::TotalProbability() const {
  double total = 0.0;
  for (double p : probs_) total += p;
  return total;
}

std::vector<double> PartitionDistribution::PairProbabilities() const {
  std::vector<double> out(static_cast<std::size_t>(n_) * n_, 0.0);
  std::vector<std::vector<int>> blocks(n_);
  for (std::size_t s = 0; s < probs_.size(); ++s) {
    auto labels = Labels(s);
    for (auto& b : blocks) b.clear();
    for (int v = 0; v < n_; ++v) blocks[labels[v]].push_back(v);
    const double p = probs_[s];
    for (const auto& block : blocks) {
      for (std::size_t a = 0; a < block.size(); ++a) {
        for (std::size_t b = a + 1; b < block.size(); ++b) {
          out[static_cast<std::size_t>(block[a]) * n_ + block[b]] += p;
        }
      }
    }
  }
  for (int u = 0; u < n_; ++u) {
    out[static_cast<std::size_t>(u) * n_ + u] = 1.0;
    for (int v = u + 1; v < n_; ++v) {
      out[static_cast<std::size_t>(v) * n_ + u] =
          out[static_cast<std::size_t>(u) * n_ + v];
    }
  }
  return out;
}

std::vector<double> PartitionDistribution::RowProbabilities(
    VertexId source) const {
  std::vector<double> row(n_, 0.0);
  for (std::size_t s = 0; s < probs_.size(); ++s) {
    auto labels = Labels(s);
    const std::uint8_t ls = labels[source];
    const double p = probs_[s];
    for (int v = 0; v < n_; ++v) {
      if (labels[v] == ls) row[v] += p;
    }
  }
  row[source] = 1.0;
  return row;
}

double PartitionDistribution::PairProbability(VertexId u, VertexId v) const {
  if (u == v) return 1.0;
  double total = 0.0;
  for (std::size_t s = 0; s < probs_.size(); ++s) {
    auto labels = Labels(s);
    if (labels[u] == labels[v]) total += probs_[s];
  }
  return total;
}

}  // namespace bikit
