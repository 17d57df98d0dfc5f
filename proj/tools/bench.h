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

#ifndef BIKIT_TOOLS_BENCH_H_
#define BIKIT_TOOLS_BENCH_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace bikit::cli {

// Sweep description read from a flat "key = value" file; see
// docs/bench-config.md.
struct BenchConfig {
  std::vector<std::string> families{"path"};
  std::vector<int> n{4};
  std::vector<int> k{1};
  std::vector<double> alpha{0.5};
  std::vector<std::string> algos{"bicriteria"};
  double epsilon = 0.5;
  double p = 0.5;  // edge probability of the random family
  int instances = 1;  // draws per (family, n, alpha) for random graphs
  std::uint64_t seed = 0;
  std::string method = "exact";
  std::int64_t samples = 100000;
  int exact_edge_limit = 20;
  int source = 0;
  bool oracle = true;
  // Broadcast algorithm used by reach-via-broadcast rows.
  std::string inner = "single";
};

// Throws bikit::Error(kParse) naming the offending line.
BenchConfig ParseBenchConfig(std::istream& in);
BenchConfig LoadBenchConfig(const std::string& path);

// One CSV row per (instance, k, algorithm).
void RunBench(const BenchConfig& config, int workers, bool timing,
              std::ostream& csv);

}  // namespace bikit::cli

#endif  // BIKIT_TOOLS_BENCH_H_
