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

#include "bikit/augmentation.h"

#include <algorithm>
#include <cmath>

#include "bikit/error.h"

namespace bikit {
namespace {

struct NamedAlgorithm {
  Algorithm algorithm;
  std::string_view name;
};

constexpr NamedAlgorithm kNames[] = {
    {Algorithm::kBicriteria, "bicriteria"},
    {Algorithm::kSingleCriteria, "single"},
    {Algorithm::kWitness3, "witness3"},
    {Algorithm::kWitness2, "witness2"},
    {Algorithm::kSubmod, "submod"},
    {Algorithm::kReachWitness, "reach-witness"},
    {Algorithm::kReachBall, "reach-ball"},
    {Algorithm::kReach, "reach"},
    {Algorithm::kReachViaBroadcast, "reach-via-broadcast"},
};

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& n : kNames) {
    if (n.algorithm == algorithm) return n.name;
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.algorithm;
  }
  throw Error(ErrorKind::kInvalidParameter,
              "unknown algorithm '" + std::string(name) + "'");
}

bool IsBroadcastAlgorithm(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBicriteria:
    case Algorithm::kSingleCriteria:
    case Algorithm::kWitness3:
    case Algorithm::kWitness2:
    case Algorithm::kSubmod:
      return true;
    default:
      return false;
  }
}

double GuaranteeBound(Algorithm algorithm, int k, double epsilon,
                      double alpha, double optimum,
                      std::optional<Algorithm> inner) {
  const double kk = k;
  const double opt4 = std::pow(optimum, 4.0);
  switch (algorithm) {
    case Algorithm::kBicriteria:
      return opt4 * alpha * alpha / std::pow(1.0 + 2.0 * kk * alpha, 4.0);
    case Algorithm::kSingleCriteria:
      return opt4 * alpha * alpha / std::pow(16.0, kk + 1.0);
    case Algorithm::kWitness3:
      return 4.0 * optimum /
             ((1.0 + epsilon) * (12.0 * std::pow(kk, 4.0) + 3.0 * kk * kk));
    case Algorithm::kWitness2:
      return optimum * alpha / ((1.0 + epsilon) * (12.0 * kk * kk + 3.0));
    case Algorithm::kSubmod:
      return optimum * std::pow(alpha, 2.0 + epsilon) /
             ((1.0 + epsilon) * (24.0 * kk * kk + 6.0));
    case Algorithm::kReachWitness:
      return optimum / ((1.0 + epsilon) * (2.0 * kk + 2.0));
    case Algorithm::kReachBall:
      return optimum * alpha / ((1.0 + epsilon) * (1.0 + 2.0 * kk * alpha));
    case Algorithm::kReach:
      return std::max(
          GuaranteeBound(Algorithm::kReachWitness, k, epsilon, alpha, optimum),
          GuaranteeBound(Algorithm::kReachBall, k, epsilon, alpha, optimum));
    case Algorithm::kReachViaBroadcast:
      if (!inner || !IsBroadcastAlgorithm(*inner)) {
        throw Error(ErrorKind::kInvalidParameter,
                    "reach-via-broadcast needs a broadcast algorithm");
      }
      return GuaranteeBound(*inner, k, epsilon, alpha, optimum * optimum);
  }
  return 0.0;
}

void AttachGuarantee(AugmentationResult& result, double alpha,
                     double optimum) {
  result.optimum = optimum;
  result.guarantee_bound =
      GuaranteeBound(result.algorithm, result.k, result.epsilon, alpha,
                     optimum, result.diagnostics.inner_algorithm);
}

std::int64_t GreedyFactor(std::size_t num_sets) {
  if (num_sets == 0) return 0;
  return static_cast<std::int64_t>(
      std::ceil(std::log(static_cast<double>(num_sets)) + 1.0));
}

void CheckBudgetParameter(int k) {
  if (k < 1) {
    throw Error(ErrorKind::kInvalidParameter,
                "k must be at least 1, got " + std::to_string(k));
  }
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::kInvalidParameter,
                "epsilon must be positive, got " + std::to_string(epsilon));
  }
}

}  // namespace bikit
