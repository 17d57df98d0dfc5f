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

#ifndef BIKIT_AUGMENT_KCENTER_H_
#define BIKIT_AUGMENT_KCENTER_H_

#include "bikit/augmentation.h"
#include "bikit/graph.h"
#include "bikit/proximity.h"

namespace bikit {

// Farthest-first 2k centers on the implied metric, joined by a star rooted
// at the first center. Adds at most 2k - 1 edges.
AugmentationResult ImproveBicriteria(const InformationGraph& g, int k,
                                     const EstimatorConfig& cfg);

// Farthest-first k + 1 centers joined by a star. Adds at most k edges.
AugmentationResult ImproveSingleCriteria(const InformationGraph& g, int k,
                                         const EstimatorConfig& cfg);

}  // namespace bikit

#endif  // BIKIT_AUGMENT_KCENTER_H_
