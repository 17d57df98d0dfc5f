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

#ifndef BIKIT_BIKIT_H_
#define BIKIT_BIKIT_H_

#include "bikit/augment_kcenter.h"
#include "bikit/augment_reach.h"
#include "bikit/augment_submod.h"
#include "bikit/augment_witness.h"
#include "bikit/augmentation.h"
#include "bikit/center_select.h"
#include "bikit/error.h"
#include "bikit/generators.h"
#include "bikit/graph.h"
#include "bikit/graph_io.h"
#include "bikit/hitting_set.h"
#include "bikit/oracle.h"
#include "bikit/parallel.h"
#include "bikit/partition_distribution.h"
#include "bikit/proximity.h"
#include "bikit/random.h"
#include "bikit/search_grid.h"

#endif  // BIKIT_BIKIT_H_
