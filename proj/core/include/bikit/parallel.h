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

#ifndef BIKIT_PARALLEL_H_
#define BIKIT_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace bikit {

// Resolves a requested worker count: values <= 0 mean "all hardware threads".
int ResolveWorkers(int requested);

// Runs fn(begin, end) over contiguous chunks of [0, count) on up to `workers`
// threads. Calls made from inside a worker run inline on that worker, so
// nested parallel regions do not oversubscribe. Callers must make results
// independent of chunking (write to per-index slots or sum integers).
void ParallelFor(int workers, std::size_t count,
                 const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace bikit

#endif  // BIKIT_PARALLEL_H_
