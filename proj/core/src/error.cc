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

#include "bikit/error.h"

namespace bikit {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kSelfLoop:
      return "self_loop";
    case ErrorKind::kDuplicateEdge:
      return "duplicate_edge";
    case ErrorKind::kVertexRange:
      return "vertex_range";
    case ErrorKind::kAlphaRange:
      return "alpha_range";
    case ErrorKind::kConnectivity:
      return "connectivity";
    case ErrorKind::kInvalidParameter:
      return "invalid_parameter";
    case ErrorKind::kLimitExceeded:
      return "limit_exceeded";
    case ErrorKind::kInfeasible:
      return "infeasible";
    case ErrorKind::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace bikit
