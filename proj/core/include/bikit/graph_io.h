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

#ifndef BIKIT_GRAPH_IO_H_
#define BIKIT_GRAPH_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "bikit/graph.h"

namespace bikit {

// Edge-list text format:
//   # comment lines are ignored
//   <n> <alpha>
//   <u> <v>        one line per edge, 0 <= u < v < n
// Tokens are whitespace-separated; every line is newline-terminated on write.
// alpha is written with 17 significant digits so that a save/load round trip
// reproduces the graph exactly.

InformationGraph ReadGraph(std::istream& in);
InformationGraph LoadGraph(const std::string& path);

void WriteGraph(const InformationGraph& g, std::ostream& out);
void SaveGraph(const InformationGraph& g, const std::string& path);

// Formats a double with 17 significant digits ("%.17g").
std::string FormatExact(double value);

}  // namespace bikit

#endif  // BIKIT_GRAPH_IO_H_
