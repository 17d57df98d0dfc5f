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

#include "bikit/graph_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bikit/error.h"

namespace bikit {
namespace {

[[noreturn]] void ParseFailure(int line, const std::string& what) {
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line) + ": " + what);
}

bool IsBlankOrComment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

std::string FormatExact(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

InformationGraph ReadGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  double alpha = 0.0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::istringstream tokens(line);
    if (!have_header) {
      if (!(tokens >> n >> alpha)) {
        ParseFailure(line_no, "expected header \"<n> <alpha>\"");
      }
      std::string extra;
      if (tokens >> extra) ParseFailure(line_no, "trailing token '" + extra + "'");
      if (n < 1) ParseFailure(line_no, "vertex count must be positive");
      if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorKind::kAlphaRange,
                    "line " + std::to_string(line_no) + ": alpha " +
                        FormatExact(alpha) + " outside (0, 1)");
      }
      have_header = true;
      continue;
    }
    long long u = 0, v = 0;
    if (!(tokens >> u >> v)) ParseFailure(line_no, "expected edge \"<u> <v>\"");
    std::string extra;
    if (tokens >> extra) ParseFailure(line_no, "trailing token '" + extra + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::kVertexRange,
                  "line " + std::to_string(line_no) + ": endpoint outside [0, " +
                      std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorKind::kSelfLoop, "line " + std::to_string(line_no) +
                                            ": self-loop at vertex " +
                                            std::to_string(u));
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (!have_header) ParseFailure(line_no, "missing header \"<n> <alpha>\"");
  return InformationGraph(static_cast<int>(n), alpha, std::move(edges));
}

InformationGraph LoadGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open graph file " + path);
  return ReadGraph(in);
}

void WriteGraph(const InformationGraph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << FormatExact(g.alpha()) << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void SaveGraph(const InformationGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write graph file " + path);
  WriteGraph(g, out);
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path);
}

}  // namespace bikit
