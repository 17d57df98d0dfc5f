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

#include "bench.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <variant>

#include "bikit/bikit.h"

namespace bikit::cli {
namespace {

using Scalar = std::variant<std::int64_t, double, bool, std::string>;

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw Error(ErrorKind::kParse,
              "config line " + std::to_string(line) + ": " + what);
}

Scalar ParseScalar(const std::string& text, int line) {
  const std::string t = Trim(text);
  if (t.empty()) Fail(line, "missing value");
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"') Fail(line, "unterminated string");
    return t.substr(1, t.size() - 2);
  }
  if (t == "true") return true;
  if (t == "false") return false;
  std::size_t used = 0;
  try {
    if (t.find_first_of(".eE") == std::string::npos) {
      const long long v = std::stoll(t, &used);
      if (used == t.size()) return static_cast<std::int64_t>(v);
    }
    const double v = std::stod(t, &used);
    if (used == t.size()) return v;
  } catch (const std::exception&) {
  }
  Fail(line, "cannot parse value '" + t + "'");
}

std::vector<Scalar> ParseValue(const std::string& text, int line) {
  const std::string t = Trim(text);
  if (t.empty() || t.front() != '[') return {ParseScalar(t, line)};
  if (t.back() != ']') Fail(line, "unterminated array");
  std::vector<Scalar> out;
  std::string item;
  bool quoted = false;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const char c = t[i];
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) {
      out.push_back(ParseScalar(item, line));
      item.clear();
    } else {
      item += c;
    }
  }
  if (!Trim(item).empty()) out.push_back(ParseScalar(item, line));
  return out;
}

std::string StripComment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

double AsDouble(const Scalar& s, int line) {
  if (auto* i = std::get_if<std::int64_t>(&s)) return static_cast<double>(*i);
  if (auto* d = std::get_if<double>(&s)) return *d;
  Fail(line, "expected a number");
}

std::int64_t AsInt(const Scalar& s, int line) {
  if (auto* i = std::get_if<std::int64_t>(&s)) return *i;
  Fail(line, "expected an integer");
}

std::string AsString(const Scalar& s, int line) {
  if (auto* v = std::get_if<std::string>(&s)) return *v;
  Fail(line, "expected a string");
}

bool AsBool(const Scalar& s, int line) {
  if (auto* v = std::get_if<bool>(&s)) return *v;
  Fail(line, "expected true or false");
}

const Scalar& Single(const std::vector<Scalar>& v, int line) {
  if (v.size() != 1) Fail(line, "expected a single value");
  return v[0];
}

std::string Num(double x) { return FormatExact(x); }

GraphFamily FamilyFor(const std::string& name, int n, double p) {
  if (name == "path") return PathFamily{n};
  if (name == "cycle") return CycleFamily{n};
  if (name == "clique") return CliqueFamily{n};
  if (name == "star") return StarFamily{n};
  if (name == "random") return RandomFamily{n, p};
  throw Error(ErrorKind::kInvalidParameter,
              "bench does not support family '" + name + "'");
}

}  // namespace

BenchConfig ParseBenchConfig(std::istream& in) {
  BenchConfig c;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = Trim(StripComment(raw));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) Fail(line, "expected key = value");
    const std::string key = Trim(text.substr(0, eq));
    const auto values = ParseValue(text.substr(eq + 1), line);
    if (key == "families") {
      c.families.clear();
      for (const auto& v : values) c.families.push_back(AsString(v, line));
    } else if (key == "n") {
      c.n.clear();
      for (const auto& v : values) c.n.push_back(AsInt(v, line));
    } else if (key == "k") {
      c.k.clear();
      for (const auto& v : values) c.k.push_back(AsInt(v, line));
    } else if (key == "alpha") {
      c.alpha.clear();
      for (const auto& v : values) c.alpha.push_back(AsDouble(v, line));
    } else if (key == "algos") {
      c.algos.clear();
      for (const auto& v : values) {
        const std::string name = AsString(v, line);
        ParseAlgorithm(name);
        c.algos.push_back(name);
      }
    } else if (key == "epsilon") {
      c.epsilon = AsDouble(Single(values, line), line);
    } else if (key == "p") {
      c.p = AsDouble(Single(values, line), line);
    } else if (key == "instances") {
      c.instances = AsInt(Single(values, line), line);
    } else if (key == "seed") {
      c.seed = AsInt(Single(values, line), line);
    } else if (key == "method") {
      c.method = AsString(Single(values, line), line);
      ParseMethod(c.method);
    } else if (key == "samples") {
      c.samples = AsInt(Single(values, line), line);
    } else if (key == "exact_edge_limit") {
      c.exact_edge_limit = AsInt(Single(values, line), line);
    } else if (key == "source") {
      c.source = AsInt(Single(values, line), line);
    } else if (key == "inner") {
      c.inner = AsString(Single(values, line), line);
      if (!IsBroadcastAlgorithm(ParseAlgorithm(c.inner))) {
        Fail(line, "inner must name a broadcast algorithm");
      }
    } else if (key == "oracle") {
      c.oracle = AsBool(Single(values, line), line);
    } else {
      Fail(line, "unknown key '" + key + "'");
    }
  }
  return c;
}

BenchConfig LoadBenchConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open config '" + path + "'");
  return ParseBenchConfig(in);
}

void RunBench(const BenchConfig& config, int workers, bool timing,
              std::ostream& csv) {
  csv << "family,n,m,alpha,instance,k,algo,edges_count,edge_budget,"
         "value_before,value_after,half_width,optimum,bound,ratio";
  if (timing) csv << ",runtime_ms";
  csv << '\n';

  WitnessOptions options;
  options.estimator.method = ParseMethod(config.method);
  options.estimator.samples = config.samples;
  options.estimator.seed = config.seed;
  options.estimator.exact_edge_limit = config.exact_edge_limit;
  options.estimator.workers = workers;

  for (const std::string& family : config.families) {
    for (int n : config.n) {
      for (double alpha : config.alpha) {
        const int draws = family == "random" ? config.instances : 1;
        for (int inst = 0; inst < draws; ++inst) {
          GraphFamilySpec spec{FamilyFor(family, n, config.p), alpha};
          const InformationGraph g =
              Generate(spec, ChildSeed(config.seed, inst)).graph;
          const VertexId source =
              std::min<VertexId>(config.source, g.num_vertices() - 1);
          for (int k : config.k) {
            std::optional<double> beta_star, upsilon_star;
            if (config.oracle) {
              try {
                beta_star = BruteForceBroadcastOpt(g, k).beta_star;
                upsilon_star = BruteForceReachOpt(g, source, k).upsilon_star;
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::kLimitExceeded) throw;
              }
            }
            for (const std::string& name : config.algos) {
              const Algorithm algo = ParseAlgorithm(name);
              AugmentationResult r;
              switch (algo) {
                case Algorithm::kReachWitness:
                  r = ImproveReachWitness(g, source, k, config.epsilon,
                                          options.estimator);
                  break;
                case Algorithm::kReachBall:
                  r = ImproveReachBall(g, source, k, config.epsilon,
                                       options.estimator);
                  break;
                case Algorithm::kReach:
                  r = ImproveReach(g, source, k, config.epsilon,
                                   options.estimator);
                  break;
                case Algorithm::kReachViaBroadcast:
                  r = ReachViaBroadcast(g, source, k,
                                        ParseAlgorithm(config.inner),
                                        config.epsilon, options);
                  break;
                default:
                  r = ImproveBroadcast(algo, g, k, config.epsilon, options);
              }
              const auto optimum =
                  IsBroadcastAlgorithm(algo) ? beta_star : upsilon_star;
              if (optimum) AttachGuarantee(r, alpha, *optimum);
              std::int64_t budget = r.diagnostics.edge_budget.value_or(-1);
              csv << family << ',' << g.num_vertices() << ','
                  << g.num_edges() << ',' << Num(alpha) << ',' << inst << ','
                  << k << ',' << name << ',' << r.edges.size() << ','
                  << budget << ',' << Num(r.before.value) << ','
                  << Num(r.after.value) << ',' << Num(r.after.half_width)
                  << ',';
              if (optimum) {
                csv << Num(*optimum) << ',' << Num(*r.guarantee_bound) << ','
                    << Num(r.after.Lower() / *r.guarantee_bound);
              } else {
                csv << ",,";
              }
              if (timing) csv << ',' << Num(r.diagnostics.runtime_ms);
              csv << '\n';
            }
          }
        }
      }
    }
  }
}

}  // namespace bikit::cli
