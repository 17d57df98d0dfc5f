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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bench.h"
#include "bikit/bikit.h"
#include "json.hpp"

namespace bikit::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kSchemaVersion = 1;

struct EstimatorFlags {
  std::string method = "exact";
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  int workers = 0;
  int exact_edge_limit = 20;
};

void AddEstimatorFlags(CLI::App* cmd, EstimatorFlags& f) {
  cmd->add_option("--method", f.method, "Proximity estimator")
      ->check(CLI::IsMember({"exact", "monte-carlo", "mc"}))
      ->capture_default_str();
  cmd->add_option("--samples", f.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Master seed")
      ->envname("BIKIT_SEED")
      ->capture_default_str();
  cmd->add_option("--workers", f.workers,
                  "Sampling threads (<= 0: all cores)")
      ->capture_default_str();
  cmd->add_option("--exact-edge-limit", f.exact_edge_limit,
                  "Largest edge count for exact estimation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

EstimatorConfig ToConfig(const EstimatorFlags& f) {
  EstimatorConfig cfg;
  cfg.method = ParseMethod(f.method);
  cfg.samples = f.samples;
  cfg.seed = f.seed;
  cfg.workers = f.workers;
  cfg.exact_edge_limit = f.exact_edge_limit;
  return cfg;
}

Json EdgesJson(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

template <typename T>
Json OrNull(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json DiagnosticsJson(const AugmentationDiagnostics& d) {
  Json j = Json::object();
  if (!d.centers.empty()) j["centers"] = d.centers;
  if (d.radius) j["radius"] = *d.radius;
  if (d.diameter_bound) j["diameter_bound"] = *d.diameter_bound;
  if (d.grid_size) j["grid_size"] = *d.grid_size;
  if (d.target) j["target"] = *d.target;
  if (d.edge_budget) j["edge_budget"] = *d.edge_budget;
  if (d.num_sets) j["num_sets"] = *d.num_sets;
  if (d.universe_size) j["universe_size"] = *d.universe_size;
  if (d.center) j["center"] = *d.center;
  if (d.iterations) j["iterations"] = *d.iterations;
  if (!d.potential_trace.empty()) j["potential_trace"] = d.potential_trace;
  if (d.branch) j["branch"] = *d.branch;
  if (d.alpha_at_most_half) j["alpha_at_most_half"] = *d.alpha_at_most_half;
  if (d.inner_algorithm) j["inner_algorithm"] = AlgorithmName(*d.inner_algorithm);
  if (d.predicate_calls > 0) j["predicate_calls"] = d.predicate_calls;
  return j;
}

bool UsesEpsilon(const AugmentationResult& r) {
  Algorithm a = r.algorithm == Algorithm::kReachViaBroadcast &&
                        r.diagnostics.inner_algorithm
                    ? *r.diagnostics.inner_algorithm
                    : r.algorithm;
  return a != Algorithm::kBicriteria && a != Algorithm::kSingleCriteria;
}

Json ResultJson(const std::string& command, const AugmentationResult& r,
                const InformationGraph& g, const EstimatorConfig& cfg,
                bool timing) {
  const bool reach = r.source.has_value();
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["algorithm"] = AlgorithmName(r.algorithm);
  j["k"] = r.k;
  j["epsilon"] = UsesEpsilon(r) ? Json(r.epsilon) : Json(nullptr);
  j["alpha"] = g.alpha();
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  if (reach) j["source"] = *r.source;
  j["method"] = MethodName(cfg.method);
  j["samples"] = r.after.samples;
  j["seed"] = cfg.seed;
  j["edges_added"] = EdgesJson(r.edges.edges());
  j["edges_count"] = r.edges.size();
  j[reach ? "reach_before" : "broadcast_before"] = r.before.value;
  j[reach ? "reach_after" : "broadcast_after"] = r.after.value;
  j["half_width"] = r.after.half_width;
  j["grid_index"] = OrNull(r.diagnostics.grid_index);
  j["optimum"] = OrNull(r.optimum);
  j["guarantee_bound"] = OrNull(r.guarantee_bound);
  j["diagnostics"] = DiagnosticsJson(r.diagnostics);
  if (timing) j["runtime_ms"] = r.diagnostics.runtime_ms;
  return j;
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void WriteCsvFile(const ProximityMatrix& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  WriteMatrixCsv(m, f);
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Set-cover gadget description:
//   {"elements": m, "sets": [[0, 1], [1]], "planted_cover": [0]}
SetCoverGadgetFamily GadgetFromJson(const std::string& path, int length) {
  Json j;
  try {
    j = Json::parse(ReadFile(path));
    SetCoverGadgetFamily f;
    f.num_elements = j.at("elements").get<int>();
    f.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    if (j.contains("planted_cover")) {
      f.planted_cover = j.at("planted_cover").get<std::vector<int>>();
    }
    f.length = length;
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse,
                "bad gadget spec '" + path + "': " + e.what());
  }
}

struct GenFlags {
  std::string family;
  int n = 4;
  double alpha = 0.5;
  int leaves = 3;
  int length = 2;
  int depth = 2;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string spec;
  std::string output;
};

int CmdGen(const GenFlags& f, std::ostream& out) {
  GraphFamily family;
  const std::string& name = f.family;
  if (name == "path") family = PathFamily{f.n};
  else if (name == "cycle") family = CycleFamily{f.n};
  else if (name == "clique") family = CliqueFamily{f.n};
  else if (name == "star") family = StarFamily{f.n};
  else if (name == "subdivided-star")
    family = SubdividedStarFamily{f.leaves, f.length};
  else if (name == "binary-tree") family = BinaryTreeFamily{f.depth};
  else if (name == "random") family = RandomFamily{f.n, f.p};
  else {
    if (f.spec.empty()) {
      throw Error(ErrorKind::kInvalidParameter,
                  "setcover-gadget needs --spec");
    }
    family = GadgetFromJson(f.spec, f.length);
  }
  const GeneratedGraph gen = Generate({family, f.alpha}, f.seed);
  std::ostringstream text;
  text << "# family " << FamilyName(family) << '\n';
  if (gen.layout) {
    text << "# pivot " << gen.layout->pivot << '\n';
    text << "# sets";
    for (VertexId v : gen.layout->set_vertices) text << ' ' << v;
    text << "\n# elements";
    for (VertexId v : gen.layout->element_vertices) text << ' ' << v;
    text << '\n';
  }
  for (const Edge& e : gen.planted.edges()) {
    text << "# planted " << e.u << ' ' << e.v << '\n';
  }
  WriteGraph(gen.graph, text);
  if (f.output.empty()) {
    out << text.str();
  } else {
    std::ofstream file(f.output);
    if (!file) throw Error(ErrorKind::kIo, "cannot write '" + f.output + "'");
    file << text.str();
  }
  return 0;
}

struct ImproveFlags {
  std::string graph;
  std::string algo;
  int k = 1;
  double epsilon = 0.5;
  int pool_cap = kDefaultPoolCap;
  std::optional<double> optimum;
  bool oracle = false;
  bool no_timing = false;
  std::string matrix_csv;
  // reach only
  VertexId source = 0;
  std::string inner = "single";
};

WitnessOptions MakeOptions(const ImproveFlags& f, const EstimatorFlags& e) {
  WitnessOptions o;
  o.estimator = ToConfig(e);
  o.pool_cap = f.pool_cap;
  return o;
}

int CmdImprove(const ImproveFlags& f, const EstimatorFlags& e,
               std::ostream& out) {
  const InformationGraph g = LoadGraph(f.graph);
  const WitnessOptions options = MakeOptions(f, e);
  AugmentationResult r = ImproveBroadcast(ParseAlgorithm(f.algo), g, f.k,
                                          f.epsilon, options);
  if (f.optimum) {
    AttachGuarantee(r, g.alpha(), *f.optimum);
  } else if (f.oracle) {
    AttachGuarantee(r, g.alpha(), BruteForceBroadcastOpt(g, f.k).beta_star);
  }
  if (!f.matrix_csv.empty()) {
    WriteCsvFile(ProximityEngine(g, options.estimator).Matrix(r.edges.edges()),
                 f.matrix_csv);
  }
  Emit(out, ResultJson("improve", r, g, options.estimator, !f.no_timing));
  return 0;
}

int CmdReach(const ImproveFlags& f, const EstimatorFlags& e,
             std::ostream& out) {
  const InformationGraph g = LoadGraph(f.graph);
  const WitnessOptions options = MakeOptions(f, e);
  const Algorithm algo = ParseAlgorithm(f.algo);
  AugmentationResult r;
  switch (algo) {
    case Algorithm::kReachWitness:
      r = ImproveReachWitness(g, f.source, f.k, f.epsilon, options.estimator);
      break;
    case Algorithm::kReachBall:
      r = ImproveReachBall(g, f.source, f.k, f.epsilon, options.estimator);
      break;
    case Algorithm::kReach:
      r = ImproveReach(g, f.source, f.k, f.epsilon, options.estimator);
      break;
    default:
      r = ReachViaBroadcast(g, f.source, f.k, ParseAlgorithm(f.inner),
                            f.epsilon, options);
  }
  if (f.optimum) {
    AttachGuarantee(r, g.alpha(), *f.optimum);
  } else if (f.oracle) {
    AttachGuarantee(r, g.alpha(),
                    BruteForceReachOpt(g, f.source, f.k).upsilon_star);
  }
  if (!f.matrix_csv.empty()) {
    WriteCsvFile(ProximityEngine(g, options.estimator).Matrix(r.edges.edges()),
                 f.matrix_csv);
  }
  Emit(out, ResultJson("reach", r, g, options.estimator, !f.no_timing));
  return 0;
}

struct QueryFlags {
  std::string graph;
  std::optional<VertexId> source;
  std::string matrix_csv;
  bool no_timing = false;
  int k = 1;
  int max_non_edges = 15;
  int max_total_edges = 20;
};

int CmdBroadcast(const QueryFlags& f, const EstimatorFlags& e,
                 std::ostream& out) {
  Stopwatch clock;
  const InformationGraph g = LoadGraph(f.graph);
  const EstimatorConfig cfg = ToConfig(e);
  const ProximityMatrix m = ProximityEngine(g, cfg).Matrix();
  const BroadcastValue b = Broadcast(m);
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "broadcast";
  j["method"] = MethodName(cfg.method);
  j["samples"] = m.samples();
  j["seed"] = cfg.seed;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["alpha"] = g.alpha();
  j["value"] = b.value.value;
  j["argmin"] = {b.argmin.u, b.argmin.v};
  j["half_width"] = b.value.half_width;
  if (f.source) {
    if (*f.source < 0 || *f.source >= g.num_vertices()) {
      throw Error(ErrorKind::kVertexRange,
                  "source " + std::to_string(*f.source) + " out of range");
    }
    const ReachValue r = Reach(m, *f.source);
    j["reach"] = {{"source", *f.source},
                  {"value", r.value.value},
                  {"argmin", r.argmin}};
  }
  if (!f.matrix_csv.empty()) WriteCsvFile(m, f.matrix_csv);
  if (!f.no_timing) j["runtime_ms"] = clock.ElapsedMs();
  Emit(out, j);
  return 0;
}

int CmdBrute(const QueryFlags& f, int workers, std::ostream& out) {
  Stopwatch clock;
  const InformationGraph g = LoadGraph(f.graph);
  OracleLimits limits;
  limits.max_non_edges = f.max_non_edges;
  limits.max_total_edges = f.max_total_edges;
  limits.workers = workers;
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "brute";
  j["k"] = f.k;
  if (f.source) {
    const ReachOptimum r = BruteForceReachOpt(g, *f.source, f.k, limits);
    j["source"] = *f.source;
    j["upsilon_star"] = r.upsilon_star;
    j["edges"] = EdgesJson(r.best.edges());
    j["argmin"] = r.argmin;
  } else {
    const BroadcastOptimum b = BruteForceBroadcastOpt(g, f.k, limits);
    j["beta_star"] = b.beta_star;
    j["edges"] = EdgesJson(b.best.edges());
  }
  if (!f.no_timing) j["runtime_ms"] = clock.ElapsedMs();
  Emit(out, j);
  return 0;
}

struct BenchFlags {
  std::string config;
  std::string output;
  int workers = 0;
  bool no_timing = false;
};

int CmdBench(const BenchFlags& f, std::ostream& out) {
  const BenchConfig config = LoadBenchConfig(f.config);
  if (f.output.empty()) {
    RunBench(config, f.workers, !f.no_timing, out);
  } else {
    std::ofstream file(f.output);
    if (!file) throw Error(ErrorKind::kIo, "cannot write '" + f.output + "'");
    RunBench(config, f.workers, !f.no_timing, file);
  }
  return 0;
}

int ReportError(std::ostream& out, std::ostream& err, std::string_view kind,
                const std::string& message, int code) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["error"] = {{"kind", kind}, {"message", message}};
  Emit(out, j);
  err << "bikit: " << message << '\n';
  return code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Information-access estimation and edge augmentation",
               "bikit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bikit 0.1.0");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("--family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "clique", "star",
                             "subdivided-star", "binary-tree", "random",
                             "setcover-gadget"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--alpha", gen.alpha, "Edge activation probability")
      ->capture_default_str();
  gen_cmd->add_option("--leaves", gen.leaves, "Subdivided-star leaves");
  gen_cmd->add_option("--len", gen.length, "Path length of subdivided "
                                           "stars and gadgets");
  gen_cmd->add_option("--depth", gen.depth, "Binary-tree depth");
  gen_cmd->add_option("--p", gen.p, "Random-graph edge probability");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")
      ->envname("BIKIT_SEED");
  gen_cmd->add_option("--spec", gen.spec, "Set-cover gadget JSON");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  ImproveFlags improve;
  EstimatorFlags improve_est;
  auto* improve_cmd =
      app.add_subcommand("improve", "Add edges to raise the broadcast");
  improve_cmd->add_option("graph", improve.graph, "Graph file")->required();
  improve_cmd->add_option("--algo", improve.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember(
          {"bicriteria", "single", "witness3", "witness2", "submod"}));
  improve_cmd->add_option("--k", improve.k, "Edge budget parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  improve_cmd->add_option("--epsilon", improve.epsilon, "Grid ratio")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  improve_cmd->add_option("--pool-cap", improve.pool_cap,
                          "Witness candidate pool cap")
      ->capture_default_str();
  auto* improve_opt = improve_cmd->add_option(
      "--beta-star", improve.optimum, "Known optimum for the guarantee");
  improve_cmd->add_flag("--oracle", improve.oracle,
                        "Brute-force the optimum for the guarantee")
      ->excludes(improve_opt);
  improve_cmd->add_flag("--no-timing", improve.no_timing, "Omit runtime_ms");
  improve_cmd->add_option("--matrix-csv", improve.matrix_csv,
                          "Write the proximity matrix of G + S");
  AddEstimatorFlags(improve_cmd, improve_est);

  ImproveFlags reach;
  reach.algo = "reach";
  EstimatorFlags reach_est;
  auto* reach_cmd =
      app.add_subcommand("reach", "Add edges to raise the reach of a source");
  reach_cmd->add_option("graph", reach.graph, "Graph file")->required();
  reach_cmd->add_option("--source", reach.source, "Source vertex")
      ->capture_default_str();
  reach_cmd->add_option("--algo", reach.algo, "Algorithm")
      ->check(CLI::IsMember(
          {"reach", "reach-witness", "reach-ball", "reach-via-broadcast"}))
      ->capture_default_str();
  reach_cmd->add_option("--inner", reach.inner,
                        "Broadcast algorithm for reach-via-broadcast")
      ->check(CLI::IsMember(
          {"bicriteria", "single", "witness3", "witness2", "submod"}))
      ->capture_default_str();
  reach_cmd->add_option("--k", reach.k, "Edge budget parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  reach_cmd->add_option("--epsilon", reach.epsilon, "Grid ratio")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  reach_cmd->add_option("--pool-cap", reach.pool_cap,
                        "Witness candidate pool cap")
      ->capture_default_str();
  auto* reach_opt = reach_cmd->add_option("--upsilon-star", reach.optimum,
                                          "Known optimum for the guarantee");
  reach_cmd->add_flag("--oracle", reach.oracle,
                      "Brute-force the optimum for the guarantee")
      ->excludes(reach_opt);
  reach_cmd->add_flag("--no-timing", reach.no_timing, "Omit runtime_ms");
  reach_cmd->add_option("--matrix-csv", reach.matrix_csv,
                        "Write the proximity matrix of G + S");
  AddEstimatorFlags(reach_cmd, reach_est);

  QueryFlags bq;
  EstimatorFlags bq_est;
  auto* broadcast_cmd =
      app.add_subcommand("broadcast", "Estimate broadcast (and reach)");
  broadcast_cmd->add_option("graph", bq.graph, "Graph file")->required();
  broadcast_cmd->add_option("--source", bq.source, "Also report this reach");
  broadcast_cmd->add_option("--matrix-csv", bq.matrix_csv,
                            "Write the proximity matrix");
  broadcast_cmd->add_flag("--no-timing", bq.no_timing, "Omit runtime_ms");
  AddEstimatorFlags(broadcast_cmd, bq_est);

  QueryFlags brute;
  int brute_workers = 0;
  auto* brute_cmd =
      app.add_subcommand("brute", "Exact optimum by exhaustive search");
  brute_cmd->add_option("graph", brute.graph, "Graph file")->required();
  brute_cmd->add_option("--k", brute.k, "Number of added edges")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  brute_cmd->add_option("--source", brute.source,
                        "Optimize the reach of this vertex");
  brute_cmd->add_option("--max-non-edges", brute.max_non_edges)
      ->capture_default_str();
  brute_cmd->add_option("--max-total-edges", brute.max_total_edges)
      ->capture_default_str();
  brute_cmd->add_option("--workers", brute_workers)->capture_default_str();
  brute_cmd->add_flag("--no-timing", brute.no_timing, "Omit runtime_ms");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a sweep, emit CSV");
  bench_cmd->add_option("--config", bench.config, "Sweep config file")
      ->required();
  bench_cmd->add_option("-o,--output", bench.output,
                        "CSV file (default stdout)");
  bench_cmd->add_option("--workers", bench.workers)->capture_default_str();
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Omit runtime_ms");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out);
    if (*improve_cmd) return CmdImprove(improve, improve_est, out);
    if (*reach_cmd) return CmdReach(reach, reach_est, out);
    if (*broadcast_cmd) return CmdBroadcast(bq, bq_est, out);
    if (*brute_cmd) return CmdBrute(brute, brute_workers, out);
    if (*bench_cmd) return CmdBench(bench, out);
  } catch (const Error& e) {
    const int code =
        e.kind() == ErrorKind::kInvalidParameter ? kExitUsage : kExitRuntime;
    return ReportError(out, err, ErrorKindName(e.kind()), e.what(), code);
  } catch (const std::exception& e) {
    return ReportError(out, err, "internal", e.what(), kExitRuntime);
  }
  return kExitUsage;
}

}  // namespace bikit::cli
