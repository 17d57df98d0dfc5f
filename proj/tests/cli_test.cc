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
#include <sstream>
#include <string>
#include <vector>

#include "bench.h"
#include "bikit/error.h"
#include "bikit/graph_io.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace bikit::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  json Json() const { return json::parse(out); }
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = Run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/bikit_cli_test_" + name;
}

std::string WriteFile(const std::string& name, const std::string& text) {
  const std::string path = TempPath(name);
  std::ofstream(path) << text;
  return path;
}

std::string PathFile(int n) {
  std::ostringstream text;
  text << n << " 0.5\n";
  for (int i = 0; i + 1 < n; ++i) text << i << " " << i + 1 << "\n";
  return WriteFile("p" + std::to_string(n) + ".txt", text.str());
}

TEST(CliGenTest, PathToStdout) {
  Outcome o = Invoke({"gen", "--family", "path", "--n", "4", "--alpha", "0.5"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream in(o.out);
  InformationGraph g = ReadGraph(in);
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 3);
}

TEST(CliGenTest, WritesFile) {
  const std::string path = TempPath("gen.txt");
  Outcome o = Invoke({"gen", "--family", "subdivided-star", "--leaves", "3",
                      "--len", "4", "--alpha", "0.5", "-o", path});
  ASSERT_EQ(o.code, 0) << o.err;
  InformationGraph g = LoadGraph(path);
  EXPECT_EQ(g.num_vertices(), 13);
  EXPECT_EQ(g.num_edges(), 12);
}

TEST(CliGenTest, SetCoverGadgetFromSpec) {
  const std::string spec = WriteFile(
      "sets.json", R"({"elements": 3, "sets": [[0, 1], [1, 2]], "planted_cover": [0, 1]})");
  Outcome o = Invoke({"gen", "--family", "setcover-gadget", "--spec", spec,
                      "--len", "6", "--alpha", "0.5"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream in(o.out);
  InformationGraph g = ReadGraph(in);
  // Paths: 2 pivot-set, 1 set-set, 4 memberships; 5 internal vertices each.
  EXPECT_EQ(g.num_vertices(), 1 + 2 + 3 + 7 * 5);
  EXPECT_EQ(g.num_edges(), 7 * 6);
  EXPECT_NE(o.out.find("# planted"), std::string::npos);
}

TEST(CliGenTest, UsageErrors) {
  EXPECT_EQ(Invoke({"gen", "--family", "hypercube", "--n", "4"}).code, 2);
  EXPECT_EQ(Invoke({"gen", "--family", "setcover-gadget", "--len", "3"}).code, 2);
  EXPECT_EQ(Invoke({"gen", "--family", "path", "--n", "-3"}).code, 2);
  EXPECT_EQ(Invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(Invoke({}).code, 2);
}

TEST(CliImproveTest, BicriteriaOnPathOfFour) {
  Outcome o = Invoke({"improve", PathFile(4), "--algo", "bicriteria", "--k",
                      "1", "--method", "exact"});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = o.Json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "improve");
  EXPECT_EQ(j["algorithm"], "bicriteria");
  EXPECT_EQ(j["edges_added"], json::parse("[[0,3]]"));
  EXPECT_EQ(j["edges_count"], 1);
  EXPECT_DOUBLE_EQ(j["broadcast_after"].get<double>(), 0.4375);
  EXPECT_DOUBLE_EQ(j["broadcast_before"].get<double>(), 0.125);
  for (const char* key : {"k", "epsilon", "alpha", "half_width", "samples",
                          "seed", "grid_index", "runtime_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(CliImproveTest, OracleAttachesGuarantee) {
  Outcome o = Invoke({"improve", PathFile(3), "--algo", "submod", "--k", "1",
                      "--epsilon", "0.5", "--oracle"});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = o.Json();
  EXPECT_DOUBLE_EQ(j["optimum"].get<double>(), 0.625);
  EXPECT_GE(j["broadcast_after"].get<double>(), j["guarantee_bound"].get<double>());
  Outcome supplied = Invoke({"improve", PathFile(3), "--algo", "witness2",
                             "--beta-star", "0.625"});
  ASSERT_EQ(supplied.code, 0);
  EXPECT_DOUBLE_EQ(supplied.Json()["guarantee_bound"].get<double>(),
                   0.625 * 0.5 / (1.5 * 15));
}

TEST(CliImproveTest, UnknownAlgorithmIsUsageError) {
  EXPECT_EQ(Invoke({"improve", PathFile(4), "--algo", "magic"}).code, 2);
  EXPECT_EQ(Invoke({"improve", PathFile(4), "--algo", "reach"}).code, 2);
  EXPECT_EQ(Invoke({"improve", PathFile(4)}).code, 2);
  EXPECT_EQ(Invoke({"improve", PathFile(4), "--algo", "single", "--k", "0"}).code, 2);
  EXPECT_EQ(Invoke({"improve", PathFile(4), "--algo", "single", "--method",
                    "psychic"}).code, 2);
}

TEST(CliImproveTest, RuntimeErrorsEmitErrorObject) {
  Outcome missing = Invoke({"improve", TempPath("nope.txt"), "--algo", "single"});
  EXPECT_EQ(missing.code, 1);
  json j = missing.Json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["error"]["kind"], "io");
  EXPECT_FALSE(missing.err.empty());

  Outcome limit = Invoke({"improve", PathFile(8), "--algo", "single",
                          "--exact-edge-limit", "3"});
  EXPECT_EQ(limit.code, 1);
  EXPECT_EQ(limit.Json()["error"]["kind"], "limit_exceeded");

  const std::string bad = WriteFile("bad.txt", "4 0.5\n0 1\n2 3\n");
  Outcome disconnected = Invoke({"broadcast", bad});
  EXPECT_EQ(disconnected.code, 1);
  EXPECT_EQ(disconnected.Json()["error"]["kind"], "connectivity");
}

TEST(CliBroadcastTest, PathOfThree) {
  const std::string csv = TempPath("matrix.csv");
  Outcome o = Invoke({"broadcast", PathFile(3), "--method", "exact",
                      "--matrix-csv", csv});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = o.Json();
  EXPECT_DOUBLE_EQ(j["value"].get<double>(), 0.25);
  EXPECT_EQ(j["argmin"], json::parse("[0,2]"));
  std::ifstream in(csv);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "1,0.5,0.25");
}

TEST(CliBroadcastTest, SourceGivesReach) {
  Outcome o = Invoke({"broadcast", PathFile(3), "--source", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = o.Json();
  EXPECT_DOUBLE_EQ(j["reach"]["value"].get<double>(), 0.5);
  EXPECT_EQ(j["reach"]["argmin"], 0);
}

TEST(CliBruteTest, PathOfFour) {
  Outcome o = Invoke({"brute", PathFile(4), "--k", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = o.Json();
  EXPECT_DOUBLE_EQ(j["beta_star"].get<double>(), 0.4375);
  EXPECT_EQ(j["edges"], json::parse("[[0,3]]"));
  Outcome reach = Invoke({"brute", PathFile(4), "--k", "1", "--source", "0"});
  ASSERT_EQ(reach.code, 0);
  EXPECT_DOUBLE_EQ(reach.Json()["upsilon_star"].get<double>(), 0.4375);
  EXPECT_EQ(Invoke({"brute", PathFile(8), "--k", "1", "--max-non-edges", "5"}).code, 1);
}

TEST(CliReachTest, WitnessOnPathOfThree) {
  Outcome o = Invoke({"reach", PathFile(3), "--source", "0", "--algo",
                      "reach-witness", "--k", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = o.Json();
  EXPECT_EQ(j["edges_added"], json::parse("[[0,2]]"));
  EXPECT_DOUBLE_EQ(j["reach_after"].get<double>(), 0.625);
  Outcome via = Invoke({"reach", PathFile(4), "--source", "0", "--algo",
                        "reach-via-broadcast", "--inner", "bicriteria",
                        "--oracle"});
  ASSERT_EQ(via.code, 0) << via.err;
  EXPECT_DOUBLE_EQ(via.Json()["reach_after"].get<double>(), 0.4375);
  EXPECT_EQ(Invoke({"reach", PathFile(3), "--source", "5"}).code, 1);
}

TEST(CliDeterminismTest, SameSeedSameBytesAcrossWorkers) {
  const std::string g = PathFile(7);
  for (const std::string algo : {"bicriteria", "witness2", "submod"}) {
    std::vector<std::string> base{"improve", g, "--algo", algo, "--method",
                                  "mc", "--samples", "3000", "--seed", "11",
                                  "--no-timing"};
    auto one = base, many = base;
    one.insert(one.end(), {"--workers", "1"});
    many.insert(many.end(), {"--workers", "4"});
    Outcome a = Invoke(one), b = Invoke(one), c = Invoke(many);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(a.out.find("runtime_ms"), std::string::npos);
  }
}

TEST(CliDeterminismTest, EnvironmentSeed) {
  const std::string g = PathFile(5);
  std::vector<std::string> args{"broadcast", g, "--method", "mc", "--samples",
                                "500", "--no-timing"};
  ::setenv("BIKIT_SEED", "1234", 1);
  Outcome env = Invoke(args);
  ::unsetenv("BIKIT_SEED");
  auto explicit_args = args;
  explicit_args.insert(explicit_args.end(), {"--seed", "1234"});
  Outcome flag = Invoke(explicit_args);
  ASSERT_EQ(env.code, 0) << env.err;
  EXPECT_EQ(env.out, flag.out);
  EXPECT_EQ(env.Json()["seed"], 1234);
}

TEST(CliBenchTest, SmallSweepMeetsBounds) {
  const std::string config = WriteFile("bench.toml", R"(# tiny
families = ["path", "cycle"]
n = [4, 5]
k = [1]
alpha = [0.5]
algos = ["bicriteria", "single", "witness2", "submod", "reach"]
)");
  const std::string csv = TempPath("bench.csv");
  Outcome o = Invoke({"bench", "--config", config, "-o", csv, "--no-timing"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::ifstream in(csv);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header,
            "family,n,m,alpha,instance,k,algo,edges_count,edge_budget,"
            "value_before,value_after,half_width,optimum,bound,ratio");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const double ratio = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_GE(ratio, 1.0) << line;
  }
  EXPECT_EQ(rows, 2 * 2 * 5);
}

TEST(BenchConfigTest, ParsesValuesAndLists) {
  std::istringstream in(R"(families = ["random"]  # trailing comment
n = 6
alpha = [0.25, 0.75]
oracle = false
method = "mc"
samples = 2000
seed = 99
)");
  BenchConfig c = ParseBenchConfig(in);
  EXPECT_EQ(c.families, (std::vector<std::string>{"random"}));
  EXPECT_EQ(c.n, (std::vector<int>{6}));
  EXPECT_EQ(c.alpha, (std::vector<double>{0.25, 0.75}));
  EXPECT_FALSE(c.oracle);
  EXPECT_EQ(c.samples, 2000);
  EXPECT_EQ(c.seed, 99u);
}

TEST(BenchConfigTest, ErrorsNameTheLine) {
  std::istringstream in("n = [4]\nwidth = 3\n");
  try {
    ParseBenchConfig(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream bad_list("k = [1, 2\n");
  EXPECT_THROW(ParseBenchConfig(bad_list), Error);
  std::istringstream bad_bool("oracle = maybe\n");
  EXPECT_THROW(ParseBenchConfig(bad_bool), Error);
}

}  // namespace
}  // namespace bikit::cli
