// Copyright 2026 The graphmin Authors
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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "graphmin/csv.hpp"

namespace graphmin::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("graphmin_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, EncodeExamples) {
  Result r = cli({"encode", "--input", file("a.graph", "3 1\n2 1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3 1 0\n0.000000\n");
  r = cli({"encode", "--input", file("b.graph", "3 2\n2 1\n3 2\n")});
  EXPECT_EQ(r.out, "3 2 2\n0.477121\n");
  r = cli({"encode", "--input", file("c.graph", "6 0\n")});
  EXPECT_EQ(r.out, "6 0 0\n0.000000\n");
}

TEST_F(CliTest, EncodeParseErrorNamesLine) {
  const Result r = cli({"encode", "--input", file("bad.graph", "3 2\n2 1\n2 2\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingFileFails) {
  const Result r = cli({"encode", "--input", (dir_ / "nope.graph").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, DecodeExamples) {
  EXPECT_EQ(cli({"decode", "--n", "3", "--m", "2", "--g", "2"}).out, "3 2\n2 1\n3 2\n");
  EXPECT_EQ(cli({"decode", "--n", "5", "--m", "0", "--g", "0"}).out, "5 0\n");
  const Result r = cli({"decode", "--n", "3", "--m", "2", "--g", "99"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(cli({"decode", "--n", "3", "--m", "2", "--g", "1e2"}).code, 2);
}

TEST_F(CliTest, EncodeDecodeRoundTripIsByteExact) {
  const std::string text = "8 6\n2 1\n4 2\n5 3\n7 1\n8 5\n8 7\n";
  const Result enc = cli({"encode", "--input", file("g.graph", text)});
  std::istringstream fields(enc.out);
  std::string n, m, g;
  fields >> n >> m >> g;
  EXPECT_EQ(cli({"decode", "--n", n, "--m", m, "--g", g}).out, text);
}

TEST_F(CliTest, LandscapeWritesEveryRelabeling) {
  const std::string csv = (dir_ / "land.csv").string();
  const Result r = cli({"landscape", "--input", file("g.graph", "5 5\n2 1\n3 2\n4 3\n4 1\n3 1\n"), "--output", csv});
  EXPECT_EQ(r.code, 0);
  const std::string text = read_file(csv);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 121);
  EXPECT_NE(r.out.find("min_x_index 6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("min_L 0.000000\n"), std::string::npos);
  EXPECT_NE(text.find("\n6,0\n"), std::string::npos);
}

TEST_F(CliTest, LandscapeOfEdgelessGraphIsZero) {
  const std::string csv = (dir_ / "land.csv").string();
  ASSERT_EQ(cli({"landscape", "--input", file("e.graph", "4 0\n"), "--output", csv}).code, 0);
  std::istringstream in(read_file(csv));
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.find(',') + 1), "0");
  }
  EXPECT_EQ(rows, 24);
}

TEST_F(CliTest, LandscapeRejectsLargeGraphs) {
  const Result r = cli({"landscape", "--input", file("big.graph", "10 0\n"), "--output", (dir_ / "x.csv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n <= 9"), std::string::npos) << r.err;
}

TEST_F(CliTest, OptimizeIsDeterministicAndTraces) {
  const std::string g = file("g.graph", "6 7\n2 1\n3 1\n4 2\n5 3\n6 4\n6 5\n5 2\n");
  const std::string trace = (dir_ / "trace.csv").string();
  const std::vector<std::string> args = {"optimize", "--input", g, "--algo", "JADE", "--seed", "42",
                                         "--runs", "2", "--evals", "10", "--pop", "10", "--trace", trace};
  const Result a = cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, cli(args).out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 2);
  EXPECT_EQ(a.out.rfind("run 1 L ", 0), 0u);
  const std::string text = read_file(trace);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 2 * 10);
}

TEST_F(CliTest, OptimizeUnknownAlgorithmListsNames) {
  const Result r = cli({"optimize", "--input", file("g.graph", "3 1\n2 1\n"), "--algo", "pso"});
  EXPECT_EQ(r.code, 2);
  for (const char* name : {"desps", "obde", "jade", "dcmaea", "derand", "debest", "rbde", "desim"}) {
    EXPECT_NE(r.err.find(name), std::string::npos) << name;
  }
}

TEST_F(CliTest, OptimizeRejectsBadParameters) {
  const std::string g = file("g.graph", "4 1\n2 1\n");
  EXPECT_EQ(cli({"optimize", "--input", g, "--pop", "3"}).code, 2);
  EXPECT_EQ(cli({"optimize", "--input", g, "--cr", "1.5"}).code, 2);
  EXPECT_EQ(cli({"optimize", "--input", g, "--f", "0"}).code, 2);
  EXPECT_EQ(cli({"optimize", "--input", g, "--evals", "5"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"encode"}).code, 2);
  const Result help = cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("optimize"), std::string::npos);
}

TEST_F(CliTest, BenchAndStatsSmallRun) {
  const std::string out = (dir_ / "bench").string();
  const std::vector<std::string> args = {"bench", "--suite-seed", "3", "--outdir", out, "--runs", "2",
                                         "--evals", "20", "--jobs", "2"};
  const Result r = cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cells 320\n"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(fs::path(out) / "suite" / "instance_20.graph"));
  const std::string traces = read_file(fs::path(out) / "traces.csv");
  const std::string means = read_file(fs::path(out) / "mean_traces.csv");
  EXPECT_EQ(std::count(traces.begin(), traces.end(), '\n'), 1 + 320 * 20);
  EXPECT_EQ(std::count(means.begin(), means.end(), '\n'), 1 + 160 * 20);

  ASSERT_EQ(cli(args).code, 0);
  EXPECT_EQ(read_file(fs::path(out) / "traces.csv"), traces);

  const Result s = cli({"stats", "--outdir", out});
  ASSERT_EQ(s.code, 0) << s.err;
  const std::string stats = read_file(fs::path(out) / "stats.csv");
  EXPECT_EQ(stats, s.out);
  std::istringstream in(stats);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "algorithm,outperform,equal,underperform");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto f = split_csv(line);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(std::stoi(std::string(f[1])) + std::stoi(std::string(f[2])) + std::stoi(std::string(f[3])), 7 * 20);
  }
  EXPECT_EQ(rows, 8);
}

TEST_F(CliTest, StatsWithoutTracesFails) {
  const Result r = cli({"stats", "--outdir", dir_.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("traces.csv"), std::string::npos);
}

}  // namespace
}  // namespace graphmin::cli
