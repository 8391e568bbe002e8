// Copyright 2026 The DataGraph Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "datagraph/cli.hpp"
#include "datagraph/io.hpp"
#include "test_support.hpp"

namespace datagraph {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::temp_dir("cli");
    testing::Rng rng(17);
    std::ofstream m(path("m.csv"));
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) m << (j ? "," : "") << rng.uniform();
      m << "\n";
    }
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string convert_mesh() {
    const auto r = run({"convert", "matrix", "--in", path("m.csv"), "--out", path("g.json"),
                        "--diagonal"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return path("g.json");
  }

  std::filesystem::path dir_;
};

TEST(ThresholdGrid, Endpoints) {
  const auto g = threshold_grid(0.0, 1.0, 201);
  ASSERT_EQ(g.size(), 201u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_DOUBLE_EQ(g[1], 0.005);
  EXPECT_EQ(threshold_grid(0.3, 0.9, 1), (std::vector<double>{0.3}));
}

TEST_F(CliTest, ConvertReportsSummary) {
  const auto r = run({"convert", "matrix", "--in", path("m.csv"), "--out", path("g.json"),
                      "--diagonal"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("nodes=144 edges=506"), std::string::npos) << r.err;
  const auto g = read_graph_archive(path("g.json"));
  EXPECT_EQ(g.num_edges(), 506u);
  const auto plain = run({"convert", "matrix", "--in", path("m.csv"), "--out", path("p.json")});
  EXPECT_NE(plain.err.find("nodes=144 edges=264"), std::string::npos) << plain.err;
}

TEST_F(CliTest, EcCurveRows) {
  const auto g = convert_mesh();
  const auto r = run({"ec-curve", "--in", g, "--attr", "weight", "--scale"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count_lines(r.out), 202u);
  EXPECT_EQ(r.out.rfind("threshold,weight\n", 0), 0u);
  EXPECT_NE(r.out.find("\n1,"), std::string::npos);  // last threshold row

  const auto bad = run({"ec-curve", "--in", g, "--attr", "nope"});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_NE(bad.err.find("nope"), std::string::npos) << bad.err;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"convert", "matrix", "--in", path("m.csv")}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"convert", "matrix", "--in", path("absent.csv"), "--out", path("x.json")}).code,
            kExitData);
  write("ragged.csv", "1,2\n3\n");
  EXPECT_EQ(run({"convert", "matrix", "--in", path("ragged.csv"), "--out", path("x.json")}).code,
            kExitData);
  EXPECT_EQ(run({"--delimiter", ";;", "convert", "matrix", "--in", path("m.csv"), "--out",
                 path("x.json")})
                .code,
            kExitUsage);
}

TEST_F(CliTest, FilterAggregateDotAndEdgeOrder) {
  const auto g = convert_mesh();
  auto f = run({"filter", "nodes", "--in", g, "--out", path("f.json"), "--op", "le",
                "--threshold", "0.5"});
  ASSERT_EQ(f.code, kExitOk) << f.err;
  const auto filtered = read_graph_archive(path("f.json"));
  for (double v : filtered.get_node_data("weight")) EXPECT_LE(v, 0.5);

  auto a = run({"aggregate", "--in", g, "--out", path("a.json"), "--nodes",
                "(3,7);(3,8);(3,9);(4,7);(4,8)", "--new-key", "agg_node"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_NE(a.err.find("nodes=140"), std::string::npos) << a.err;

  auto d = run({"export-dot", "--in", g, "--color-attr", "weight"});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  EXPECT_EQ(d.out.rfind("graph G {", 0), 0u);
  EXPECT_EQ(d.out, run({"export-dot", "--in", g, "--color-attr", "weight"}).out);

  auto o = run({"edge-order", "--in", g, "--archive-out", path("o.json")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out.rfind("source,target\n", 0), 0u);
  EXPECT_EQ(count_lines(o.out), 507u);
  EXPECT_EQ(read_graph_archive(path("o.json")).num_edges(), 506u);
}

TEST_F(CliTest, ReportWithRemoval) {
  write("nodes.csv", "name,raw,product\nA,1,0\nB,0,0\nC,0,1\nD,1,0\n");
  write("edges.csv", "source,target\nA,B\nB,C\nD,C\n");
  const auto r = run({"report", "--nodes", path("nodes.csv"), "--edges", path("edges.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "role,key,connected,reachable\nsource,A,1,2\nsource,D,1,1\nsink,C,2,3\n");
  const auto cut = run({"report", "--nodes", path("nodes.csv"), "--edges", path("edges.csv"),
                        "--remove", "B", "--archive-out", path("r.json")});
  ASSERT_EQ(cut.code, kExitOk) << cut.err;
  EXPECT_EQ(cut.out,
            "role,key,connected,reachable\nsource,A,0,0\nsource,D,1,1\nsink,C,1,1\n");
  const auto g = read_graph_archive(path("r.json"));
  EXPECT_EQ(g.get_node_data("Number Upstream"), (std::vector<double>{0, 1, 0}));
  EXPECT_EQ(run({"report"}).code, kExitUsage);
  EXPECT_EQ(run({"report", "--edges", path("edges.csv"), "--remove", "Z"}).code, kExitData);
}

TEST_F(CliTest, Bench) {
  const auto r = run({"bench", "--rows", "10", "--cols", "10", "--weights", "3", "--csv",
                      path("b.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("node_data"), std::string::npos);
  EXPECT_NE(r.err.find("nodes=100 edges=342"), std::string::npos) << r.err;
  EXPECT_TRUE(std::filesystem::exists(path("b.csv")));
  EXPECT_EQ(run({"bench", "--rows", "0"}).code, kExitUsage);
}

TEST_F(CliTest, PercolateAndThreadFallback) {
  testing::Rng rng(4);
  std::ostringstream series;
  series << "a,b,c,d,e\n";
  for (int t = 0; t < 30; ++t) {
    for (int s = 0; s < 5; ++s) series << (s ? "," : "") << std::floor(rng.uniform(0, 30));
    series << "\n";
  }
  write("s.csv", series.str());
  const std::vector<std::string> args{"percolate", "--in", path("s.csv"), "--header",
                                      "--window", "7", "--k", "3"};
  const auto r = run(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("window_index,valid,threshold,ec,n_maximal_cliques,n_communities,"
                        "n_series,mean_cases\n",
                        0),
            0u);
  EXPECT_EQ(count_lines(r.out), 25u);
  EXPECT_NE(r.err.find("nodes=5 edges=10 windows=24"), std::string::npos) << r.err;

  ::setenv("DATAGRAPH_THREADS", "3", 1);
  const auto threaded = run(args);
  ::setenv("DATAGRAPH_THREADS", "garbage", 1);
  const auto fallback = run(args);
  ::unsetenv("DATAGRAPH_THREADS");
  EXPECT_EQ(threaded.code, kExitOk);
  EXPECT_EQ(threaded.out, r.out);
  EXPECT_EQ(fallback.out, r.out);
  auto explicit_threads = args;
  explicit_threads.insert(explicit_threads.begin(), {"--threads", "2"});
  EXPECT_EQ(run(explicit_threads).out, r.out);
  EXPECT_EQ(run({"percolate", "--in", path("s.csv"), "--window", "99"}).code, kExitData);
}

}  // namespace
}  // namespace datagraph
