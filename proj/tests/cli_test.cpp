// Copyright 2026 The payplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "payplay/cli.hpp"

namespace payplay {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "payplay");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("payplay_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("PAYPLAY_MAX_N");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, GadgetThenAnalyzeMatchesInMemory) {
  for (const std::string& name : gadget_names()) {
    const CliRun g = run({"gadget", name});
    ASSERT_EQ(g.code, 0) << name << g.err;
    const std::string path = write(name + ".json", g.out);
    const CliRun a = run({"analyze", path});
    ASSERT_EQ(a.code, 0) << name << a.err;
    const AnalysisReport direct = analyze_game(make_gadget(name, {}));
    EXPECT_EQ(a.out, dump_json(report_to_json(direct))) << name;
  }
}

TEST_F(CliTest, AnalyzeTriangle) {
  const std::string path = write("t.json", run({"gadget", "triangle"}).out);
  const CliRun a = run({"analyze", path});
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["equilibria"]["pure"].empty());
  EXPECT_TRUE(j["efficiency"]["poa"].is_null());
  EXPECT_TRUE(j["efficiency"]["pos"].is_null());
}

TEST_F(CliTest, AnalyzePlayerSpecificFamily) {
  const std::string path = write("p.json", run({"gadget", "pos-player-specific", "--n", "4",
                                                "--epsilon", "0.01"}).out);
  const Json j = Json::parse(run({"analyze", path}).out);
  EXPECT_NEAR(j["efficiency"]["pos"].get<double>(), 3.8019, 1e-4);
}

TEST_F(CliTest, PrettyAndOut) {
  const std::string path = write("t.json", run({"gadget", "triangle"}).out);
  const std::string out_path = (dir_ / "report.json").string();
  const CliRun a = run({"analyze", path, "--pretty", "--out", out_path});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("pure NE     0"), std::string::npos);
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run({"analyze", path}).out);
}

TEST_F(CliTest, LoadErrorsExitTwo) {
  const CliRun bad = run({"analyze", write("bad.json", "{\"n\": 2,\n  \"players\": [1,}")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"analyze", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, CapExceededExitsThree) {
  const std::string path = write("p.json", run({"gadget", "pricing", "--n", "10"}).out);
  EXPECT_EQ(run({"analyze", path, "--max-n", "8"}).code, 3);
  setenv("PAYPLAY_MAX_N", "8", 1);
  EXPECT_EQ(run({"analyze", path}).code, 3);
  EXPECT_EQ(run({"analyze", path, "--max-n", "10"}).code, 0);
  unsetenv("PAYPLAY_MAX_N");
  EXPECT_EQ(run({"analyze", path}).code, 0);
}

TEST_F(CliTest, GadgetErrors) {
  const CliRun unknown = run({"gadget", "hexagon"});
  EXPECT_EQ(unknown.code, 2);
  for (const std::string& name : gadget_names()) {
    EXPECT_NE(unknown.err.find(name), std::string::npos);
  }
  EXPECT_EQ(run({"gadget", "pricing", "--q", "12", "--p", "10"}).code, 2);
  EXPECT_EQ(run({"gadget", "pos-player-specific", "--epsilon", "0.5"}).code, 2);
  const Json j = Json::parse(run({"gadget", "pricing", "--n", "4", "--k", "2", "--p", "10",
                                  "--q", "4"}).out);
  EXPECT_EQ(j["label"], "pricing(n=4,k=2,p=10,q=4,loss=10)");
  const Json d = Json::parse(run({"gadget", "disjointness", "--a1", "1,2", "--a2", "2"}).out);
  EXPECT_EQ(d["n"], 10);
}

TEST_F(CliTest, FromCnfCheck) {
  const std::string path = write("f.cnf", "p cnf 3 1\n1 -2 3 0\n");
  const CliRun r = run({"from-cnf", path, "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["n"], 9);
  const Json check = Json::parse(r.err);
  EXPECT_TRUE(check["agree"].get<bool>());
  EXPECT_TRUE(check["satisfiable"].get<bool>());

  const std::string contra = write("c.cnf", "p cnf 1 2\n1 0\n-1 0\n");
  const Json c = Json::parse(run({"from-cnf", contra, "--check"}).err);
  EXPECT_TRUE(c["agree"].get<bool>());
  EXPECT_FALSE(c["satisfiable"].get<bool>());
  EXPECT_FALSE(c["pne_exists"].get<bool>());

  EXPECT_EQ(run({"from-cnf", write("l.cnf", "p cnf 4 1\n1 2 3 4 0\n")}).code, 2);
}

TEST_F(CliTest, Vaccinate) {
  const std::string p4 = write("p4.json", R"({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})");
  const CliRun r = run({"vaccinate", p4, "--c", "0.5", "--l", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["alpha"], 2.0);
  for (const Json& s : j["repaired"]["component_sizes"]) EXPECT_EQ(s, 1);
  EXPECT_TRUE(j["repaired"]["pareto_efficient"].get<bool>());

  const std::string one = write("one.json", R"({"n": 1, "edges": []})");
  const Json single = Json::parse(run({"vaccinate", one, "--c", "2", "--l", "1"}).out);
  EXPECT_EQ(single["equilibrium"]["profile"], "-");

  EXPECT_EQ(run({"vaccinate", p4, "--c", "0", "--l", "1"}).code, 2);
  const std::string loop = write("loop.json", R"({"n": 2, "edges": [[1, 1]]})");
  EXPECT_EQ(run({"vaccinate", loop, "--c", "1", "--l", "1"}).code, 2);
}

TEST_F(CliTest, VerifyMixed) {
  const std::string path = write("t.json", run({"gadget", "triangle"}).out);
  const Json yes = Json::parse(run({"verify-mixed", path, "--probs", "0.5,0.5,0.5"}).out);
  EXPECT_TRUE(yes["mixed_nash"].get<bool>());
  for (const Json& p : yes["players"]) EXPECT_EQ(p["residual"], 0.0);
  const Json no = Json::parse(run({"verify-mixed", path, "--probs", "1,0,0"}).out);
  EXPECT_FALSE(no["mixed_nash"].get<bool>());
  EXPECT_EQ(run({"verify-mixed", path, "--probs", "0.5,0.5"}).code, 2);
  EXPECT_EQ(run({"verify-mixed", path, "--probs", "0.5,0.5,2"}).code, 2);
}

TEST_F(CliTest, BinaryMatchesInProcess) {
  const std::string cmd = std::string(PAYPLAY_CLI_PATH) + " gadget two-player --epsilon 0.1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof(buf), pipe)) text.append(buf, k);
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(text, run({"gadget", "two-player", "--epsilon", "0.1"}).out);
}

}  // namespace
}  // namespace payplay
