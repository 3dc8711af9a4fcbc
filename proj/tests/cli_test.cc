// Copyright 2026 The unambig Authors
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


#include "commands.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "unambig/surfaces.h"

namespace unambig::cli {
namespace {

using nlohmann::json;

struct Proc {
  int code = -1;
  std::string out;
};

Proc run_tool(const std::string& args) {
  const std::string cmd = std::string(UNAMBIG_TOOL_PATH) + " " + args + " 2>/dev/null";
  Proc p;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), n);
  const int status = pclose(f);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

TEST(Solve, B4AtHalfOverlap) {
  const CommandResult r = cmd_solve({"b4", 2, 0.5, std::nullopt});
  ASSERT_EQ(r.exit_code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["lambda"][0].get<double>(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(j["lambda"][1].get<double>(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(j["p_analytic"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(j["p_numeric"].get<double>(), 0.5, 1e-12);
  EXPECT_TRUE(j["inputs"]["eta1"].is_null());
}

TEST(Solve, A1FirstBranchAndFieldOrder) {
  const CommandResult r = cmd_solve({"a1", 2, std::nullopt, 0.1});
  ASSERT_EQ(r.exit_code, kOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["lambda"], json::array({0.0, 1.0}));
  EXPECT_EQ(j["branch"], "eta1<=1/5");
  const std::vector<std::string> keys = {"case",   "dim",        "inputs",    "lambda",
                                         "branch", "p_analytic", "p_numeric", "min_eig"};
  std::size_t pos = 0;
  for (const auto& k : keys) {
    const std::size_t at = r.out.find("\"" + k + "\"", pos);
    ASSERT_NE(at, std::string::npos) << k;
    pos = at;
  }
}

TEST(Solve, ForbiddenInputNamesParameter) {
  const CommandResult r = cmd_solve({"a1", 2, 0.3, std::nullopt});
  EXPECT_EQ(r.exit_code, kUsage);
  EXPECT_NE(r.err.find("beta"), std::string::npos);
  EXPECT_EQ(cmd_solve({"a3", 2, 0.3, std::nullopt}).exit_code, kUsage);
  EXPECT_EQ(cmd_solve({"z9", 2, 0.3, std::nullopt}).exit_code, kUsage);
  EXPECT_EQ(cmd_solve({"b4", 4, 0.3, std::nullopt}).exit_code, kUsage);
}

TEST(Sweep, P2OptFullGrid) {
  SweepArgs a;
  a.surface = "P2_opt";
  a.grid = 0.01;
  const CommandResult r = cmd_sweep(a);
  ASSERT_EQ(r.exit_code, kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "beta,eta1,value");
  const SurfaceInfo& s = find_surface("P2_opt");
  int rows = 0;
  while (std::getline(in, line)) {
    double b, e, v;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf", &b, &e, &v), 3);
    EXPECT_NEAR(surface_value(s, b, e), v, 1e-12);
    if (line.rfind("0.5,0.5,", 0) == 0) EXPECT_EQ(v, 0.5);
    ++rows;
  }
  EXPECT_EQ(rows, 101 * 101);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Sweep, DifferenceSurfaceColumnsRoundTrip) {
  SweepArgs a;
  a.surface = "P1p_to_2";
  a.grid = 0.05;
  const CommandResult r = cmd_sweep(a);
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "beta,eta1,value,value_minuend,value_subtrahend");
  const SurfaceInfo& s = find_surface("P1p_to_2");
  while (std::getline(in, line)) {
    double b, e, v, m, t;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &b, &e, &v, &m, &t), 5);
    EXPECT_NEAR(surface_value(s, b, e), v, 1e-12);
    EXPECT_GE(v, -1e-9);
  }
}

TEST(Sweep, NegativeDifferenceCellFlagged) {
  SweepArgs a;
  a.surface = "P1_weta_to_eta";
  a.grid = 0.1;
  const CommandResult r = cmd_sweep(a);
  EXPECT_EQ(r.exit_code, kCheckFailed);
  EXPECT_NE(r.err.find("negative at beta="), std::string::npos);
  EXPECT_FALSE(r.out.empty());
}

TEST(Sweep, UsageErrors) {
  SweepArgs a;
  a.surface = "nope";
  EXPECT_EQ(cmd_sweep(a).exit_code, kUsage);
  a.surface = "P2_opt";
  a.grid = 0.7;
  EXPECT_EQ(cmd_sweep(a).exit_code, kUsage);
  a.grid = 0.1;
  a.format = "xml";
  EXPECT_EQ(cmd_sweep(a).exit_code, kUsage);
}

TEST(Sweep, JsonAndFileOutput) {
  SweepArgs a;
  a.surface = "P0_weta";
  a.grid = 0.25;
  a.format = "json";
  const json j = json::parse(cmd_sweep(a).out);
  EXPECT_EQ(j["rows"].size(), 25u);
  a.format = "csv";
  a.out = ::testing::TempDir() + "/sweep.csv";
  ASSERT_EQ(cmd_sweep(a).exit_code, kOk);
  std::ifstream f(a.out, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  a.out.clear();
  EXPECT_EQ(ss.str(), cmd_sweep(a).out);
}

TEST(Simulate, A4OrthogonalAlwaysSucceeds) {
  const CommandResult r = cmd_simulate({"a4", 2, 0.0, 0.5, 1000, 1});
  ASSERT_EQ(r.exit_code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["estimated_success"].get<double>(), 1.0);
  EXPECT_EQ(j["counts"]["n_error"].get<int>(), 0);
}

TEST(Simulate, QutritB2WithinFourSigma) {
  const CommandResult r = cmd_simulate({"b2", 3, 0.4, 0.3, 1000000, 1});
  ASSERT_EQ(r.exit_code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LE(std::abs(j["z_score"].get<double>()), 4.0);
  EXPECT_EQ(j["counts"]["n_error"].get<int>(), 0);
}

TEST(Simulate, SameSeedByteIdentical) {
  const SimulateArgs a{"b3", 2, 0.8, 0.4, 200000, 42};
  EXPECT_EQ(cmd_simulate(a).out, cmd_simulate(a).out);
  SimulateArgs b = a;
  b.seed = 43;
  EXPECT_NE(cmd_simulate(a).out, cmd_simulate(b).out);
  EXPECT_EQ(cmd_simulate({"b3", 2, 0.8, 0.4, 0, 42}).exit_code, kUsage);
}

TEST(Verify, PerturbedTableExitsOne) {
  VerifyArgs a;
  a.case_name = "b4";
  a.grid = 0.1;
  EXPECT_EQ(cmd_verify(a).exit_code, kOk);
  a.perturb_lambda = true;
  const CommandResult r = cmd_verify(a);
  EXPECT_EQ(r.exit_code, kCheckFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Verify, B1QubitDeviationSmall) {
  VerifyArgs a;
  a.case_name = "b1";
  a.format = "json";
  const CommandResult r = cmd_verify(a);
  ASSERT_EQ(r.exit_code, kOk) << r.out;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_LE(j[0]["max_deviation"].get<double>(), 2e-3);
  const double b = j[0]["worst"]["beta"].get<double>();
  EXPECT_NEAR(j[0]["worst"]["p_closed"].get<double>(), (1 - b * b) / 3, 1e-15);
}

TEST(Binary, ExitCodes) {
  Proc p = run_tool("solve --case b4 --dim 2 --beta 0.5");
  EXPECT_EQ(p.code, 0);
  EXPECT_NEAR(json::parse(p.out)["p_analytic"].get<double>(), 0.5, 1e-15);
  EXPECT_EQ(run_tool("solve --case a1 --beta 0.3").code, 2);
  EXPECT_EQ(run_tool("solve --case a1 --eta1 0.3 --bogus").code, 2);
  EXPECT_EQ(run_tool("").code, 2);
  EXPECT_EQ(run_tool("sweep --surface P1_weta_to_eta --grid 0.1").code, 1);
  EXPECT_EQ(run_tool("verify --case b4 --grid 0.1 --perturb-lambda").code, 1);
}

TEST(Binary, SimulateDeterministic) {
  const std::string args = "simulate --case a2 --beta 0.3 --eta1 0.6 --shots 100000 --seed 9";
  const Proc a = run_tool(args), b = run_tool(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, cmd_simulate({"a2", 2, 0.3, 0.6, 100000, 9}).out);
}

}  // namespace
}  // namespace unambig::cli
