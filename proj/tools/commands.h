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


#ifndef UNAMBIG_TOOLS_COMMANDS_H_
#define UNAMBIG_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>

namespace unambig::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;  // stdout payload
  std::string err;  // diagnostics
};

struct SolveArgs {
  std::string case_name;
  int dim = 2;
  std::optional<double> beta;
  std::optional<double> eta1;
};

struct VerifyArgs {
  std::string case_name = "all";
  int dim = 2;
  double grid = 0.05;
  double resolution = 1e-3;
  std::string format = "text";  // text | json
  bool free_lambda3 = false;
  bool published = false;
  bool perturb_lambda = false;  // negative control
};

struct SweepArgs {
  std::string surface;
  double grid = 0.05;
  std::string format = "csv";  // csv | json
  std::string out;             // empty: stdout
};

struct SimulateArgs {
  std::string case_name;
  int dim = 2;
  std::optional<double> beta;
  std::optional<double> eta1;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
};

CommandResult cmd_solve(const SolveArgs& a);
CommandResult cmd_verify(const VerifyArgs& a);
CommandResult cmd_sweep(const SweepArgs& a);
CommandResult cmd_simulate(const SimulateArgs& a);

/// %.12g
std::string format12(double v);

}  // namespace unambig::cli

#endif  // UNAMBIG_TOOLS_COMMANDS_H_
