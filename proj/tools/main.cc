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


#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace {

int emit(const unambig::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unambiguous discrimination of two qubit or qutrit states"};
  app.require_subcommand(1);

  unambig::cli::SolveArgs solve;
  double solve_beta = 0.0, solve_eta = 0.0;
  auto* s = app.add_subcommand("solve", "Closed-form strategy for one instance");
  s->add_option("--case", solve.case_name, "a1..a4, b1..b4")->required();
  s->add_option("--dim", solve.dim, "2 (qubit) or 3 (qutrit)");
  auto* s_beta = s->add_option("--beta", solve_beta, "overlap |<psi1|psi2>|");
  auto* s_eta = s->add_option("--eta1", solve_eta, "prior of psi1");

  unambig::cli::VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check closed forms against the numerical oracle");
  v->add_option("--case", verify.case_name, "a1..a4, b1..b4 or all");
  v->add_option("--dim", verify.dim, "2 or 3");
  v->add_option("--grid", verify.grid, "grid step for beta and eta1");
  v->add_option("--resolution", verify.resolution, "oracle resolution");
  v->add_option("--format", verify.format, "text or json");
  v->add_flag("--free-lambda3", verify.free_lambda3, "search l3 instead of fixing it to 1");
  v->add_flag("--published", verify.published, "compare the published coefficient table");
  v->add_flag("--perturb-lambda", verify.perturb_lambda, "scale the table by 0.9 (negative control)")
      ->group("");

  unambig::cli::SweepArgs sweep;
  auto* w = app.add_subcommand("sweep", "Tabulate a success-probability surface");
  w->add_option("--surface", sweep.surface, "surface name")->required();
  w->add_option("--grid", sweep.grid, "grid step for beta and eta1");
  w->add_option("--format", sweep.format, "csv or json");
  w->add_option("--out", sweep.out, "output file (default stdout)");

  unambig::cli::SimulateArgs sim;
  double sim_beta = 0.0, sim_eta = 0.0;
  auto* m = app.add_subcommand("simulate", "Monte Carlo run of the optimal measurement");
  m->add_option("--case", sim.case_name, "a1..a4, b1..b4")->required();
  m->add_option("--dim", sim.dim, "2 or 3");
  auto* m_beta = m->add_option("--beta", sim_beta, "overlap of the prepared pair")->required();
  auto* m_eta = m->add_option("--eta1", sim_eta, "preparation prior of psi1")->required();
  m->add_option("--shots", sim.shots, "number of shots");
  m->add_option("--seed", sim.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return unambig::cli::kUsage;
  }

  if (*s) {
    if (s_beta->count()) solve.beta = solve_beta;
    if (s_eta->count()) solve.eta1 = solve_eta;
    return emit(unambig::cli::cmd_solve(solve));
  }
  if (*v) return emit(unambig::cli::cmd_verify(verify));
  if (*w) return emit(unambig::cli::cmd_sweep(sweep));
  if (m_beta->count()) sim.beta = sim_beta;
  if (m_eta->count()) sim.eta1 = sim_eta;
  return emit(unambig::cli::cmd_simulate(sim));
}
