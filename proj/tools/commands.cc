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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "unambig/cases.h"
#include "unambig/optimizer.h"
#include "unambig/povm.h"
#include "unambig/simulate.h"
#include "unambig/states.h"
#include "unambig/strategies.h"
#include "unambig/surfaces.h"

namespace unambig::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kNegativeCell = -1e-9;

json opt_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

CommandResult usage_error(const std::exception& e) {
  return {kUsage, "", std::string("error: ") + e.what() + "\n"};
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw std::invalid_argument("unknown format '" + f + "'");
}

}  // namespace

std::string format12(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CommandResult cmd_solve(const SolveArgs& a) {
  try {
    const KnowledgeCase kc = make_case(parse_regime(a.case_name), a.dim);
    const CaseInputs in{a.beta, a.eta1};
    const LambdaChoice choice = optimal_lambda(kc, in);
    const Regime r = kc.regime;
    const Construction c = construction_of(r);

    std::optional<double> p_analytic, p_numeric;
    std::vector<std::optional<double>> min_eig(3);
    const double build_beta = a.beta.value_or(0.5);
    const bool degenerate = c == Construction::kKnownKnown && build_beta >= 1.0 - 1e-12;
    if (a.beta && a.eta1) {
      p_analytic = closed_form_probability(kc, *a.beta, *a.eta1);
      if (!degenerate) p_numeric = evaluate_surface(kc, choice.lam, *a.beta, *a.eta1);
    } else if (a.beta && (r == Regime::kB3 || r == Regime::kB4)) {
      // eta1 unknown: report the guaranteed value
      p_analytic = worst_case_closed_form(kc, *a.beta);
      if (!degenerate)
        p_numeric = std::min(evaluate_surface(kc, choice.lam, *a.beta, 0.0),
                             evaluate_surface(kc, choice.lam, *a.beta, 1.0));
    }
    if (degenerate && p_analytic) p_numeric = 0.0;
    if (!degenerate) {
      const StatePair pair =
          canonical_pair(static_cast<std::size_t>(kc.dim), build_beta, 0.5);
      const ValidationReport v = validate(build_povm(kc, pair, choice.lam));
      for (int j = 0; j < 3; ++j) min_eig[j] = v.min_eigenvalues[j];
    }

    json j;
    j["case"] = to_string(r);
    j["dim"] = kc.dim;
    j["inputs"] = {{"beta", opt_number(a.beta)}, {"eta1", opt_number(a.eta1)}};
    j["lambda"] = choice.lam.values;
    j["branch"] = choice.branch;
    j["p_analytic"] = opt_number(p_analytic);
    j["p_numeric"] = opt_number(p_numeric);
    json eig = json::array();
    for (const auto& m : min_eig) eig.push_back(opt_number(m));
    j["min_eig"] = eig;
    return {kOk, j.dump(2) + "\n", ""};
  } catch (const std::invalid_argument& e) {
    return usage_error(e);
  }
}

CommandResult cmd_verify(const VerifyArgs& a) {
  std::vector<KnowledgeCase> cases;
  VerifyOptions opt;
  try {
    check_format(a.format, {"text", "json"});
    if (a.case_name == "all") {
      for (Regime r : kAllRegimes) cases.push_back(make_case(r, a.dim));
    } else {
      cases.push_back(make_case(parse_regime(a.case_name), a.dim));
    }
    opt.grid_step = a.grid;
    opt.resolution = a.resolution;
    opt.oracle.free_lambda3 = a.free_lambda3;
    opt.published_table = a.published;
    if (a.perturb_lambda) opt.lambda_scale = 0.9;
    unit_grid(a.grid);
    if (!(a.resolution > 0.0 && a.resolution <= 1e-2))
      throw std::invalid_argument("resolution must lie in (0, 1e-2]");
  } catch (const std::invalid_argument& e) {
    return usage_error(e);
  }

  CommandResult res;
  json reports = json::array();
  std::string text;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-3s %7s %10s %6s %6s %10s %10s %10s %-5s %s\n",
                "case", "dim", "points", "max_dev", "beta", "eta1", "p_closed",
                "p_table", "p_oracle", "povm", "status");
  text += line;
  bool all_ok = true;
  for (const KnowledgeCase& kc : cases) {
    const VerifyReport rep = verify_case(kc, opt);
    all_ok = all_ok && rep.passed;
    const VerifyPoint& w = rep.worst;
    const std::string eta = std::isnan(w.eta1) ? "worst" : format12(w.eta1);
    std::snprintf(line, sizeof line,
                  "%-4s %-3d %7zu %10.3g %6s %6s %10.6f %10.6f %10.6f %-5s %s\n",
                  to_string(kc.regime).c_str(), kc.dim, rep.points.size(),
                  rep.max_deviation, format12(w.beta).c_str(), eta.c_str(),
                  w.p_closed, w.p_table, w.p_oracle, rep.povm_ok ? "ok" : "BAD",
                  rep.passed ? "PASS" : "FAIL");
    text += line;
    for (const std::string& n : rep.notes) text += "# " + to_string(kc.regime) + ": " + n + "\n";

    json j;
    j["case"] = to_string(kc.regime);
    j["dim"] = kc.dim;
    j["points"] = rep.points.size();
    j["max_deviation"] = rep.max_deviation;
    j["worst"] = {{"beta", w.beta}, {"eta1", number_or_null(w.eta1)},
                  {"p_closed", w.p_closed}, {"p_table", w.p_table},
                  {"p_oracle", w.p_oracle}};
    j["povm_ok"] = rep.povm_ok;
    j["passed"] = rep.passed;
    json solves = json::array();
    for (const OracleSolve& s : rep.solves) {
      solves.push_back({{"beta", opt_number(s.inputs.beta)},
                        {"eta1", opt_number(s.inputs.eta1)},
                        {"lambda_oracle", s.lambda.values},
                        {"lambda_table", s.table_lambda.values},
                        {"value", s.result.value},
                        {"min_eig_pi0", number_or_null(s.min_eig_pi0)}});
    }
    j["solves"] = solves;
    j["notes"] = rep.notes;
    reports.push_back(j);
    if (!rep.passed) {
      std::snprintf(line, sizeof line,
                    "verify: %s dim %d exceeds tolerance %.3g: deviation %.6g at beta=%s eta1=%s\n",
                    to_string(kc.regime).c_str(), kc.dim, opt.tolerance,
                    rep.max_deviation, format12(w.beta).c_str(), eta.c_str());
      res.err += line;
    }
  }
  res.exit_code = all_ok ? kOk : kCheckFailed;
  res.out = a.format == "json" ? reports.dump(2) + "\n" : text;
  return res;
}

CommandResult cmd_sweep(const SweepArgs& a) {
  const SurfaceInfo* s = nullptr;
  std::vector<double> grid;
  try {
    check_format(a.format, {"csv", "json"});
    s = &find_surface(a.surface);
    grid = unit_grid(a.grid);
  } catch (const std::invalid_argument& e) {
    return usage_error(e);
  }
  const std::vector<SurfaceCell> cells = sweep_surface(*s, grid, grid);

  CommandResult res;
  std::string body;
  std::size_t negative = 0;
  if (a.format == "csv") {
    body = s->difference ? "beta,eta1,value,value_minuend,value_subtrahend\n"
                         : "beta,eta1,value\n";
    for (const SurfaceCell& c : cells) {
      body += format12(c.beta) + "," + format12(c.eta1) + "," + format12(c.value);
      if (s->difference) body += "," + format12(c.minuend) + "," + format12(c.subtrahend);
      body += "\n";
    }
  } else {
    json rows = json::array();
    for (const SurfaceCell& c : cells) {
      json row = {{"beta", c.beta}, {"eta1", c.eta1},
                  {"value", std::stod(format12(c.value))}};
      if (s->difference) {
        row["value_minuend"] = std::stod(format12(c.minuend));
        row["value_subtrahend"] = std::stod(format12(c.subtrahend));
      }
      rows.push_back(row);
    }
    json j;
    j["surface"] = s->name;
    j["step"] = a.grid;
    j["rows"] = rows;
    body = j.dump(2) + "\n";
  }
  if (s->difference) {
    for (const SurfaceCell& c : cells) {
      if (c.value < kNegativeCell) {
        if (negative < 5)
          res.err += "sweep: " + s->name + " negative at beta=" + format12(c.beta) +
                     " eta1=" + format12(c.eta1) + ": " + format12(c.value) + "\n";
        ++negative;
      }
    }
    if (negative > 0) {
      res.err += "sweep: " + std::to_string(negative) + " of " +
                 std::to_string(cells.size()) + " cells of " + s->name +
                 " are negative\n";
      res.exit_code = kCheckFailed;
    }
  }
  if (a.out.empty()) {
    res.out = body;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) return {kUsage, "", "error: cannot write " + a.out + "\n"};
    f << body;
  }
  return res;
}

CommandResult cmd_simulate(const SimulateArgs& a) {
  try {
    const KnowledgeCase kc = make_case(parse_regime(a.case_name), a.dim);
    if (!a.beta) throw std::invalid_argument("simulate requires beta (the states must exist)");
    if (!a.eta1) throw std::invalid_argument("simulate requires eta1 (the preparation prior)");
    if (a.shots == 0) throw std::invalid_argument("shots must be >= 1");
    const CaseInputs in = decision_inputs(kc.regime, *a.beta, *a.eta1);
    check_inputs(kc.regime, in);
    const LambdaChoice choice = optimal_lambda(kc, in);

    SimConfig cfg;
    cfg.kc = kc;
    cfg.pair = pair_with_overlap(static_cast<std::size_t>(kc.dim), *a.beta, *a.eta1, a.seed);
    cfg.lam = choice.lam;
    cfg.shots = a.shots;
    cfg.seed = a.seed;
    const SimReport r = run(cfg);
    const double p_analytic = closed_form_probability(kc, *a.beta, *a.eta1);

    json j;
    j["case"] = to_string(kc.regime);
    j["dim"] = kc.dim;
    j["inputs"] = {{"beta", *a.beta}, {"eta1", *a.eta1}};
    j["lambda"] = choice.lam.values;
    j["branch"] = choice.branch;
    j["shots"] = a.shots;
    j["seed"] = a.seed;
    j["counts"] = {{"n1", r.counts.n1}, {"n2", r.counts.n2},
                   {"n0", r.counts.n0}, {"n_error", r.counts.n_error}};
    j["estimated_success"] = r.estimated_success;
    j["stderr"] = r.stderr_success;
    j["p_expected"] = r.p_expected;
    j["p_analytic"] = p_analytic;
    j["z_score"] = r.stderr_success > 0.0
                       ? json((r.estimated_success - r.p_expected) / r.stderr_success)
                       : json(nullptr);
    return {kOk, j.dump(2) + "\n", ""};
  } catch (const std::invalid_argument& e) {
    return usage_error(e);
  }
}

}  // namespace unambig::cli
