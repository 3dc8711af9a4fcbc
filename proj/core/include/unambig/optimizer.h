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


#ifndef UNAMBIG_OPTIMIZER_H_
#define UNAMBIG_OPTIMIZER_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unambig/cases.h"
#include "unambig/povm.h"
#include "unambig/strategies.h"

namespace unambig {

/// One point of the adversary's grid. Fields the adversary does not control
/// hold the fixed value of the problem.
struct AdversaryPoint {
  double beta = 0.0;
  double eta1 = 0.0;
};

/// max over feasible lambda in [0,1]^dims of min over the adversary grid.
struct MaximinProblem {
  std::string label;
  std::size_t dims = 2;
  /// Must be pure; called concurrently.
  std::function<bool(std::span<const double>)> feasible;
  /// objective(lambda, a) for adversary index a. Must be pure.
  std::function<double(std::span<const double>, std::size_t)> objective;
  /// A single entry for point problems.
  std::vector<AdversaryPoint> adversary;
};

struct MaximinOptions {
  double resolution = 1e-3;
  /// Defaults to 10 * resolution.
  std::optional<double> coarse_step;
  /// Refinement stops once the step is <= resolution / 100.
  bool refine = true;
  /// Cap on grid points per pass.
  std::size_t max_points = 2'000'000;
};

struct MaximinResult {
  std::vector<double> lambda_star;
  double value = 0.0;
  std::size_t worst_adversary = 0;
  /// objective(lambda_star, a) for every adversary point.
  std::vector<double> certificate;
  std::size_t evaluations = 0;
  int passes = 0;
  double final_step = 0.0;
};

/// Coarse grid over the box filtered by feasibility, then passes on a grid
/// ten times finer centred on the incumbent, over a window of half-width
/// max(10 h, 2 h^(2/3)). Ties keep the lexicographically smallest lambda.
/// The inner minimum over the adversary grid is exact; candidates stop being
/// evaluated once they cannot beat the incumbent. Throws std::runtime_error
/// when no grid point is feasible.
MaximinResult solve_maximin(const MaximinProblem& p, const MaximinOptions& opt);
MaximinResult solve_maximin(const MaximinProblem& p, double resolution);

struct OracleOptions {
  /// Adversary grid step for beta and eta1.
  double adversary_step = 0.01;
  /// Treat l3 of the known-unknown family as a search coordinate instead of
  /// pinning it to 1.
  bool free_lambda3 = false;
  /// Search every qutrit component independently instead of the uniform
  /// (index-symmetric) reduction.
  bool full_dimension = false;
};

/// Search coordinates of the oracle for a case.
std::vector<std::string> oracle_coordinates(const KnowledgeCase& kc,
                                            const OracleOptions& opt = {});

/// Maps oracle coordinates to the full coefficient layout.
LambdaParams expand_lambda(const KnowledgeCase& kc, std::span<const double> x,
                           const OracleOptions& opt = {});

/// Objective of each case, with p1, p2 taken from POVM expectations on
/// canonical_pair:
///   A1, B1: (eta1 p1 + (1 - eta1) p2) / (1 - beta^2), B1 against eta1
///   A2, B2: same normalization, A2 against beta, B2 against beta and eta1
///   A3, A4: eta1 p1 + (1 - eta1) p2 at the given point
///   B3, B4: same, against eta1 at the given beta
/// beta = 1 is sampled at 1 - 1e-6 where the objective is normalized.
MaximinProblem make_problem(const KnowledgeCase& kc, const CaseInputs& in,
                            const OracleOptions& opt = {});

/// eta1 p1 + (1 - eta1) p2 of the case's measurement with coefficients lam,
/// on canonical_pair(dim, beta). Zero for a degenerate known-known pair.
double evaluate_surface(const KnowledgeCase& kc, const LambdaParams& lam,
                        double beta, double eta1);

struct VerifyOptions {
  double grid_step = 0.05;
  double resolution = 1e-3;
  double tolerance = 2e-3;
  OracleOptions oracle;
  /// Compare the published table instead of the strategy actually used.
  bool published_table = false;
  /// Test hook: the table lambda is multiplied by this factor.
  double lambda_scale = 1.0;
};

struct OracleSolve {
  CaseInputs inputs;
  MaximinResult result;
  LambdaParams lambda;
  LambdaParams table_lambda;
  std::string branch;
  double min_eig_pi0 = 0.0;
  bool povm_ok = true;
};

/// Values compared at one (beta, eta1) grid point. For B3 the comparison is
/// on the worst case over eta1 and eta1 is NaN.
struct VerifyPoint {
  double beta = 0.0;
  double eta1 = 0.0;
  double p_closed = 0.0;  // printed closed form
  double p_table = 0.0;   // surface at the table lambda
  double p_oracle = 0.0;  // surface at the oracle lambda

  double deviation() const;
};

struct VerifyReport {
  KnowledgeCase kc;
  VerifyOptions options;
  std::vector<OracleSolve> solves;
  std::vector<VerifyPoint> points;
  double max_deviation = 0.0;
  VerifyPoint worst;
  bool povm_ok = true;
  bool passed = false;
  std::vector<std::string> notes;
};

/// Solves the oracle once per decision input on the grid and compares the
/// closed form and the table strategy against it at every grid point.
VerifyReport verify_case(const KnowledgeCase& kc, const VerifyOptions& opt = {});

/// Inclusive grid 0, step, 2 step, ..., 1 with each value rounded through 12
/// significant digits.
std::vector<double> unit_grid(double step);

}  // namespace unambig

#endif  // UNAMBIG_OPTIMIZER_H_
