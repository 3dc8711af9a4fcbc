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


#ifndef UNAMBIG_STRATEGIES_H_
#define UNAMBIG_STRATEGIES_H_

#include <array>
#include <optional>
#include <string>

#include "unambig/cases.h"
#include "unambig/povm.h"

namespace unambig {

/// Decision inputs. Which of them a case may receive is fixed by its regime:
/// A1, A2 take eta1; A3, A4 take beta and eta1; B1, B2 take nothing; B3, B4
/// take beta.
struct CaseInputs {
  std::optional<double> beta;
  std::optional<double> eta1;
};

/// Throws std::invalid_argument naming the missing or forbidden parameter,
/// or a value outside [0, 1].
void check_inputs(Regime r, const CaseInputs& in);

/// Smallest constraint slack of lam for the case (negative means violated).
/// Known-known constraints depend on beta, which is then required.
double feasibility_slack(const KnowledgeCase& kc, const LambdaParams& lam,
                         std::optional<double> beta = std::nullopt);

/// feasibility_slack >= -1e-12.
bool feasible(const KnowledgeCase& kc, const LambdaParams& lam,
              std::optional<double> beta = std::nullopt);

struct LambdaChoice {
  LambdaParams lam;
  std::string branch;  // ASCII label of the piecewise branch that fired
};

/// Closed-form optimal (A) or maximin (B) measurement coefficients.
/// Thresholds are closed from the left: the lower branch wins a tie.
LambdaChoice optimal_lambda(const KnowledgeCase& kc, const CaseInputs& in);

/// The coefficient table as originally published. Identical to
/// optimal_lambda except for the qutrit unknown-unknown cases, where the
/// published values are not positive (kept for reporting).
LambdaChoice published_lambda(const KnowledgeCase& kc, const CaseInputs& in);

/// Success probability surface P(beta, eta1) of the optimal strategy, in
/// closed form. For B3 this is the actual surface; see worst_case_closed_form.
double closed_form_probability(const KnowledgeCase& kc, double beta,
                               double eta1);

/// min over eta1 of the actual surface for B1, B3, B4. Throws otherwise.
double worst_case_closed_form(const KnowledgeCase& kc, double beta);

/// Qubit-layout success probabilities (p1, p2) as functions of beta:
///   unknown-unknown: p_i = lam_i (1 - beta^2) / 2
///   known-unknown  : p1 = lam1 (1 - beta^2) / 2,
///                    p2 = lam2 beta^2 (1 - beta^2) + lam3 (1 - beta^2)^2
///   known-known    : p_i = lam_i (1 - beta^2)
/// Qutrit layouts must be uniform and reduce to the same expressions.
std::array<double, 2> analytic_success_pair(Construction c,
                                            const LambdaParams& lam,
                                            double beta);

struct StrategyResult {
  LambdaParams lam;
  double p_analytic = 0.0;
  std::string branch;
  /// Guaranteed value of the strategy's maximin objective: min over eta1 of
  /// P for B1, B3, B4; the normalized objective P / (1 - beta^2) minimized
  /// over the unknown beta (A2) or beta and eta1 (B2).
  std::optional<double> worst_case_value;
  /// eta1 p1 + (1 - eta1) p2 from POVM expectations on canonical_pair.
  /// Empty for a degenerate known-known pair.
  std::optional<double> p_numeric;
};

/// Evaluates the strategy of the case at (beta, eta1); both are always
/// accepted here since the surfaces depend on both.
StrategyResult success_probability(const KnowledgeCase& kc, double beta,
                                   double eta1);

/// Restricts (beta, eta1) to the inputs the regime receives.
CaseInputs decision_inputs(Regime r, double beta, double eta1);

}  // namespace unambig

#endif  // UNAMBIG_STRATEGIES_H_
