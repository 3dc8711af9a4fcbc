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


#ifndef UNAMBIG_POVM_H_
#define UNAMBIG_POVM_H_

#include <array>
#include <string>
#include <vector>

#include "unambig/cases.h"
#include "unambig/linalg.h"
#include "unambig/states.h"

namespace unambig {

/// Nonnegative measurement coefficients. Component layout:
///   unknown-unknown, qubit  : l1, l2
///   unknown-unknown, qutrit : l11, l12, l13, l21, l22, l23
///   known-unknown,   qubit  : l1, l2, l3
///   known-unknown,   qutrit : l11, l12, l21, l22, l311, l312, l321, l322
///   known-known (any dim)   : l1, l2
struct LambdaParams {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

std::size_t lambda_count(Construction c, int dim);
std::vector<std::string> lambda_names(Construction c, int dim);

/// Every l1-type component set to l1, every l2-type to l2, every l3-type to l3.
LambdaParams uniform_lambda(Construction c, int dim, double l1, double l2,
                            double l3 = 1.0);

/// The three outcomes: pi1 identifies psi1, pi2 identifies psi2, pi0 is
/// inconclusive. pi0 = I - pi1 - pi2.
struct PovmSet {
  std::size_t dim = 0;
  CMat pi1;
  CMat pi2;
  CMat pi0;

  const CMat& element(int j) const { return j == 1 ? pi1 : j == 2 ? pi2 : pi0; }
};

/// (|ab> - |ba>)/sqrt2 on two registers.
CVec antisymmetric_state(const CVec& a, const CVec& b);

/// Registers A (x) B (x) C of dimension dim^3. Throws on negative lambda or
/// a component count that does not match the layout.
PovmSet build_unknown_unknown(int dim, const LambdaParams& lam);

/// Registers A (x) B of dimension dim^2, built on a basis whose first vector
/// is psi1. Throws on lambda outside [0, 1].
PovmSet build_known_unknown(const PureState& psi1, const LambdaParams& lam);

/// Single system. Throws on negative lambda and on beta = 1.
PovmSet build_known_known(const PureState& psi1, const PureState& psi2,
                          const LambdaParams& lam);

/// Dispatches on the construction of the case.
PovmSet build_povm(const KnowledgeCase& kc, const StatePair& pair,
                   const LambdaParams& lam);

/// Register input when psi_k (k = 1, 2) is prepared:
///   unknown-unknown: psi1_A psi_k_B psi2_C
///   known-unknown  : psi2_A psi_k_B
///   known-known    : psi_k
CVec input_state(Construction c, const StatePair& pair, int k);

struct ValidationReport {
  std::array<bool, 3> psd_ok{};          // pi1, pi2, pi0
  std::array<double, 3> min_eigenvalues{};
  double completeness_residual = 0.0;    // max |pi1 + pi2 + pi0 - I|
  double hermiticity_defect = 0.0;

  bool ok() const {
    return psd_ok[0] && psd_ok[1] && psd_ok[2] &&
           completeness_residual <= 1e-10 && hermiticity_defect <= kHermitianTol;
  }
};

ValidationReport validate(const PovmSet& povm);

/// probs[k-1][j] = <Psi_k|pi_j|Psi_k> for outcome j in {0, 1, 2}.
using OutcomeTable = std::array<std::array<double, 3>, 2>;
OutcomeTable outcome_probabilities(const KnowledgeCase& kc,
                                   const StatePair& pair, const PovmSet& povm);

/// (p1, p2): success probabilities per preparation.
std::array<double, 2> success_pair(const KnowledgeCase& kc,
                                   const StatePair& pair,
                                   const LambdaParams& lam);

}  // namespace unambig

#endif  // UNAMBIG_POVM_H_
