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


// Helpers shared by the POVM tests and the acceptance runner.

#ifndef UNAMBIG_TESTS_TEST_UTIL_H_
#define UNAMBIG_TESTS_TEST_UTIL_H_

#include <cmath>
#include <optional>
#include <random>

#include "unambig/povm.h"
#include "unambig/strategies.h"

namespace unambig::testing {

/// Uniform rejection sample from the feasible region within the unit box.
inline LambdaParams sample_feasible(const KnowledgeCase& kc, double beta,
                                    std::mt19937_64& gen) {
  const Construction c = construction_of(kc.regime);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LambdaParams lam;
  lam.values.resize(lambda_count(c, kc.dim));
  for (;;) {
    for (double& v : lam.values) v = u(gen);
    if (feasible(kc, lam, beta)) return lam;
  }
}

/// Walks from the origin along a random direction to the boundary of the
/// feasible set and steps `distance` past it. Returns nothing when the exit
/// is through a face of the unit box that the builder refuses to cross.
/// The qutrit unknown-unknown family is probed on its uniform slice, where
/// the feasibility predicate is exact.
inline std::optional<LambdaParams> outside_point(const KnowledgeCase& kc,
                                                 double beta, double distance,
                                                 std::mt19937_64& gen) {
  const Construction c = construction_of(kc.regime);
  const std::size_t n = lambda_count(c, kc.dim);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> dir(n);
  if (c == Construction::kUnknownUnknown && kc.dim == 3) {
    const double a = u(gen), b = u(gen);
    dir = uniform_lambda(c, 3, a, b).values;
  } else {
    for (double& v : dir) v = u(gen);
  }
  double norm = 0.0;
  for (double v : dir) norm += v * v;
  norm = std::sqrt(norm);
  if (norm < 1e-3) return std::nullopt;
  for (double& v : dir) v /= norm;

  auto at = [&](double t) {
    LambdaParams l;
    for (double v : dir) l.values.push_back(t * v);
    return l;
  };
  double lo = 0.0, hi = 4.0;
  if (feasible(kc, at(hi), beta)) return std::nullopt;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (feasible(kc, at(mid), beta) ? lo : hi) = mid;
  }
  LambdaParams out = at(lo + distance);
  if (c == Construction::kKnownUnknown)
    for (double v : out.values)
      if (v > 1.0) return std::nullopt;
  return out;
}

}  // namespace unambig::testing

#endif  // UNAMBIG_TESTS_TEST_UTIL_H_
