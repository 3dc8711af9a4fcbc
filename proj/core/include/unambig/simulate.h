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


#ifndef UNAMBIG_SIMULATE_H_
#define UNAMBIG_SIMULATE_H_

#include <cstdint>
#include <vector>

#include "unambig/cases.h"
#include "unambig/povm.h"
#include "unambig/states.h"

namespace unambig {

/// Shots are drawn in fixed batches; batch b uses CounterRng(seed, b), so the
/// counts do not depend on the number of worker threads.
inline constexpr std::uint64_t kShotBatch = 65536;

struct SimConfig {
  KnowledgeCase kc;
  StatePair pair;
  LambdaParams lam;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

struct SimCounts {
  std::uint64_t n1 = 0;       // psi1 prepared, psi1 reported
  std::uint64_t n2 = 0;       // psi2 prepared, psi2 reported
  std::uint64_t n0 = 0;       // inconclusive
  std::uint64_t n_error = 0;  // wrong state reported
  std::uint64_t prepared1 = 0;

  std::uint64_t total() const { return n1 + n2 + n0 + n_error; }
};

struct SimReport {
  SimCounts counts;
  std::uint64_t shots = 0;
  double estimated_success = 0.0;
  double stderr_success = 0.0;  // sqrt(p (1 - p) / shots)
  /// eta1 P(1|psi1) + (1 - eta1) P(2|psi2) from the outcome table.
  double p_expected = 0.0;
  OutcomeTable outcome_probs{};
};

/// Validates the measurement, then samples preparation and outcome per shot
/// by inverse CDF. Throws std::invalid_argument for zero shots, an invalid
/// measurement, or outcome probabilities that do not sum to 1 within 1e-9.
SimReport run(const SimConfig& cfg);

struct SurfaceEstimate {
  double beta = 0.0;
  double eta1 = 0.0;
  double p_hat = 0.0;
  double p_analytic = 0.0;
  double p_expected = 0.0;
  double stderr_success = 0.0;
  std::uint64_t n_error = 0;
  /// False for a degenerate known-known pair (beta = 1), reported as 0.
  bool simulated = true;
};

/// One simulation per grid point (eta1-major, then beta) with the closed-form
/// strategy of the case and a random pair of the requested overlap.
std::vector<SurfaceEstimate> estimate_surface(const KnowledgeCase& kc,
                                              const std::vector<double>& betas,
                                              const std::vector<double>& etas,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

}  // namespace unambig

#endif  // UNAMBIG_SIMULATE_H_
