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


#include "unambig/simulate.h"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "unambig/parallel.h"
#include "unambig/rng.h"
#include "unambig/strategies.h"

namespace unambig {

namespace {

constexpr double kSumTol = 1e-9;
constexpr double kZeroCut = 1e-12;

// Clamps round-off, checks the sum, renormalizes. Order: pi1, pi2, pi0.
std::array<double, 3> clean_row(const std::array<double, 3>& raw, int k) {
  std::array<double, 3> p{};
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    if (raw[j] < -kSumTol)
      throw std::invalid_argument("negative outcome probability for preparation " +
                                  std::to_string(k));
    p[j] = raw[j] <= kZeroCut ? 0.0 : raw[j];
    sum += p[j];
  }
  if (std::abs(sum - 1.0) > kSumTol)
    throw std::invalid_argument("outcome probabilities for preparation " +
                                std::to_string(k) + " do not sum to 1");
  for (double& v : p) v /= sum;
  return p;
}

}  // namespace

SimReport run(const SimConfig& cfg) {
  if (cfg.shots == 0) throw std::invalid_argument("simulate: shots must be >= 1");
  const PovmSet povm = build_povm(cfg.kc, cfg.pair, cfg.lam);
  const ValidationReport v = validate(povm);
  if (!v.ok())
    throw std::invalid_argument("simulate: measurement is not valid (min eigenvalue of pi0 = " +
                                std::to_string(v.min_eigenvalues[2]) + ")");
  const OutcomeTable raw = outcome_probabilities(cfg.kc, cfg.pair, povm);
  // table[k][j] with j indexing pi0, pi1, pi2
  std::array<std::array<double, 3>, 2> sampled{};
  OutcomeTable table{};
  for (int k = 0; k < 2; ++k) {
    const auto p = clean_row({raw[k][1], raw[k][2], raw[k][0]}, k + 1);
    sampled[k] = p;
    table[k] = {p[2], p[0], p[1]};
  }

  const double eta1 = cfg.pair.eta1;
  const std::uint64_t batches = (cfg.shots + kShotBatch - 1) / kShotBatch;
  std::vector<SimCounts> per(batches);
  parallel_for(batches, [&](std::size_t b) {
    CounterRng rng(cfg.seed, b);
    const std::uint64_t begin = b * kShotBatch;
    const std::uint64_t end = std::min(cfg.shots, begin + kShotBatch);
    SimCounts& c = per[b];
    for (std::uint64_t s = begin; s < end; ++s) {
      const int k = rng.uniform() < eta1 ? 1 : 2;
      const auto& p = sampled[k - 1];
      const double u = rng.uniform();
      int j;
      if (u < p[0]) {
        j = 1;
      } else if (u < p[0] + p[1]) {
        j = 2;
      } else {
        j = 0;
      }
      if (k == 1) ++c.prepared1;
      if (j == 0) {
        ++c.n0;
      } else if (j == k) {
        ++(k == 1 ? c.n1 : c.n2);
      } else {
        ++c.n_error;
      }
    }
  });

  SimReport r;
  r.shots = cfg.shots;
  for (const SimCounts& c : per) {
    r.counts.n1 += c.n1;
    r.counts.n2 += c.n2;
    r.counts.n0 += c.n0;
    r.counts.n_error += c.n_error;
    r.counts.prepared1 += c.prepared1;
  }
  const double n = static_cast<double>(cfg.shots);
  r.estimated_success = static_cast<double>(r.counts.n1 + r.counts.n2) / n;
  r.stderr_success = std::sqrt(r.estimated_success * (1.0 - r.estimated_success) / n);
  r.p_expected = eta1 * table[0][1] + (1.0 - eta1) * table[1][2];
  r.outcome_probs = table;
  return r;
}

std::vector<SurfaceEstimate> estimate_surface(const KnowledgeCase& kc,
                                              const std::vector<double>& betas,
                                              const std::vector<double>& etas,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
  for (double b : betas)
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("beta grid outside [0, 1]");
  for (double e : etas)
    if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("eta1 grid outside [0, 1]");
  std::vector<SurfaceEstimate> out;
  std::uint64_t index = 0;
  for (double e : etas) {
    for (double b : betas) {
      SurfaceEstimate row;
      row.beta = b;
      row.eta1 = e;
      row.p_analytic = closed_form_probability(kc, b, e);
      const std::uint64_t point_seed = splitmix64(seed + index++);
      if (construction_of(kc.regime) == Construction::kKnownKnown && b >= 1.0 - 1e-12) {
        row.simulated = false;
        out.push_back(row);
        continue;
      }
      SimConfig cfg;
      cfg.kc = kc;
      cfg.pair = pair_with_overlap(static_cast<std::size_t>(kc.dim), b, e, point_seed);
      cfg.lam = optimal_lambda(kc, decision_inputs(kc.regime, b, e)).lam;
      cfg.shots = shots;
      cfg.seed = point_seed;
      const SimReport r = run(cfg);
      row.p_hat = r.estimated_success;
      row.p_expected = r.p_expected;
      row.stderr_success = r.stderr_success;
      row.n_error = r.counts.n_error;
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace unambig
