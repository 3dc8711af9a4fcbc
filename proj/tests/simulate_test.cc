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

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "unambig/rng.h"
#include "unambig/strategies.h"

namespace unambig {
namespace {

SimConfig optimal_config(Regime r, int dim, double beta, double eta, std::uint64_t shots,
                         std::uint64_t seed) {
  SimConfig c;
  c.kc = make_case(r, dim);
  c.pair = pair_with_overlap(static_cast<std::size_t>(dim), beta, eta, seed + 1000);
  c.lam = optimal_lambda(c.kc, decision_inputs(r, beta, eta)).lam;
  c.shots = shots;
  c.seed = seed;
  return c;
}

bool same(const SimReport& a, const SimReport& b) {
  return a.counts.n1 == b.counts.n1 && a.counts.n2 == b.counts.n2 &&
         a.counts.n0 == b.counts.n0 && a.counts.n_error == b.counts.n_error &&
         a.counts.prepared1 == b.counts.prepared1;
}

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
  CounterRng a(7, 0), b(7, 0), c(7, 1);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
  CounterRng u(1, 2);
  double mean = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.uniform();
    ASSERT_GE(v, 0.0);
    ASSERT_LT(v, 1.0);
    mean += v;
  }
  EXPECT_NEAR(mean / 100000, 0.5, 0.005);
}

TEST(Run, OrthogonalKnownStatesAlwaysSucceed) {
  SimConfig c;
  c.kc = make_case(Regime::kA4, 2);
  c.pair = pair_with_overlap(2, 0.0, 0.5, 4);
  c.lam = LambdaParams{{1.0, 1.0}};
  c.shots = 100000;
  c.seed = 3;
  const SimReport r = run(c);
  EXPECT_EQ(r.estimated_success, 1.0);
  EXPECT_EQ(r.counts.n0, 0u);
  EXPECT_EQ(r.counts.n_error, 0u);
  EXPECT_EQ(r.counts.total(), 100000u);
}

TEST(Run, A4AtHalfOverlapMatchesClosedForm) {
  const SimReport r = run(optimal_config(Regime::kA4, 2, 0.5, 0.5, 1000000, 9));
  EXPECT_NEAR(r.p_expected, 0.5, 1e-12);
  EXPECT_LE(std::abs(r.estimated_success - 0.5), 4 * r.stderr_success);
  EXPECT_EQ(r.counts.n_error, 0u);
}

TEST(Run, NoErrorsAndChiSquareAcrossCases) {
  for (Regime reg : kAllRegimes)
    for (int dim : {2, 3}) {
      const SimConfig c = optimal_config(reg, dim, 0.45, 0.35, 1000000, 21);
      const SimReport r = run(c);
      EXPECT_EQ(r.counts.n_error, 0u) << to_string(reg);
      EXPECT_EQ(r.counts.total(), c.shots);
      const double n = static_cast<double>(c.shots), eta = c.pair.eta1;
      const auto& t = r.outcome_probs;
      const double obs[4] = {double(r.counts.n1), double(r.counts.prepared1 - r.counts.n1),
                             double(r.counts.n2),
                             double(c.shots - r.counts.prepared1 - r.counts.n2)};
      const double exp[4] = {n * eta * t[0][1], n * eta * t[0][0], n * (1 - eta) * t[1][2],
                             n * (1 - eta) * t[1][0]};
      double chi2 = 0.0;
      int cells = 0;
      for (int i = 0; i < 4; ++i) {
        if (exp[i] <= 0.0) {
          EXPECT_EQ(obs[i], 0.0);
          continue;
        }
        chi2 += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
        ++cells;
      }
      // 0.001 upper quantiles of chi-square with 1, 2, 3 degrees of freedom
      const double crit[] = {0.0, 10.828, 13.816, 16.266};
      ASSERT_GE(cells, 2);
      EXPECT_LT(chi2, crit[cells - 1]) << to_string(reg) << " dim " << dim;
      EXPECT_LE(std::abs(r.estimated_success - r.p_expected), 4 * r.stderr_success);
    }
}

TEST(Run, SameSeedSameReportAcrossThreadCounts) {
  const SimConfig c = optimal_config(Regime::kB2, 3, 0.4, 0.3, 300000, 5);
  const char* prev = std::getenv("UNAMBIG_THREADS");
  const std::string saved = prev ? prev : "";
  setenv("UNAMBIG_THREADS", "1", 1);
  const SimReport a = run(c);
  setenv("UNAMBIG_THREADS", "3", 1);
  const SimReport b = run(c);
  if (prev) setenv("UNAMBIG_THREADS", saved.c_str(), 1);
  else unsetenv("UNAMBIG_THREADS");
  EXPECT_TRUE(same(a, b));
  SimConfig d = c;
  d.seed = 6;
  EXPECT_FALSE(same(a, run(d)));
}

TEST(Run, RejectsBadConfigs) {
  SimConfig c = optimal_config(Regime::kA1, 2, 0.3, 0.5, 0, 1);
  EXPECT_THROW(run(c), std::invalid_argument);
  c.shots = 10;
  c.lam = LambdaParams{{1.0, 1.0}};
  EXPECT_THROW(run(c), std::invalid_argument);
}

TEST(EstimateSurface, RowsAndDegenerateColumn) {
  const std::vector<double> betas = {0.0, 0.5, 1.0};
  const std::vector<double> etas = {0.1, 0.6};
  for (Regime reg : {Regime::kA1, Regime::kB1, Regime::kA4}) {
    const auto rows = estimate_surface(make_case(reg, 2), betas, etas, 200000, 77);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[1].beta, 0.5);
    EXPECT_EQ(rows[1].eta1, 0.1);
    EXPECT_EQ(rows[3].eta1, 0.6);
    for (const SurfaceEstimate& s : rows) {
      EXPECT_EQ(s.n_error, 0u);
      if (s.beta == 1.0) {
        EXPECT_EQ(s.p_hat, 0.0);
        EXPECT_NEAR(s.p_analytic, 0.0, 1e-15);
        continue;
      }
      EXPECT_NEAR(s.p_expected, s.p_analytic, 1e-10) << to_string(reg);
      EXPECT_LE(std::abs(s.p_hat - s.p_analytic), 4 * s.stderr_success + 1e-12);
    }
  }
  const auto kk = estimate_surface(make_case(Regime::kB4, 2), {1.0}, {0.5}, 10, 1);
  EXPECT_FALSE(kk[0].simulated);
  EXPECT_THROW(estimate_surface(make_case(Regime::kB4, 2), {1.5}, {0.5}, 10, 1),
               std::invalid_argument);
}

TEST(EstimateSurface, A1FirstBranchRow) {
  const auto rows =
      estimate_surface(make_case(Regime::kA1, 2), {0.0, 0.3, 0.6}, {0.1}, 500000, 8);
  for (const SurfaceEstimate& s : rows) {
    const double want = 0.5 * 0.9 * (1 - s.beta * s.beta);
    EXPECT_NEAR(s.p_analytic, want, 1e-15);
    EXPECT_LE(std::abs(s.p_hat - want), 4 * s.stderr_success);
  }
}

}  // namespace
}  // namespace unambig
