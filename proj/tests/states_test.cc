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


#include "unambig/states.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

namespace unambig {
namespace {

TEST(HaarRandomState, DeterministicAndNormalized) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const PureState a = haar_random_state(3, seed);
    EXPECT_NEAR(a.vec().norm(), 1.0, 1e-12);
    if (seed < 10) {
      const PureState b = haar_random_state(3, seed);
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a[i], b[i]);
    }
  }
  EXPECT_THROW(haar_random_state(4, 1), std::invalid_argument);
}

TEST(HaarRandomState, FirstMomentIsUniform) {
  for (std::size_t dim : {2u, 3u}) {
    std::vector<double> mean(dim, 0.0);
    const int n = 100000;
    for (int s = 0; s < n; ++s) {
      const PureState p = haar_random_state(dim, 1000000 + s);
      for (std::size_t i = 0; i < dim; ++i) mean[i] += std::norm(p[i]) / n;
    }
    for (double m : mean) EXPECT_NEAR(m, 1.0 / dim, 0.01);
  }
}

TEST(HaarRandomState, InvariantUnderFixedUnitary) {
  // Second moment E|<v|psi>|^4 = 2 / (d (d + 1)) for every unit v.
  const CVec v = CVec{1.0, cplx(0.0, 1.0)}.normalized();
  double m4 = 0.0;
  const int n = 100000;
  for (int s = 0; s < n; ++s) {
    const double p = std::norm(inner(v, haar_random_state(2, 7 * s + 3).vec()));
    m4 += p * p / n;
  }
  EXPECT_NEAR(m4, 1.0 / 3.0, 0.01);
}

TEST(PureState, CanonicalPhase) {
  const PureState p(CVec{cplx(0.0, 2.0), cplx(0.0, 0.0)});
  EXPECT_EQ(p[0], cplx(1.0));
  const PureState q(CVec{0.0, cplx(-1.0, 0.0)});
  EXPECT_EQ(q[1], cplx(1.0));
  EXPECT_THROW(PureState(CVec{0.0, 0.0}), std::invalid_argument);
}

TEST(OrthogonalComplement, Examples) {
  const PureState zero(CVec{1.0, 0.0});
  const PureState c0 = orthogonal_complement_qubit(zero);
  EXPECT_NEAR(std::abs(c0[1]), 1.0, 1e-15);
  const PureState plus(CVec{1.0, 1.0});
  const PureState cp = orthogonal_complement_qubit(plus);
  EXPECT_NEAR(cp[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cp[1].real(), -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(orthogonal_complement_qubit(haar_random_state(3, 1)),
               std::invalid_argument);
}

TEST(OrthogonalComplement, RandomQubitsAndInvolution) {
  for (std::uint64_t s = 0; s < 500; ++s) {
    const PureState p = haar_random_state(2, s);
    const PureState c = orthogonal_complement_qubit(p);
    EXPECT_LE(std::abs(inner(p.vec(), c.vec())), 1e-12);
    EXPECT_NEAR(c.vec().norm(), 1.0, 1e-12);
    const PureState cc = orthogonal_complement_qubit(c);
    EXPECT_NEAR(std::abs(inner(p.vec(), cc.vec())), 1.0, 1e-10);
  }
}

TEST(BlochState, MatchesParametrization) {
  const PureState p = bloch_state(std::numbers::pi / 3.0, 0.7);
  EXPECT_NEAR(p[0].real(), std::cos(std::numbers::pi / 6.0), 1e-15);
  EXPECT_NEAR(std::arg(p[1]), 0.7, 1e-14);
}

TEST(QutritAdaptedBasis, OrthogonalPair) {
  const PureState e0(CVec::basis(3, 0)), e1(CVec::basis(3, 1));
  const auto b = qutrit_adapted_basis(e0, e1);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_NEAR(std::abs(b[k][i]), k == i ? 1.0 : 0.0, 1e-15);
}

TEST(QutritAdaptedBasis, UniformSuperposition) {
  const PureState e0(CVec::basis(3, 0));
  const PureState u(CVec{1.0, 1.0, 1.0});
  EXPECT_NEAR(overlap(e0, u), 1.0 / std::sqrt(3.0), 1e-15);
  const auto b = qutrit_adapted_basis(e0, u);
  EXPECT_NEAR(b[1][0].real(), 0.0, 1e-15);
  EXPECT_NEAR(b[1][1].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b[1][2].real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(QutritAdaptedBasis, RandomPairsReduceToTwoComponents) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const StatePair p = pair_with_overlap(3, 0.37, 0.5, s);
    const auto b = qutrit_adapted_basis(p.psi1, p.psi2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(std::abs(inner(b[i], b[j])), i == j ? 1.0 : 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner(b[0], p.psi1.vec())), 1.0, 1e-12);
    const cplx c0 = inner(b[0], p.psi2.vec());
    const cplx c1 = inner(b[1], p.psi2.vec());
    EXPECT_NEAR(c0.real(), 0.37, 1e-12);
    EXPECT_NEAR(c0.imag(), 0.0, 1e-12);
    EXPECT_NEAR(c1.real(), std::sqrt(1.0 - 0.37 * 0.37), 1e-12);
    EXPECT_NEAR(std::abs(inner(b[2], p.psi2.vec())), 0.0, 1e-12);
  }
}

TEST(QutritAdaptedBasis, RejectsParallelPair) {
  const StatePair p = pair_with_overlap(3, 1.0, 0.5, 4);
  EXPECT_THROW(qutrit_adapted_basis(p.psi1, p.psi2), std::invalid_argument);
}

TEST(CompleteBasis, Orthonormal) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const PureState p = haar_random_state(3, s);
    const auto b = complete_basis(p.vec());
    ASSERT_EQ(b.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(std::abs(inner(b[i], b[j])), i == j ? 1.0 : 0.0, 1e-12);
  }
}

TEST(PairWithOverlap, Overlaps) {
  for (std::size_t dim : {2u, 3u}) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      for (double beta : {0.0, 0.5, 0.93, 1.0}) {
        const StatePair p = pair_with_overlap(dim, beta, 0.3, s);
        EXPECT_NEAR(overlap(p.psi1, p.psi2), beta, 1e-12);
        EXPECT_EQ(p.beta, beta);
        EXPECT_EQ(p.eta1, 0.3);
      }
    }
  }
  const StatePair same = pair_with_overlap(2, 1.0, 0.5, 9);
  EXPECT_NEAR(std::abs(inner(same.psi1.vec(), same.psi2.vec())), 1.0, 1e-12);
  EXPECT_THROW(pair_with_overlap(2, 1.5, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(pair_with_overlap(2, 0.5, 1.5, 1), std::invalid_argument);
}

TEST(CanonicalPair, Layout) {
  const StatePair q = canonical_pair(3, 0.6, 0.2);
  EXPECT_NEAR(overlap(q.psi1, q.psi2), 0.6, 1e-15);
  EXPECT_NEAR(q.psi2[1].real(), q.psi2[2].real(), 1e-15);
}

}  // namespace
}  // namespace unambig
