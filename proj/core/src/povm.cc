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


#include "unambig/povm.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace unambig {

namespace {

// Antisymmetric pairs for the qutrit unknown-unknown construction.
constexpr std::array<std::array<std::size_t, 2>, 3> kQutritPairs = {
    {{0, 1}, {0, 2}, {1, 2}}};

void check_count(const LambdaParams& lam, Construction c, int dim) {
  const std::size_t want = lambda_count(c, dim);
  if (lam.size() != want)
    throw std::invalid_argument(to_string(c) + " lambda needs " +
                                std::to_string(want) + " components, got " +
                                std::to_string(lam.size()));
}

void check_range(const LambdaParams& lam, double hi, const char* what) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (!(lam[i] >= 0.0))
      throw std::invalid_argument(std::string(what) + ": lambda[" +
                                  std::to_string(i) + "] is negative");
    if (lam[i] > hi)
      throw std::invalid_argument(std::string(what) + ": lambda[" +
                                  std::to_string(i) + "] exceeds 1");
  }
}

PovmSet finish(CMat pi1, CMat pi2) {
  PovmSet p;
  p.dim = pi1.dim();
  p.pi0 = CMat::identity(p.dim) - pi1 - pi2;
  p.pi1 = std::move(pi1);
  p.pi2 = std::move(pi2);
  return p;
}

}  // namespace

std::size_t lambda_count(Construction c, int dim) {
  switch (c) {
    case Construction::kUnknownUnknown:
      return dim == 2 ? 2 : 6;
    case Construction::kKnownUnknown:
      return dim == 2 ? 3 : 8;
    case Construction::kKnownKnown:
      return 2;
  }
  return 0;
}

std::vector<std::string> lambda_names(Construction c, int dim) {
  if (dim == 2 || c == Construction::kKnownKnown) {
    if (c == Construction::kKnownUnknown) return {"l1", "l2", "l3"};
    return {"l1", "l2"};
  }
  if (c == Construction::kUnknownUnknown)
    return {"l11", "l12", "l13", "l21", "l22", "l23"};
  return {"l11", "l12", "l21", "l22", "l311", "l312", "l321", "l322"};
}

LambdaParams uniform_lambda(Construction c, int dim, double l1, double l2,
                            double l3) {
  LambdaParams lam;
  if (dim == 2 || c == Construction::kKnownKnown) {
    lam.values = {l1, l2};
    if (c == Construction::kKnownUnknown) lam.values.push_back(l3);
    return lam;
  }
  if (c == Construction::kUnknownUnknown) {
    lam.values = {l1, l1, l1, l2, l2, l2};
  } else {
    lam.values = {l1, l1, l2, l2, l3, l3, l3, l3};
  }
  return lam;
}

CVec antisymmetric_state(const CVec& a, const CVec& b) {
  CVec v = kron(a, b) - kron(b, a);
  v *= 1.0 / std::sqrt(2.0);
  return v;
}

PovmSet build_unknown_unknown(int dim, const LambdaParams& lam) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("build_unknown_unknown: dim must be 2 or 3");
  check_count(lam, Construction::kUnknownUnknown, dim);
  check_range(lam, INFINITY, "build_unknown_unknown");
  const std::size_t d = static_cast<std::size_t>(dim);
  const CMat id = CMat::identity(d);
  const std::size_t npairs = dim == 2 ? 1 : 3;
  CMat pi1(d * d * d), pi2(d * d * d);
  for (std::size_t i = 0; i < npairs; ++i) {
    const auto [a, b] = kQutritPairs[i];
    const CMat pas =
        CMat::projector(antisymmetric_state(CVec::basis(d, a), CVec::basis(d, b)));
    pi1 += lam[i] * kron(id, pas);
    pi2 += lam[npairs + i] * kron(pas, id);
  }
  return finish(std::move(pi1), std::move(pi2));
}

PovmSet build_known_unknown(const PureState& psi1, const LambdaParams& lam) {
  const int dim = static_cast<int>(psi1.dim());
  check_count(lam, Construction::kKnownUnknown, dim);
  check_range(lam, 1.0, "build_known_unknown");
  std::vector<CVec> b;
  if (dim == 2) {
    b = {psi1.vec(), orthogonal_complement_qubit(psi1).vec()};
  } else {
    b = complete_basis(psi1.vec());
  }
  const std::size_t d = b.size();
  CMat pi1(d * d), pi2(d * d);
  if (dim == 2) {
    pi1 += lam[0] * CMat::projector(antisymmetric_state(b[0], b[1]));
    pi2 += lam[1] * CMat::projector(kron(b[0], b[1]));
    pi2 += lam[2] * CMat::projector(kron(b[1], b[1]));
  } else {
    for (std::size_t i = 1; i <= 2; ++i) {
      pi1 += lam[i - 1] * CMat::projector(antisymmetric_state(b[0], b[i]));
      pi2 += lam[i + 1] * CMat::projector(kron(b[0], b[i]));
    }
    std::size_t idx = 4;
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t k = 1; k <= 2; ++k)
        pi2 += lam[idx++] * CMat::projector(kron(b[j], b[k]));
  }
  return finish(std::move(pi1), std::move(pi2));
}

PovmSet build_known_known(const PureState& psi1, const PureState& psi2,
                          const LambdaParams& lam) {
  if (psi1.dim() != psi2.dim())
    throw std::invalid_argument("build_known_known: dimension mismatch");
  check_count(lam, Construction::kKnownKnown, static_cast<int>(psi1.dim()));
  check_range(lam, INFINITY, "build_known_known");
  const double beta = overlap(psi1, psi2);
  if (beta >= 1.0 - 1e-12)
    throw std::invalid_argument(
        "build_known_known: degenerate pair (beta = 1) cannot be discriminated");
  CVec d1, d2;  // pi1 direction (orthogonal to psi2), pi2 direction
  if (psi1.dim() == 2) {
    d1 = orthogonal_complement_qubit(psi2).vec();
    d2 = orthogonal_complement_qubit(psi1).vec();
  } else {
    const auto b = qutrit_adapted_basis(psi1, psi2);
    const double s = std::sqrt(1.0 - beta * beta);
    d1 = s * b[0] - cplx(beta) * b[1];
    d2 = b[1];
  }
  return finish(lam[0] * CMat::projector(d1), lam[1] * CMat::projector(d2));
}

PovmSet build_povm(const KnowledgeCase& kc, const StatePair& pair,
                   const LambdaParams& lam) {
  if (pair.psi1.dim() != static_cast<std::size_t>(kc.dim))
    throw std::invalid_argument("state dimension does not match the case");
  switch (construction_of(kc.regime)) {
    case Construction::kUnknownUnknown:
      return build_unknown_unknown(kc.dim, lam);
    case Construction::kKnownUnknown:
      return build_known_unknown(pair.psi1, lam);
    case Construction::kKnownKnown:
      return build_known_known(pair.psi1, pair.psi2, lam);
  }
  throw std::logic_error("build_povm: unreachable");
}

CVec input_state(Construction c, const StatePair& pair, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("input_state: k must be 1 or 2");
  const CVec& data = (k == 1 ? pair.psi1 : pair.psi2).vec();
  switch (c) {
    case Construction::kUnknownUnknown:
      return kron({pair.psi1.vec(), data, pair.psi2.vec()});
    case Construction::kKnownUnknown:
      return kron(pair.psi2.vec(), data);
    case Construction::kKnownKnown:
      return data;
  }
  throw std::logic_error("input_state: unreachable");
}

ValidationReport validate(const PovmSet& povm) {
  ValidationReport r;
  for (int j = 0; j < 3; ++j) {
    const CMat& m = povm.element(j == 2 ? 0 : j + 1);
    r.hermiticity_defect = std::max(r.hermiticity_defect, m.hermiticity_defect());
    if (m.hermiticity_defect() > kHermitianTol) {
      r.min_eigenvalues[j] = NAN;
      r.psd_ok[j] = false;
      continue;
    }
    r.min_eigenvalues[j] = eigvals_hermitian(m).front();
    r.psd_ok[j] = r.min_eigenvalues[j] >= -kPsdTol;
  }
  const CMat sum = povm.pi1 + povm.pi2 + povm.pi0 - CMat::identity(povm.dim);
  r.completeness_residual = sum.max_abs();
  return r;
}

OutcomeTable outcome_probabilities(const KnowledgeCase& kc,
                                   const StatePair& pair, const PovmSet& povm) {
  OutcomeTable t{};
  const Construction c = construction_of(kc.regime);
  for (int k = 1; k <= 2; ++k) {
    const CVec in = input_state(c, pair, k);
    for (int j = 0; j < 3; ++j) t[k - 1][j] = expectation(in, povm.element(j));
  }
  return t;
}

std::array<double, 2> success_pair(const KnowledgeCase& kc,
                                   const StatePair& pair,
                                   const LambdaParams& lam) {
  const PovmSet povm = build_povm(kc, pair, lam);
  const Construction c = construction_of(kc.regime);
  return {expectation(input_state(c, pair, 1), povm.pi1),
          expectation(input_state(c, pair, 2), povm.pi2)};
}

}  // namespace unambig
