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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "unambig/rng.h"

namespace unambig {

namespace {

constexpr double kPhaseCutoff = 1e-14;
constexpr std::uint64_t kHaarStream = 0x48414152;  // "HAAR"

void require_qubit_or_qutrit(std::size_t dim, const char* what) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument(std::string(what) + ": dimension " +
                                std::to_string(dim) +
                                " not supported (expected 2 or 3)");
}

// Removes the component of v along the unit vector u.
CVec project_out(CVec v, const CVec& u) {
  const cplx c = inner(u, v);
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] -= c * u[i];
  return v;
}

CVec gaussian_vector(std::size_t dim, std::uint64_t seed) {
  CounterRng rng(seed, kHaarStream);
  CVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v[i] = cplx(re, im);
  }
  return v;
}

// Fills an orthonormal prefix up to n vectors by Gram-Schmidt over the
// computational basis, picking the candidate with the largest residual.
std::vector<CVec> extend_basis(std::vector<CVec> basis, std::size_t n) {
  while (basis.size() < n) {
    CVec best;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      CVec r = CVec::basis(n, i);
      for (const CVec& b : basis) r = project_out(r, b);
      const double rn = r.norm();
      if (rn > best_norm + 1e-12) {
        best_norm = rn;
        best = r;
      }
    }
    // second pass keeps the Gram matrix at round-off
    for (const CVec& b : basis) best = project_out(best, b);
    basis.push_back(canonical_phase(best.normalized()));
  }
  return basis;
}

}  // namespace

CVec canonical_phase(const CVec& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double m = std::abs(v[i]);
    if (m > kPhaseCutoff) {
      CVec out = v;
      out *= std::conj(v[i]) / m;
      out[i] = m;
      return out;
    }
  }
  return v;
}

PureState::PureState(CVec v) {
  require_qubit_or_qutrit(v.dim(), "PureState");
  vec_ = canonical_phase(v.normalized());
}

PureState bloch_state(double theta, double phi) {
  return PureState(CVec{std::cos(theta / 2.0),
                        std::polar(std::sin(theta / 2.0), phi)});
}

double overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("overlap: dimension mismatch");
  return std::min(1.0, std::abs(inner(a.vec(), b.vec())));
}

StatePair make_pair(const PureState& psi1, const PureState& psi2, double eta1) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0))
    throw std::invalid_argument("eta1 must lie in [0, 1]");
  StatePair p;
  p.psi1 = psi1;
  p.psi2 = psi2;
  p.beta = overlap(psi1, psi2);
  p.eta1 = eta1;
  return p;
}

PureState haar_random_state(std::size_t dim, std::uint64_t seed) {
  require_qubit_or_qutrit(dim, "haar_random_state");
  for (std::uint64_t attempt = 0;; ++attempt) {
    CVec v = gaussian_vector(dim, seed + attempt * 0x9e3779b97f4a7c15ULL);
    if (v.norm() > 1e-150) return PureState(v);
  }
}

PureState orthogonal_complement_qubit(const PureState& psi) {
  if (psi.dim() != 2)
    throw std::invalid_argument("orthogonal_complement_qubit: state is not a qubit");
  const double c = std::abs(psi[0]);
  const double s = std::abs(psi[1]);
  const double half_theta = std::atan2(s, c);
  double phi = 0.0;
  if (c > kPhaseCutoff && s > kPhaseCutoff)
    phi = std::arg(psi[1]) - std::arg(psi[0]);
  return PureState(CVec{std::sin(half_theta),
                        -std::polar(std::cos(half_theta), phi)});
}

std::vector<CVec> complete_basis(const CVec& v) {
  require_qubit_or_qutrit(v.dim(), "complete_basis");
  return extend_basis({v.normalized()}, v.dim());
}

std::array<CVec, 3> qutrit_adapted_basis(const PureState& psi1,
                                         const PureState& psi2) {
  if (psi1.dim() != 3 || psi2.dim() != 3)
    throw std::invalid_argument("qutrit_adapted_basis: states must be qutrits");
  const cplx ov = inner(psi1.vec(), psi2.vec());
  const double beta = std::abs(ov);
  if (beta >= 1.0 - 1e-12)
    throw std::invalid_argument(
        "qutrit_adapted_basis: degenerate pair (beta = 1), |1> is undefined");
  CVec e0 = psi1.vec();
  if (beta > kPhaseCutoff) e0 *= ov / beta;  // now <e0|psi2> = beta
  CVec e1 = project_out(psi2.vec(), e0);
  e1 = project_out(e1, e0).normalized();
  const std::vector<CVec> full = extend_basis({e0, e1}, 3);
  return {e0, e1, full[2]};
}

StatePair pair_with_overlap(std::size_t dim, double beta, double eta1,
                            std::uint64_t seed) {
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("beta must lie in [0, 1]");
  const PureState psi1 = haar_random_state(dim, seed);
  CVec chi;
  for (std::uint64_t k = 1;; ++k) {
    chi = project_out(gaussian_vector(dim, splitmix64(seed) + k), psi1.vec());
    chi = project_out(chi, psi1.vec());
    if (chi.norm() > 1e-6) break;
  }
  chi = chi.normalized();
  CVec v = psi1.vec();
  v *= beta;
  v += std::sqrt(1.0 - beta * beta) * chi;
  StatePair p = make_pair(psi1, PureState(v), eta1);
  if (std::abs(p.beta - beta) > 1e-12)
    throw std::runtime_error("pair_with_overlap: overlap drifted");
  p.beta = beta;
  return p;
}

StatePair canonical_pair(std::size_t dim, double beta, double eta1) {
  require_qubit_or_qutrit(dim, "canonical_pair");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("beta must lie in [0, 1]");
  const double s = std::sqrt(1.0 - beta * beta);
  CVec v(dim);
  v[0] = beta;
  if (dim == 2) {
    v[1] = s;
  } else {
    v[1] = s / std::sqrt(2.0);
    v[2] = s / std::sqrt(2.0);
  }
  StatePair p = make_pair(PureState(CVec::basis(dim, 0)), PureState(v), eta1);
  p.beta = beta;
  return p;
}

}  // namespace unambig
