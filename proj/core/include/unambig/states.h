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


#ifndef UNAMBIG_STATES_H_
#define UNAMBIG_STATES_H_

#include <array>
#include <cstdint>

#include "unambig/linalg.h"

namespace unambig {

/// Unit vector of dimension 2 or 3. Construction normalizes and fixes the
/// global phase so the first nonzero amplitude is real and nonnegative.
class PureState {
 public:
  PureState() = default;
  explicit PureState(CVec v);

  std::size_t dim() const { return vec_.dim(); }
  const CVec& vec() const { return vec_; }
  const cplx& operator[](std::size_t i) const { return vec_[i]; }

 private:
  CVec vec_;
};

/// Rotates the global phase so the first amplitude with modulus > 1e-14 is
/// real and nonnegative.
CVec canonical_phase(const CVec& v);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
PureState bloch_state(double theta, double phi);

/// Two discriminated states with overlap beta = |<psi1|psi2>| and the
/// preparation prior eta1 (eta2 = 1 - eta1).
struct StatePair {
  PureState psi1;
  PureState psi2;
  double beta = 0.0;
  double eta1 = 0.5;
};

/// Builds a pair, computing beta from the vectors. Throws on mismatched
/// dimensions or eta1 outside [0, 1].
StatePair make_pair(const PureState& psi1, const PureState& psi2, double eta1);

/// |<a|b>| clamped to [0, 1].
double overlap(const PureState& a, const PureState& b);

/// Haar-distributed state: iid standard complex Gaussians, normalized.
/// Deterministic in (dim, seed). Throws for dim outside {2, 3}.
PureState haar_random_state(std::size_t dim, std::uint64_t seed);

/// sin(theta/2)|0> - e^{i phi} cos(theta/2)|1> for psi written in Bloch form.
PureState orthogonal_complement_qubit(const PureState& psi);

/// Ordered qutrit basis (|0>, |1>, |2>) adapted to a pair: |0> is psi1 up to
/// a phase chosen so <0|psi2> = beta is real, |1> is the normalized part of
/// psi2 orthogonal to |0>, |2> completes the basis by Gram-Schmidt. Throws
/// std::invalid_argument for parallel states (beta = 1) or non-qutrits.
std::array<CVec, 3> qutrit_adapted_basis(const PureState& psi1,
                                         const PureState& psi2);

/// Orthonormal basis whose first vector is v (dim 2 or 3). Remaining vectors
/// come from Gram-Schmidt over the computational basis, taking at each step
/// the candidate with the largest residual (first wins ties).
std::vector<CVec> complete_basis(const CVec& v);

/// psi1 Haar-random, psi2 = beta psi1 + sqrt(1 - beta^2) chi with chi a
/// random unit vector orthogonal to psi1. Throws for beta outside [0, 1].
StatePair pair_with_overlap(std::size_t dim, double beta, double eta1,
                            std::uint64_t seed);

/// Fixed representative with overlap beta: psi1 = e0 and
/// psi2 = beta e0 + sqrt(1 - beta^2) u, u = e1 (qubit) or (e1 + e2)/sqrt2.
StatePair canonical_pair(std::size_t dim, double beta, double eta1);

}  // namespace unambig

#endif  // UNAMBIG_STATES_H_
