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

#ifndef UNAMBIG_LINALG_H_
#define UNAMBIG_LINALG_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace unambig {

using cplx = std::complex<double>;

/// Largest register space handled: three qutrit registers.
inline constexpr std::size_t kMaxDim = 27;

/// Hermiticity tolerance for operators fed to the eigen-solver.
inline constexpr double kHermitianTol = 1e-12;

/// An operator is accepted as positive semidefinite iff its smallest
/// eigenvalue is >= -kPsdTol.
inline constexpr double kPsdTol = 1e-9;

/// Dense complex column vector (a ket).
class CVec {
 public:
  CVec() = default;
  explicit CVec(std::size_t dim) : data_(dim) {}
  CVec(std::initializer_list<cplx> entries) : data_(entries) {}
  explicit CVec(std::vector<cplx> entries) : data_(std::move(entries)) {}

  /// Computational basis vector |index> of dimension `dim`.
  static CVec basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  std::span<const cplx> entries() const { return data_; }

  double norm() const;
  CVec normalized() const;

  CVec& operator+=(const CVec& other);
  CVec& operator-=(const CVec& other);
  CVec& operator*=(cplx s);

 private:
  std::vector<cplx> data_;
};

CVec operator+(CVec a, const CVec& b);
CVec operator-(CVec a, const CVec& b);
CVec operator*(cplx s, CVec v);

/// <a|b>, conjugate-linear in the first argument.
cplx inner(const CVec& a, const CVec& b);

/// Dense square complex matrix, row-major. Holds the Hermitian operators of
/// the measurement (Pi_1, Pi_2, Pi_0 and the projectors they are built from);
/// hermiticity is checked where it matters (eigen-solve, validation) rather
/// than enforced on every arithmetic step.
class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static CMat identity(std::size_t dim);
  static CMat zero(std::size_t dim) { return CMat(dim); }
  /// |v><v|
  static CMat projector(const CVec& v);
  /// |a><b|
  static CMat outer(const CVec& a, const CVec& b);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  CMat& operator+=(const CMat& other);
  CMat& operator-=(const CMat& other);
  CMat& operator*=(cplx s);

  CMat adjoint() const;
  cplx trace() const;
  /// max_{i,j} |m_ij - conj(m_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const {
    return hermiticity_defect() <= tol;
  }
  /// max_{i,j} |m_ij|
  double max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(cplx s, CMat m);
CMat operator*(const CMat& a, const CMat& b);
CVec operator*(const CMat& m, const CVec& v);

/// Kronecker products. Row-major index ordering with the leftmost factor most
/// significant: (a (x) b)[i*db + j] = a[i] * b[j]. Register A of A(x)B(x)C is
/// therefore the most significant digit of the flattened index.
CVec kron(const CVec& a, const CVec& b);
CMat kron(const CMat& a, const CMat& b);
CVec kron(std::initializer_list<CVec> factors);
CMat kron(std::initializer_list<CMat> factors);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMat vectors;                // column k is the eigenvector of values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi eigen-solver for Hermitian matrices up to kMaxDim.
/// Iterates until the off-diagonal Frobenius norm is <= 1e-12 (scaled by
/// max(1, ||m||_F)). Throws std::invalid_argument when the input is not
/// Hermitian within kHermitianTol or exceeds kMaxDim.
EigenDecomposition eigh(const CMat& m);

/// Eigenvalues only, ascending.
std::vector<double> eigvals_hermitian(const CMat& m);

/// <state|op|state>. Throws std::invalid_argument on dimension mismatch.
/// The imaginary part (round-off only for Hermitian op) is discarded.
double expectation(const CVec& state, const CMat& op);

}  // namespace unambig

#endif  // UNAMBIG_LINALG_H_
