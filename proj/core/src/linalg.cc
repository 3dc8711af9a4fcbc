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

#include "unambig/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unambig {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CVec

CVec CVec::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("CVec::basis: index >= dim");
  CVec v(dim);
  v[index] = 1.0;
  return v;
}

double CVec::norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

CVec CVec::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("CVec::normalized: zero vector");
  CVec out = *this;
  out *= 1.0 / n;
  return out;
}

CVec& CVec::operator+=(const CVec& other) {
  require_same_dim(dim(), other.dim(), "CVec::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVec& CVec::operator-=(const CVec& other) {
  require_same_dim(dim(), other.dim(), "CVec::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVec& CVec::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

CVec operator+(CVec a, const CVec& b) { return a += b; }
CVec operator-(CVec a, const CVec& b) { return a -= b; }
CVec operator*(cplx s, CVec v) { return v *= s; }

cplx inner(const CVec& a, const CVec& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// CMat

CMat CMat::identity(std::size_t dim) {
  CMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::projector(const CVec& v) { return outer(v, v); }

CMat CMat::outer(const CVec& a, const CVec& b) {
  require_same_dim(a.dim(), b.dim(), "CMat::outer");
  CMat m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

CMat& CMat::operator+=(const CMat& other) {
  require_same_dim(dim_, other.dim_, "CMat::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& other) {
  require_same_dim(dim_, other.dim_, "CMat::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

CMat CMat::adjoint() const {
  CMat out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx CMat::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst,
                       std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

double CMat::max_abs() const {
  double worst = 0.0;
  for (const cplx& z : data_) worst = std::max(worst, std::abs(z));
  return worst;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator*(cplx s, CMat m) { return m *= s; }

CMat operator*(const CMat& a, const CMat& b) {
  require_same_dim(a.dim(), b.dim(), "CMat::operator*");
  const std::size_t n = a.dim();
  CMat out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

CVec operator*(const CMat& m, const CVec& v) {
  require_same_dim(m.dim(), v.dim(), "CMat*CVec");
  CVec out(v.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kronecker products

CVec kron(const CVec& a, const CVec& b) {
  CVec out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

CMat kron(const CMat& a, const CMat& b) {
  const std::size_t da = a.dim(), db = b.dim();
  CMat out(da * db);
  for (std::size_t ar = 0; ar < da; ++ar)
    for (std::size_t ac = 0; ac < da; ++ac) {
      const cplx s = a(ar, ac);
      if (s == 0.0) continue;
      for (std::size_t br = 0; br < db; ++br)
        for (std::size_t bc = 0; bc < db; ++bc)
          out(ar * db + br, ac * db + bc) = s * b(br, bc);
    }
  return out;
}

CVec kron(std::initializer_list<CVec> factors) {
  if (factors.size() == 0) throw std::invalid_argument("kron: no factors");
  auto it = factors.begin();
  CVec out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

CMat kron(std::initializer_list<CMat> factors) {
  if (factors.size() == 0) throw std::invalid_argument("kron: no factors");
  auto it = factors.begin();
  CMat out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

// ---------------------------------------------------------------------------
// Eigen-solver

namespace {

double off_diagonal_norm(const CMat& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double frobenius_norm(const CMat& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One two-sided rotation zeroing a(p,q). A phase on column q first makes
// a(p,q) real and positive, then a real Givens rotation finishes the job.
void rotate(CMat& a, CMat& w, std::size_t p, std::size_t q) {
  const std::size_t n = a.dim();
  const double r = std::abs(a(p, q));
  if (r == 0.0) return;
  const cplx phase = a(p, q) / r;  // e^{i phi}
  const cplx phase_conj = std::conj(phase);
  for (std::size_t k = 0; k < n; ++k) {
    if (k != q) {
      a(q, k) *= phase;
      a(k, q) *= phase_conj;
    }
    w(k, q) *= phase_conj;
  }

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const cplx wkp = w(k, p);
    const cplx wkq = w(k, q);
    w(k, p) = c * wkp - s * wkq;
    w(k, q) = s * wkp + c * wkq;
  }
}

}  // namespace

EigenDecomposition eigh(const CMat& m) {
  const std::size_t n = m.dim();
  if (n == 0) throw std::invalid_argument("eigh: empty matrix");
  if (n > kMaxDim)
    throw std::invalid_argument("eigh: dimension " + std::to_string(n) +
                                " exceeds " + std::to_string(kMaxDim));
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol)
    throw std::invalid_argument("eigh: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");

  CMat a = m;
  // Symmetrize away sub-tolerance asymmetry so the rotations stay exact.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  CMat w = CMat::identity(n);
  const double tol = 1e-12 * std::max(1.0, frobenius_norm(a));

  int sweeps = 0;
  constexpr int kMaxSweeps = 100;
  while (off_diagonal_norm(a) > tol) {
    if (sweeps == kMaxSweeps)
      throw std::runtime_error("eigh: Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, w, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = CMat(n);
  out.sweeps = sweeps;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = w(r, order[k]);
  }
  return out;
}

std::vector<double> eigvals_hermitian(const CMat& m) { return eigh(m).values; }

double expectation(const CVec& state, const CMat& op) {
  require_same_dim(state.dim(), op.dim(), "expectation");
  return inner(state, op * state).real();
}

}  // namespace unambig
