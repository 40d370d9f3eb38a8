// Copyright 2026 The depolar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "depolar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace depolar {

namespace {

void check_finite(const std::vector<cplx> &entries) {
  for (const auto &z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("non_finite_entry",
                            "matrix entries must be finite (no NaN/Inf)");
    }
  }
}

void check_same_shape(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("dimension_mismatch", "matrix shapes differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != static_cast<size_t>(rows) * cols) {
    throw ValidationError("dimension_mismatch",
                          "entry count does not match rows x cols");
  }
  check_finite(data_);
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto &r : rows) {
    if (static_cast<int>(r.size()) != cols_) {
      throw ValidationError("dimension_mismatch", "ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  check_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &o) const {
  check_same_shape(*this, o);
  ComplexMatrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &o) const {
  check_same_shape(*this, o);
  ComplexMatrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
  check_same_shape(*this, o);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
  check_same_shape(*this, o);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
  for (auto &z : data_) z *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix r = *this;
  r *= s;
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &o) const {
  if (cols_ != o.rows_) {
    throw ValidationError("dimension_mismatch", "matrix product shapes differ");
  }
  ComplexMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  }
  return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r = *this;
  for (auto &z : r.data_) z = std::conj(z);
  return r;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

TensorShape::TensorShape(std::initializer_list<int> f) : factors(f) {
  for (int d : factors) {
    if (d < 2) throw ValidationError("bad_shape", "tensor factors must be >= 2");
  }
}

TensorShape::TensorShape(std::vector<int> f) : factors(std::move(f)) {
  for (int d : factors) {
    if (d < 2) throw ValidationError("bad_shape", "tensor factors must be >= 2");
  }
}

int TensorShape::dim() const {
  int d = 1;
  for (int f : factors) d *= f;
  return d;
}

double frobenius_norm(const ComplexMatrix &m) {
  double s = 0.0;
  for (const auto &z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix &m) {
  double s = 0.0;
  for (const auto &z : m.data()) s = std::max(s, std::abs(z));
  return s;
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                  double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tolerance;
}

bool is_hermitian(const ComplexMatrix &m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.dagger()) <= tolerance;
}

bool is_unitary(const ComplexMatrix &m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.dagger() * m - ComplexMatrix::identity(m.cols())) <=
         tolerance;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

namespace {

void check_square_shape(const ComplexMatrix &m, const TensorShape &shape) {
  if (m.rows() != m.cols() || m.rows() != shape.dim()) {
    throw ValidationError("dimension_mismatch",
                          "tensor shape inconsistent with matrix dimension");
  }
}

// Decomposes a flat index into per-factor digits (most significant first).
void to_digits(int index, const std::vector<int> &dims, std::vector<int> *out) {
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    (*out)[i] = index % dims[i];
    index /= dims[i];
  }
}

int from_digits(const std::vector<int> &digits, const std::vector<int> &dims) {
  int index = 0;
  for (size_t i = 0; i < dims.size(); ++i) index = index * dims[i] + digits[i];
  return index;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix &m, const TensorShape &shape,
                            const std::vector<int> &keep) {
  check_square_shape(m, shape);
  const int n = shape.parties();
  std::vector<int> drop;
  for (int i = 0; i < n; ++i) {
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) drop.push_back(i);
  }
  for (int k : keep) {
    if (k < 0 || k >= n)
      throw ValidationError("bad_subsystem", "keep index out of range");
  }
  std::vector<int> keep_dims, drop_dims;
  for (int k : keep) keep_dims.push_back(shape.factors[k]);
  for (int k : drop) drop_dims.push_back(shape.factors[k]);
  const int dk = std::accumulate(keep_dims.begin(), keep_dims.end(), 1,
                                 std::multiplies<int>());
  const int dd = std::accumulate(drop_dims.begin(), drop_dims.end(), 1,
                                 std::multiplies<int>());

  ComplexMatrix r(dk, dk);
  std::vector<int> row(n), col(n), kr(keep.size()), kc(keep.size()),
      dr(drop.size());
  for (int a = 0; a < dk; ++a) {
    to_digits(a, keep_dims, &kr);
    for (int b = 0; b < dk; ++b) {
      to_digits(b, keep_dims, &kc);
      cplx sum = 0.0;
      for (int t = 0; t < dd; ++t) {
        to_digits(t, drop_dims, &dr);
        for (size_t i = 0; i < keep.size(); ++i) {
          row[keep[i]] = kr[i];
          col[keep[i]] = kc[i];
        }
        for (size_t i = 0; i < drop.size(); ++i) {
          row[drop[i]] = dr[i];
          col[drop[i]] = dr[i];
        }
        sum += m(from_digits(row, shape.factors), from_digits(col, shape.factors));
      }
      r(a, b) = sum;
    }
  }
  return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m,
                                const TensorShape &shape, int subsystem) {
  check_square_shape(m, shape);
  if (subsystem < 0 || subsystem >= shape.parties()) {
    throw ValidationError("bad_subsystem", "subsystem index out of range");
  }
  const int d = shape.dim();
  ComplexMatrix r(d, d);
  const int n = shape.parties();
  std::vector<int> row(n), col(n);
  for (int a = 0; a < d; ++a) {
    to_digits(a, shape.factors, &row);
    for (int b = 0; b < d; ++b) {
      to_digits(b, shape.factors, &col);
      std::swap(row[subsystem], col[subsystem]);
      r(from_digits(row, shape.factors), from_digits(col, shape.factors)) =
          m(a, b);
      std::swap(row[subsystem], col[subsystem]);
    }
  }
  return r;
}

ComplexMatrix permute_systems(const ComplexMatrix &m, const TensorShape &shape,
                              const std::vector<int> &perm) {
  check_square_shape(m, shape);
  const int n = shape.parties();
  if (static_cast<int>(perm.size()) != n) {
    throw ValidationError("bad_permutation", "permutation length mismatch");
  }
  std::vector<int> new_dims(n);
  for (int i = 0; i < n; ++i) new_dims[i] = shape.factors[perm[i]];
  const int d = shape.dim();
  ComplexMatrix r(d, d);
  std::vector<int> row(n), col(n), prow(n), pcol(n);
  for (int a = 0; a < d; ++a) {
    to_digits(a, shape.factors, &row);
    for (int b = 0; b < d; ++b) {
      to_digits(b, shape.factors, &col);
      for (int i = 0; i < n; ++i) {
        prow[i] = row[perm[i]];
        pcol[i] = col[perm[i]];
      }
      r(from_digits(prow, new_dims), from_digits(pcol, new_dims)) = m(a, b);
    }
  }
  return r;
}

HermEig herm_eig(const ComplexMatrix &m) {
  if (!is_hermitian(m, tol::herm)) {
    throw ValidationError("not_hermitian",
                          "herm_eig requires a Hermitian matrix");
  }
  const int n = m.rows();
  // Work on the exactly Hermitian average to keep the iteration clean.
  ComplexMatrix a = (m + m.dagger()) * cplx(0.5, 0.0);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, max_abs(a));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-18 * scale) continue;
        const cplx phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary rotation R: R(p,p)=c, R(p,q)=s*phase, R(q,p)=-s*conj(phase),
        // R(q,q)=c; a <- R^dagger a R, v <- v R.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

  HermEig result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    result.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) result.eigenvectors(i, j) = v(i, order[j]);
  }
  return result;
}

ComplexMatrix mat_exp(const ComplexMatrix &m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("dimension_mismatch", "mat_exp requires square input");
  }
  const int n = m.rows();
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(m(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double s = norm;
  while (s > 0.5) {
    s *= 0.5;
    ++squarings;
  }
  ComplexMatrix x = m * cplx(std::ldexp(1.0, -squarings), 0.0);

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = term * x;
    term *= cplx(1.0 / k, 0.0);
    result += term;
    if (max_abs(term) < 1e-18) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

ComplexMatrix solve_linear(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) {
    throw ValidationError("dimension_mismatch", "solve_linear shapes differ");
  }
  const int n = a.rows();
  const int m = b.cols();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > best) {
        best = std::abs(lu(r, col));
        pivot = r;
      }
    }
    if (best < 1e-14) {
      throw ValidationError("singular_matrix", "singular linear system");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      for (int j = 0; j < m; ++j) std::swap(x(col, j), x(pivot, j));
    }
    for (int r = col + 1; r < n; ++r) {
      const cplx factor = lu(r, col) / lu(col, col);
      if (factor == cplx(0.0, 0.0)) continue;
      for (int j = col; j < n; ++j) lu(r, j) -= factor * lu(col, j);
      for (int j = 0; j < m; ++j) x(r, j) -= factor * x(col, j);
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int j = 0; j < m; ++j) {
      cplx sum = x(col, j);
      for (int k = col + 1; k < n; ++k) sum -= lu(col, k) * x(k, j);
      x(col, j) = sum / lu(col, col);
    }
  }
  return x;
}

ComplexMatrix inverse(const ComplexMatrix &a) {
  return solve_linear(a, ComplexMatrix::identity(a.rows()));
}

}  // namespace depolar
