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

#ifndef DEPOLAR_LINALG_HPP_
#define DEPOLAR_LINALG_HPP_

#include <complex>
#include <initializer_list>
#include <vector>

#include "depolar/errors.hpp"

namespace depolar {

using cplx = std::complex<double>;

// Tolerances shared by all modules. `herm` guards input validation,
// `eig` is the solver residual, `rank` the Kraus-extraction cutoff and
// `form` the pattern-check tolerance for twirled states.
namespace tol {
inline constexpr double herm = 1e-9;
inline constexpr double eig = 1e-10;
inline constexpr double rank = 1e-10;
inline constexpr double form = 1e-8;
}  // namespace tol

// Dense complex matrix, row-major. The universal numeric carrier of the
// library; all Hilbert spaces here have dimension <= 16 so nothing is
// tuned for size.
class ComplexMatrix {
public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  // Validates that every entry is finite.
  ComplexMatrix(int rows, int cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int rows, int cols) {
    return ComplexMatrix(rows, cols);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  cplx &operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx &operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<cplx> &data() const { return data_; }
  std::vector<cplx> &data() { return data_; }

  ComplexMatrix operator+(const ComplexMatrix &o) const;
  ComplexMatrix operator-(const ComplexMatrix &o) const;
  ComplexMatrix operator*(const ComplexMatrix &o) const;
  ComplexMatrix operator*(cplx s) const;
  ComplexMatrix &operator+=(const ComplexMatrix &o);
  ComplexMatrix &operator-=(const ComplexMatrix &o);
  ComplexMatrix &operator*=(cplx s);

  ComplexMatrix dagger() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

private:
  int rows_, cols_;
  std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix &m) { return m * s; }

// Ordered list of subsystem dimensions annotating one side of a matrix.
struct TensorShape {
  std::vector<int> factors;

  TensorShape() = default;
  TensorShape(std::initializer_list<int> f);
  explicit TensorShape(std::vector<int> f);

  int dim() const;
  int parties() const { return static_cast<int>(factors.size()); }
  bool operator==(const TensorShape &o) const { return factors == o.factors; }
};

double frobenius_norm(const ComplexMatrix &m);
double max_abs(const ComplexMatrix &m);
bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                  double tolerance);
bool is_hermitian(const ComplexMatrix &m, double tolerance = tol::herm);
bool is_unitary(const ComplexMatrix &m, double tolerance = tol::eig);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

// Trace over the complement of `keep` (subsystem indices into `shape`,
// strictly increasing). `m` must be square with dimension shape.dim().
ComplexMatrix partial_trace(const ComplexMatrix &m, const TensorShape &shape,
                            const std::vector<int> &keep);

// Transposes the single tensor factor `subsystem`; involutive.
ComplexMatrix partial_transpose(const ComplexMatrix &m,
                                const TensorShape &shape, int subsystem);

// Reorders tensor factors on both sides: new factor i is old factor perm[i].
ComplexMatrix permute_systems(const ComplexMatrix &m, const TensorShape &shape,
                              const std::vector<int> &perm);

struct HermEig {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

// Cyclic Jacobi on a Hermitian matrix. Rejects inputs that are not
// Hermitian within tol::herm.
HermEig herm_eig(const ComplexMatrix &m);

// Scaling-and-squaring with a Taylor kernel; plenty at these dimensions
// and norms.
ComplexMatrix mat_exp(const ComplexMatrix &m);

// Gaussian elimination with partial pivoting; b may have several columns.
ComplexMatrix solve_linear(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix inverse(const ComplexMatrix &a);

}  // namespace depolar

#endif  // DEPOLAR_LINALG_HPP_
