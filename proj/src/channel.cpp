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

#include "depolar/channel.hpp"

#include <algorithm>
#include <cmath>

namespace depolar {

TensorShape ChoiState::combined_shape() const {
  std::vector<int> factors = out_shape.factors;
  factors.insert(factors.end(), in_shape.factors.begin(),
                 in_shape.factors.end());
  return TensorShape(std::move(factors));
}

void ChoiState::validate_hermitian(double tolerance) const {
  if (matrix.rows() != d_out() * d_in() || matrix.rows() != matrix.cols()) {
    throw ValidationError("dimension_mismatch",
                          "Choi matrix dimension inconsistent with shapes");
  }
  if (!is_hermitian(matrix, tolerance)) {
    throw ValidationError("not_hermitian", "Choi matrix must be Hermitian");
  }
}

bool ChoiState::is_cp(double tolerance) const {
  const HermEig eig = herm_eig(matrix);
  return eig.eigenvalues.back() >= -tolerance;
}

bool ChoiState::is_tp(double tolerance) const {
  std::vector<int> keep;
  const int n_out = out_shape.parties();
  const int n_in = in_shape.parties();
  for (int i = 0; i < n_in; ++i) keep.push_back(n_out + i);
  const ComplexMatrix reduced =
      partial_trace(matrix, combined_shape(), keep);
  const ComplexMatrix target =
      ComplexMatrix::identity(d_in()) * cplx(1.0 / d_in(), 0.0);
  return max_abs(reduced - target) <= tolerance;
}

ChoiState choi_from_map(
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map,
    const TensorShape &in_shape, const TensorShape &out_shape) {
  const int din = in_shape.dim();
  const int dout = out_shape.dim();
  ComplexMatrix e(dout * din, dout * din);
  for (int j = 0; j < din; ++j) {
    for (int l = 0; l < din; ++l) {
      ComplexMatrix unit(din, din);
      unit(j, l) = 1.0;
      const ComplexMatrix out = map(unit);
      if (out.rows() != dout || out.cols() != dout) {
        throw ValidationError("dimension_mismatch",
                              "map output dimension mismatch");
      }
      for (int i = 0; i < dout; ++i)
        for (int k = 0; k < dout; ++k)
          e(i * din + j, k * din + l) += out(i, k) / static_cast<double>(din);
    }
  }
  return ChoiState{std::move(e), in_shape, out_shape};
}

ChoiState choi_of_unitary(const ComplexMatrix &u, const TensorShape &shape) {
  if (!is_unitary(u, 1e-8)) {
    throw ValidationError("not_unitary", "choi_of_unitary requires a unitary");
  }
  if (u.rows() != shape.dim()) {
    throw ValidationError("dimension_mismatch", "unitary/shape mismatch");
  }
  const ComplexMatrix psi = bell_vector_of(u);
  return ChoiState{psi * psi.dagger(), shape, shape};
}

ChoiState choi_from_kraus(const KrausSet &kraus, const TensorShape &in_shape,
                          const TensorShape &out_shape) {
  const int din = in_shape.dim();
  const int dout = out_shape.dim();
  ComplexMatrix e(dout * din, dout * din);
  for (const auto &k : kraus.operators) {
    if (k.rows() != dout || k.cols() != din) {
      throw ValidationError("dimension_mismatch", "Kraus operator shape");
    }
    ComplexMatrix v(dout * din, 1);
    for (int a = 0; a < dout; ++a)
      for (int b = 0; b < din; ++b) v(a * din + b, 0) = k(a, b);
    e += (v * v.dagger()) * cplx(1.0 / din, 0.0);
  }
  return ChoiState{std::move(e), in_shape, out_shape};
}

ChoiState isotropic_choi(int d, double fidelity) {
  const ComplexMatrix p = max_entangled_projector(d);
  const ComplexMatrix gamma =
      (ComplexMatrix::identity(d * d) - p) * cplx(1.0 / (d * d - 1.0), 0.0);
  return ChoiState{p * cplx(fidelity, 0.0) + gamma * cplx(1.0 - fidelity, 0.0),
                   TensorShape{d}, TensorShape{d}};
}

ComplexMatrix apply(const ChoiState &e, const ComplexMatrix &rho) {
  const int din = e.d_in();
  const int dout = e.d_out();
  if (rho.rows() != din || rho.cols() != din) {
    throw ValidationError("dimension_mismatch",
                          "input state dimension mismatch");
  }
  // Index law E_map{ik|jl} = d_in * E_{ij|kl}.
  ComplexMatrix out(dout, dout);
  for (int i = 0; i < dout; ++i)
    for (int k = 0; k < dout; ++k) {
      cplx sum = 0.0;
      for (int j = 0; j < din; ++j)
        for (int l = 0; l < din; ++l)
          sum += e.matrix(i * din + j, k * din + l) * rho(j, l);
      out(i, k) = static_cast<double>(din) * sum;
    }
  return out;
}

KrausSet kraus_from_choi(const ChoiState &e) {
  e.validate_hermitian();
  const HermEig eig = herm_eig(e.matrix);
  if (eig.eigenvalues.back() < -tol::herm) {
    throw ValidationError("not_cp",
                          "Choi matrix has a negative eigenvalue; channel is not CP");
  }
  const int din = e.d_in();
  const int dout = e.d_out();
  KrausSet set;
  for (size_t idx = 0; idx < eig.eigenvalues.size(); ++idx) {
    const double lambda = eig.eigenvalues[idx];
    if (lambda <= tol::rank) continue;
    const double w = std::sqrt(static_cast<double>(din) * lambda);
    ComplexMatrix k(dout, din);
    for (int a = 0; a < dout; ++a)
      for (int b = 0; b < din; ++b)
        k(a, b) = w * eig.eigenvectors(a * din + b, static_cast<int>(idx));
    set.operators.push_back(std::move(k));
  }
  return set;
}

ChoiState sandwich(const ChoiState &e, const ComplexMatrix &b_out,
                   const ComplexMatrix &c_out, const ComplexMatrix &b_in,
                   const ComplexMatrix &c_in) {
  if (b_out.cols() != e.d_out() || c_out.rows() != e.d_out() ||
      b_in.cols() != e.d_in() || c_in.rows() != e.d_in()) {
    throw ValidationError("dimension_mismatch", "sandwich operand shapes");
  }
  return ChoiState{kron(b_out, b_in) * e.matrix * kron(c_out, c_in),
                   e.in_shape, e.out_shape, e.trace_one};
}

double state_fidelity(const ChoiState &e, const ComplexMatrix &psi) {
  if (psi.rows() != e.matrix.rows() || psi.cols() != 1) {
    throw ValidationError("dimension_mismatch", "fidelity vector shape");
  }
  const ComplexMatrix val = psi.dagger() * e.matrix * psi;
  return val(0, 0).real();
}

double jamiolkowski_fidelity(const ChoiState &e, const ComplexMatrix &u) {
  if (!is_unitary(u, 1e-8)) {
    throw ValidationError("not_unitary",
                          "jamiolkowski_fidelity requires a unitary target");
  }
  if (u.rows() != e.d_out() || u.cols() != e.d_in()) {
    throw ValidationError("dimension_mismatch", "target unitary shape");
  }
  return state_fidelity(e, bell_vector_of(u));
}

double average_fidelity(double jamiolkowski, int d) {
  return (jamiolkowski * d + 1.0) / (d + 1.0);
}

double trace_distance(const ChoiState &e, const ChoiState &f) {
  if (e.matrix.rows() != f.matrix.rows()) {
    throw ValidationError("dimension_mismatch", "trace_distance shapes differ");
  }
  const HermEig eig = herm_eig(e.matrix - f.matrix);
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) sum += std::abs(lambda);
  return 0.5 * sum;
}

namespace {

// Whether the state lies in span{P_Phi, 1} within tol::form.
bool isotropic_form_fidelity(const ChoiState &e, double *fidelity) {
  const int d = e.d_in();
  if (e.d_out() != d) return false;
  const ComplexMatrix p = max_entangled_projector(d);
  const double f = state_fidelity(e, bell_vector_of(ComplexMatrix::identity(d)));
  const ComplexMatrix gamma =
      (ComplexMatrix::identity(d * d) - p) * cplx(1.0 / (d * d - 1.0), 0.0);
  const ComplexMatrix residual =
      e.matrix - p * cplx(f, 0.0) - gamma * cplx(1.0 - f, 0.0);
  if (max_abs(residual) > tol::form) return false;
  *fidelity = f;
  return true;
}

}  // namespace

bool is_entanglement_breaking(const ChoiState &e) {
  e.validate_hermitian();
  double f = 0.0;
  if (isotropic_form_fidelity(e, &f)) {
    return f <= 1.0 / e.d_in() + 1e-12;
  }
  if (e.d_in() == 2 && e.d_out() == 2) {
    const ComplexMatrix pt =
        partial_transpose(e.matrix, TensorShape{2, 2}, 1);
    const HermEig eig = herm_eig(pt);
    return eig.eigenvalues.back() >= -tol::herm;
  }
  throw ValidationError(
      "unsupported_shape",
      "entanglement-breaking test covers isotropic states and two-qubit Choi "
      "states (PPT) only");
}

Purification purify(const ChoiState &e) {
  e.validate_hermitian();
  if (!e.is_tp()) {
    throw ValidationError("not_tp", "purify requires a trace-preserving channel");
  }
  const KrausSet kraus = kraus_from_choi(e);
  const int din = e.d_in();
  const int dout = e.d_out();
  if (din != dout) {
    throw ValidationError("unsupported_shape",
                          "purify implemented for equal in/out dimensions");
  }
  const int env = std::max<int>(1, static_cast<int>(kraus.operators.size()));
  const int total = din * env;
  // Stinespring columns for environment input |0>: U(|phi> (x) |0>) =
  // sum_k K_k|phi> (x) |k>; remaining columns completed by Gram-Schmidt.
  ComplexMatrix u(total, total);
  for (int j = 0; j < din; ++j) {
    for (size_t k = 0; k < kraus.operators.size(); ++k) {
      for (int i = 0; i < dout; ++i) {
        u(i * env + static_cast<int>(k), j * env + 0) =
            kraus.operators[k](i, j);
      }
    }
  }
  // Gram-Schmidt over the remaining columns, seeded with unit vectors.
  std::vector<int> filled;
  for (int j = 0; j < din; ++j) filled.push_back(j * env);
  int seed = 0;
  for (int col = 0; col < total; ++col) {
    if (col % env == 0) continue;
    bool ok = false;
    while (!ok && seed < 4 * total) {
      ComplexMatrix v(total, 1);
      v(seed % total, 0) = 1.0;
      seed++;
      for (int j : filled) {
        cplx overlap = 0.0;
        for (int i = 0; i < total; ++i) overlap += std::conj(u(i, j)) * v(i, 0);
        for (int i = 0; i < total; ++i) v(i, 0) -= overlap * u(i, j);
      }
      double norm = 0.0;
      for (int i = 0; i < total; ++i) norm += std::norm(v(i, 0));
      if (norm > 1e-6) {
        norm = std::sqrt(norm);
        for (int i = 0; i < total; ++i) u(i, col) = v(i, 0) / norm;
        filled.push_back(col);
        ok = true;
      }
    }
    if (!ok) {
      throw ValidationError("internal_error", "purification completion failed");
    }
  }
  return Purification{std::move(u), env};
}

cplx hilbert_schmidt_inner(const ChoiState &e, const ChoiState &f) {
  if (e.matrix.rows() != f.matrix.rows()) {
    throw ValidationError("dimension_mismatch", "inner product shapes differ");
  }
  return (e.matrix.dagger() * f.matrix).trace();
}

}  // namespace depolar
