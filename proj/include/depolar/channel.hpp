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

#ifndef DEPOLAR_CHANNEL_HPP_
#define DEPOLAR_CHANNEL_HPP_

#include <functional>
#include <vector>

#include "depolar/linalg.hpp"
#include "depolar/pauli.hpp"

namespace depolar {

// Choi state of a completely positive map, stored trace-one over
// H_out (x) H_in: row index = i_out * d_in + j_in. For a map given by
// Kraus operators, E = (1/d_in) sum_{jl} E(|j><l|) (x) |j><l|, so the
// map action recovers as E(rho)_{ik} = d_in * sum_{jl} E_{ij|kl} rho_{jl}.
struct ChoiState {
  ComplexMatrix matrix;
  TensorShape in_shape, out_shape;
  bool trace_one = true;

  int d_in() const { return in_shape.dim(); }
  int d_out() const { return out_shape.dim(); }

  // Combined shape (out parties then in parties) of the Choi matrix.
  TensorShape combined_shape() const;

  void validate_hermitian(double tolerance = tol::herm) const;
  bool is_cp(double tolerance = tol::herm) const;
  bool is_tp(double tolerance = tol::herm) const;
};

struct KrausSet {
  std::vector<ComplexMatrix> operators;
};

// Stinespring dilation with the environment starting in |0><0|. The
// unitary acts on system (x) environment; env_dim <= d_in * d_out.
struct Purification {
  ComplexMatrix unitary;
  int env_dim;
};

// Builds the Choi state from an arbitrary linear map action, realizing
// E = (map (x) Id)(P_Phi).
ChoiState choi_from_map(
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map,
    const TensorShape &in_shape, const TensorShape &out_shape);

ChoiState choi_of_unitary(const ComplexMatrix &u, const TensorShape &shape);
ChoiState choi_from_kraus(const KrausSet &kraus, const TensorShape &in_shape,
                          const TensorShape &out_shape);

// Single-parameter isotropic state f * P_Phi + (1 - f) * (1 - P_Phi)/(d^2-1)
// as a Choi state (identity ideal part).
ChoiState isotropic_choi(int d, double fidelity);

ComplexMatrix apply(const ChoiState &e, const ComplexMatrix &rho);

KrausSet kraus_from_choi(const ChoiState &e);

// E' = (b_out (x) b_in) E (c_out (x) c_in); the transformed map is
// rho -> b_out E(b_in^T rho c_in^T) c_out.
ChoiState sandwich(const ChoiState &e, const ComplexMatrix &b_out,
                   const ComplexMatrix &c_out, const ComplexMatrix &b_in,
                   const ComplexMatrix &c_in);

double jamiolkowski_fidelity(const ChoiState &e, const ComplexMatrix &u);
// <Psi|E|Psi> for an explicit Choi-space vector.
double state_fidelity(const ChoiState &e, const ComplexMatrix &psi);
// F_bar = (f d + 1) / (d + 1).
double average_fidelity(double jamiolkowski, int d);

double trace_distance(const ChoiState &e, const ChoiState &f);

// Isotropic states: separable iff f <= 1/d (boundary inclusive). Two-qubit
// Choi states: PPT across (out, in), which is sufficient for separability
// at 2x2. Other shapes are unsupported.
bool is_entanglement_breaking(const ChoiState &e);

Purification purify(const ChoiState &e);

// <E, F> = tr E^dag F; isometric to the map-side inner product.
cplx hilbert_schmidt_inner(const ChoiState &e, const ChoiState &f);

}  // namespace depolar

#endif  // DEPOLAR_CHANNEL_HPP_
