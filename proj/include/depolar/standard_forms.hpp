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

#ifndef DEPOLAR_STANDARD_FORMS_HPP_
#define DEPOLAR_STANDARD_FORMS_HPP_

#include <array>
#include <string>
#include <vector>

#include "depolar/channel.hpp"

namespace depolar {

// ---------------------------------------------------------------------------
// Bell-product frames

// Two-qubit Bell-product ordering: the 16 pairs (i, j) labelling
// |Psi_ij> = |psi_i>_A (x) |psi_j>_B, grouped by parity blocks
// Gamma_00, Gamma_01, Gamma_10, Gamma_11.
const std::vector<std::pair<int, int>> &bell_ordering_two_qubit();

// Unitary whose columns are the |Psi_ij> vectors in that order.
const ComplexMatrix &bell_product_transform();

// T^dag E T for a two-qubit Choi state.
ComplexMatrix to_bell_frame(const ChoiState &e);
ComplexMatrix from_bell_frame(const ComplexMatrix &lambda);

// Reorders a two-qubit Choi matrix from (A',B',A,B) into the crossed
// pairing (B',A),(A',B) used by everything SWAP-related.
ComplexMatrix to_swap_pairing(const ComplexMatrix &choi, int d);
ComplexMatrix from_swap_pairing(const ComplexMatrix &paired, int d);

// ---------------------------------------------------------------------------
// Forms

struct PauliChannelForm {
  int d, parties;
  // Indexed by the per-party pairs (k_p, l_p), party-major lexicographic.
  std::vector<double> weights;
};

struct WhiteNoiseForm {
  int d, parties;
  // alpha_k for k in {0,1}^N (bit 0 = leading party), expansion in the
  // dual basis of (P_Phi, 1/d^2) per party. Entries may be negative.
  std::vector<double> alphas;
};

// Noise-part coefficients of Eq.-style phase-gate standard form; the
// stored block entries describe the trace-one noise operator and vanish
// for a noiseless gate.
struct PhaseGateForm {
  double alpha, f;
  double a, a_t, b, b_t;
  cplx u, v;
  double c, c_t;
  cplx w;
  double d, d_t;
  cplx x;
  double e, e_t;
};

struct CnotForm {
  double f;
  double a, b, u, v, c, w, d, x, e;
};

struct SwapForm {
  double f;
  std::array<double, 4> alphas;  // crossed-pairing white-noise coefficients
};

// ---------------------------------------------------------------------------
// Extraction (pattern-checked within tol::form) and reconstruction.

PauliChannelForm extract_pauli_channel(const ChoiState &e);
ChoiState reconstruct_pauli_channel(const PauliChannelForm &form);

WhiteNoiseForm extract_white_noise(const ChoiState &e);
ChoiState reconstruct_white_noise(const WhiteNoiseForm &form);

PhaseGateForm extract_phase_gate_form(const ChoiState &e, double alpha);
ChoiState reconstruct_phase_gate_form(const PhaseGateForm &form);

CnotForm extract_cnot_form(const ChoiState &e);
ChoiState reconstruct_cnot_form(const CnotForm &form);

SwapForm extract_swap_form(const ChoiState &e);
ChoiState reconstruct_swap_form(const SwapForm &form);

// Residual of e outside the phase-gate block pattern (block-diagonal
// zeros plus the in-block equalities); used by pattern checks and the
// Lindblad standard-form verification.
double phase_gate_pattern_residual(const ComplexMatrix &bell_frame);

}  // namespace depolar

#endif  // DEPOLAR_STANDARD_FORMS_HPP_
