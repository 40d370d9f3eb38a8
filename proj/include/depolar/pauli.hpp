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

#ifndef DEPOLAR_PAULI_HPP_
#define DEPOLAR_PAULI_HPP_

#include <utility>
#include <vector>

#include "depolar/linalg.hpp"

namespace depolar {

// sigma_0 .. sigma_3 (identity, x, y, z).
const ComplexMatrix &pauli(int i);

// Generalized Pauli U_{kl}|m> = exp(i 2 pi k m / d) |m + l mod d>.
// For d = 2: U_10 = sigma_z, U_01 = sigma_x, U_11 = -i sigma_y.
ComplexMatrix gen_pauli(int d, int k, int l);

// Index pair (k, l) with dimension and phase convention baked into
// gen_pauli above.
struct GeneralizedPauli {
  int d, k, l;
  ComplexMatrix matrix() const { return gen_pauli(d, k, l); }
};

// Maximally entangled |psi_kl> = (U_kl x 1)|psi_00| as a d^2 x 1 column,
// first tensor factor the channel-output side. |psi_00> = |Phi>.
struct BellVector {
  int d, k, l;
  ComplexMatrix amplitudes;  // d^2 x 1, unit norm
};

BellVector bell_state(int d, int k, int l);

// Column vector (U x 1)|Phi_d| for a d x d matrix U.
ComplexMatrix bell_vector_of(const ComplexMatrix &u);

// Projector |Phi><Phi| on the doubled space of dimension d.
ComplexMatrix max_entangled_projector(int d);

// 2x2 matrix C_Q = [[a, b], [c, e]] over Z_d with det = 1 (mod d),
// describing the Pauli-conjugation action (k,l) -> C_Q (k,l).
struct SymplecticMap {
  int d;
  int a, b, c, e;
  bool operator==(const SymplecticMap &o) const {
    return d == o.d && a == o.a && b == o.b && c == o.c && e == o.e;
  }
};

// Full enumeration of SL(2, Z_d) with one Clifford unitary per symplectic
// matrix. Q U_10 Q^dag is proportional to U_{a c} and Q U_01 Q^dag to
// U_{b e}; the global phase of each Q is fixed by making the first nonzero
// column entry real positive. Requires prime d <= 5.
std::vector<std::pair<SymplecticMap, ComplexMatrix>> clifford_group(int d);

enum class GateKind { SWAP, CNOT, PHASE };

struct TwoQubitGate {
  GateKind kind;
  double alpha = 0.0;  // PHASE only
  ComplexMatrix matrix;
};

TwoQubitGate gate(GateKind kind, double alpha = 0.0);

ComplexMatrix swap_gate_matrix(int d = 2);
ComplexMatrix cnot_gate_matrix();
// U(alpha) = exp(-i alpha sigma_y x sigma_y).
ComplexMatrix phase_gate_matrix(double alpha);

// The fixed single-qubit unitaries with
// U_CNOT = (U1 x U2) U(pi/4) (V1 x V2).
struct CnotBridge {
  ComplexMatrix u1, u2, v1, v2;
};
const CnotBridge &cnot_bridge();

}  // namespace depolar

#endif  // DEPOLAR_PAULI_HPP_
