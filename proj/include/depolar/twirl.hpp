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

#ifndef DEPOLAR_TWIRL_HPP_
#define DEPOLAR_TWIRL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "depolar/channel.hpp"

namespace depolar {

// One correlated operation: apply `pre` before the noisy channel and
// `post` after it, with the given probability. On the Choi state this
// acts as conjugation by post (x) pre^T.
struct TwirlElement {
  double probability;
  ComplexMatrix pre, post;
  std::string label;
};

// Finite list of correlated local unitaries; every depolarization
// protocol in the library is one of these. `stages` optionally factors
// the set into sequentially applied sub-twirls over disjoint or composed
// supports (the flat `elements` list is always the full product).
struct TwirlSet {
  std::string label;
  std::vector<TwirlElement> elements;
  std::vector<std::vector<TwirlElement>> stages;
  std::optional<ComplexMatrix> preserves;  // target unitary, if any

  void validate() const;
  // True when every element maps |Psi_U> to itself up to a global phase.
  bool stabilizes(const ComplexMatrix &u, double tolerance = 1e-9) const;
};

// Exact probability-weighted average; never sampled.
ChoiState twirl(const ChoiState &e, const TwirlSet &s);

// d^(2 parties) generalized Pauli pairs (U_kl^dag before, U_kl after).
TwirlSet pauli_set(int d, int parties);

// Per-party isotropic twirl. d = 2 uses the 12 unitaries Q_k sigma_i with
// Q_k = exp(i pi/4 sigma_k); other prime d use the full Pauli x Clifford
// product from the symplectic enumeration.
TwirlSet depolarizing_set(int d, int parties);

// Same construction with the enumerated Clifford group for every prime d
// (6 symplectic matrices at d = 2 instead of the reduced 3-element set).
TwirlSet clifford_depolarizing_set(int d, int parties);

// The 32 unitaries from the product set U1 * U2 * U3; stabilizes the
// phase-gate family U(alpha) for every alpha.
TwirlSet phase_gate_set();

// {identity, W_A Wtilde_B}: extends the phase-gate standard form at
// alpha = pi/4 to the 8-parameter CNOT form.
TwirlSet cnot_extension_set();

// Depolarizing construction in the crossed pairing (A,B'),(B,A') that
// stabilizes the SWAP gate.
TwirlSet swap_set(int d);

// Replaces each element W by L W L^dag on the post side and R W R^dag on
// the pre side, where L = (x) left_locals and R = (x) right_locals. Maps a
// U(pi/4)-preserving set to one preserving (x)left * U(pi/4) * (x)right.
TwirlSet conjugate_set(const TwirlSet &s,
                       const std::vector<ComplexMatrix> &left_locals,
                       const std::vector<ComplexMatrix> &right_locals);

TwirlSet custom_set(std::vector<TwirlElement> elements,
                    const std::string &label = "custom");

}  // namespace depolar

#endif  // DEPOLAR_TWIRL_HPP_
