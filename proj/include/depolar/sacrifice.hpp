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

#ifndef DEPOLAR_SACRIFICE_HPP_
#define DEPOLAR_SACRIFICE_HPP_

#include <string>
#include <vector>

#include "depolar/standard_forms.hpp"
#include "depolar/twirl.hpp"

namespace depolar {

// Two-qubit isotropic coefficients in the Bell-projector decomposition
// E = E00 P0 P0 + E01 sum_j P0 Pj + E10 sum_i Pi P0 + E11 sum_ij Pi Pj.
struct IsotropicVector {
  double e00, e01, e10, e11;

  double normalization() const {
    return e00 + 3.0 * (e01 + e10 + 3.0 * e11);
  }
  double fidelity() const { return e00; }
  void validate() const;
};

struct MixingProbabilities {
  double p00, p01, p10, p11;
  double r, s, t;
};

// One stage of a designed mixing protocol: choose exactly one entry
// according to its probability, apply `pre` before the noisy operation
// and `post` after it.
struct MixingStage {
  std::string name;
  std::vector<TwirlElement> choices;
};

// Separable state mixed into a switchable noisy gate; either an
// anti-diagonal block pattern (alpha/beta entries) or a single diagonal
// Bell-product projector.
struct SeparableMixer {
  double weight;
  int block;      // parity block 0..3 in the Bell-product ordering
  bool diagonal;  // true: projector onto basis position `position`
  int position;   // 0..15, set when diagonal
  cplx alpha, beta;
};

struct SacrificeResult {
  double fidelity_before = 0.0;
  double fidelity_after = 0.0;
  double noise_ratio = 0.0;  // (1 - f') / (1 - f)
  MixingProbabilities probabilities{};
  std::vector<MixingStage> stages;
  std::vector<SeparableMixer> mixers;  // phase-gate protocol only
  double keep_probability = 1.0;       // phase-gate protocol only
  bool has_output = false;
  ChoiState output;
};

// The transfer matrix D[E] of the designed two-qubit Pauli mixing.
ComplexMatrix sacrifice_transfer_matrix(const IsotropicVector &e);

// Solves p(f') = D[E]^{-1} E'(f') for the white-noise target
// E'(f') = (f', (1-f')/9, (1-f')/9, (1-f')/27) and maximizes f' subject
// to p >= 0. Closed-form interval endpoints when r, s, t lie in (2/3, 1],
// bisection against the feasibility oracle otherwise.
SacrificeResult identity_sacrifice(const IsotropicVector &e);

// Universal SWAP twirl followed by the designed Pauli mixing in the
// crossed pairing; output is f' SWAP + (1 - f') global white noise.
SacrificeResult swap_sacrifice(const ChoiState &e);

// Three-stage protocol for a channel in the 8-parameter CNOT-type form:
// cancel the Gamma_01/Gamma_10 off-diagonals by mixing with the
// one-sided sigma_x/sigma_z images, erase the remaining |Psi_02><Psi_20|
// element with the W_A branch, then equalize the diagonal by
// weight-transfer mixes.
SacrificeResult cnot_sacrifice(const ChoiState &e);

// Requires a switchable gate: mixes the channel with block-embedded
// separable states (anti-diagonal patterns with entries in {0,+-1,+-i}
// and diagonal projectors) until only the ideal part plus global white
// noise remains.
//
// Transferring weight directly from the ideal operation (as done for the
// pi/4 gate) is not viable at small angles: cancelling an off-diagonal
// noise element of size eps via the ideal coherence cos(a) sin(a) drags
// cos^2(a) of diagonal weight along, i.e. O(eps / tan(a)) extra noise.
// Hence the switchability requirement and the separable mixers.
SacrificeResult phase_gate_sacrifice(const ChoiState &e, double alpha);

// PPT check of a 4x4 block pattern viewed as an effective two-qubit
// state; sufficient for separability at this size.
bool mixer_is_ppt(const SeparableMixer &mixer);

}  // namespace depolar

#endif  // DEPOLAR_SACRIFICE_HPP_
