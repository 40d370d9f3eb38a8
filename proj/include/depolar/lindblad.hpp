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

#ifndef DEPOLAR_LINDBLAD_HPP_
#define DEPOLAR_LINDBLAD_HPP_

#include <string>
#include <utility>
#include <vector>

#include "depolar/standard_forms.hpp"
#include "depolar/twirl.hpp"

namespace depolar {

// Pauli products sigma_k1 (x) ... (x) sigma_kn for k != 0, lexicographic;
// the fixed basis of the GKS matrix.
const std::vector<ComplexMatrix> &pauli_product_basis(int qubits);
std::vector<std::string> pauli_product_labels(int qubits);

// Markovian generator Z rho = -i[H, rho] - i[H_l, rho] + dissipator(L),
// where the dissipator is sum_kl L_kl ([s_k rho, s_l] + [s_k, rho s_l])
// over the Pauli-product basis. L is Hermitian positive semidefinite,
// (4^n - 1) x (4^n - 1).
struct LindbladGenerator {
  int qubits;
  ComplexMatrix hamiltonian;  // ideal part H
  ComplexMatrix lamb_shift;   // H_l
  ComplexMatrix gks;          // L

  int dim() const { return 1 << qubits; }
  void validate() const;
};

LindbladGenerator zero_generator(int qubits);

// d^2 x d^2 superoperator acting on row-major vec(rho).
ComplexMatrix generator_superoperator(const LindbladGenerator &z);

// Choi state of exp(Z t).
ChoiState evolve(const LindbladGenerator &z, double t);

// Orthogonal change of basis O with U s_k U^dag = sum_m O_mk s_m.
ComplexMatrix pauli_change_of_basis(const ComplexMatrix &u, int qubits);

// H -> U H U^dag, H_l -> U H_l U^dag, L -> O L O^T; satisfies
// exp(Z' t) = U exp(Z t) U^dag as channels.
LindbladGenerator conjugate_generator(const LindbladGenerator &z,
                                      const ComplexMatrix &u);

LindbladGenerator average_generator(
    const std::vector<std::pair<double, LindbladGenerator>> &terms);

// Stroboscopic control: M repetitions of the pulse interleaving over the
// total time. `fractions` u_k sum to one; in sequential mode each step
// runs prod_k U_k exp(Z u_k t/M) U_k^dag, in random mode the convex
// combination sum_k u_k U_k exp(Z t/M) U_k^dag. Both converge to
// exp(Z' t) with Z' the averaged generator, at first order in 1/M.
struct PulseSchedule {
  std::vector<std::pair<double, ComplexMatrix>> segments;
  int steps;
  double total_time;

  static PulseSchedule from_twirl_set(const TwirlSet &set, int steps,
                                      double total_time);
  void validate(int dim) const;
};

enum class StroboscopicMode { kSequential, kRandom };

ChoiState stroboscopic_evolve(const LindbladGenerator &z,
                              const PulseSchedule &schedule,
                              StroboscopicMode mode);

enum class DecoherenceLevel { kPauli, kDepolarizing };

// Standard form for pure decoherence (H = 0): the Pauli level keeps the
// diagonal of L, the depolarizing level averages it to a multiple of the
// identity; the Lamb shift collapses to a global phase.
LindbladGenerator decoherence_standard_form(const LindbladGenerator &z,
                                            DecoherenceLevel level);

// Exact solution of the single-qubit Pauli-level standard form.
PauliChannelForm closed_form_pauli_channel(double l1, double l2, double l3,
                                           double t);

struct IsingStandardForm {
  LindbladGenerator generator;  // H = g' yy, Lamb shift absorbed
  double coupling;              // g'
  double time_cost;             // c_y = g / g'
};

// Averages the generator over the 32-unitary phase-gate set; requires
// H proportional to sigma_y (x) sigma_y.
IsingStandardForm ising_standard_form(const LindbladGenerator &z);

// User-supplied term-isolation decomposition
// target = c * sum_i v_i V_i source V_i^dag + Q1 (x) 1 + 1 (x) Q2.
struct SimulationDecomposition {
  double time_cost;  // c
  std::vector<std::pair<double, ComplexMatrix>> terms;
  ComplexMatrix q1, q2;  // local corrections; must vanish here

  void validate(const ComplexMatrix &source, const ComplexMatrix &target) const;
};

struct ChainResult {
  LindbladGenerator generator;  // rescaled so the ideal part is exactly H
  double time_cost;             // c_v * c_y * c_w
  double c_v, c_y, c_w;
};

// Simulate H -> H_y, depolarize with the 32-unitary set, simulate back.
// The returned generator is rescaled by the total time cost so its ideal
// part equals H exactly; the noise is amplified by the same factor. For
// two-qubit interactions the simulation legs satisfy c_v * c_w <= 3.
ChainResult arbitrary_h_chain(const LindbladGenerator &z,
                              const SimulationDecomposition &fwd,
                              const SimulationDecomposition &bwd);

// Catalog entry: single-term conjugation between sigma_a sigma_a and
// sigma_y sigma_y couplings (axis = 1 for x, 3 for z), time cost 1.
SimulationDecomposition axis_conjugation_decomposition(int axis, bool forward);

// Feasibility check for mixing with a user-supplied separable generator:
// verifies the mixed GKS matrix is proportional to the identity.
bool white_noise_generator_mix_feasible(const LindbladGenerator &z,
                                        const LindbladGenerator &separable,
                                        double weight, double tolerance = 1e-9);

}  // namespace depolar

#endif  // DEPOLAR_LINDBLAD_HPP_
