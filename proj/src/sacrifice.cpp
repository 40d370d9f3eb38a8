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

#include "depolar/sacrifice.hpp"

#include <algorithm>
#include <cmath>

namespace depolar {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sign_of(double x) { return x >= 0.0 ? 1.0 : -1.0; }

std::vector<double> solve4(const ComplexMatrix &a, const double rhs[4]) {
  ComplexMatrix b(4, 1);
  for (int i = 0; i < 4; ++i) b(i, 0) = rhs[i];
  const ComplexMatrix x = solve_linear(a, b);
  return {x(0, 0).real(), x(1, 0).real(), x(2, 0).real(), x(3, 0).real()};
}

// Global white noise q P + (1 - q) 1/16 has equal per-projector weight
// (1 - f') / 15 in every noise class.
std::vector<double> target_vector(double fp) {
  const double w = (1.0 - fp) / 15.0;
  return {fp, w, w, w};
}

}  // namespace

void IsotropicVector::validate() const {
  if (e00 < -1e-12 || e01 < -1e-12 || e10 < -1e-12 || e11 < -1e-12) {
    throw ValidationError("negative_weight",
                          "isotropic coefficients must be nonnegative");
  }
  if (std::abs(normalization() - 1.0) > 1e-10) {
    throw ValidationError("bad_normalization",
                          "isotropic vector must satisfy N(E) = 1");
  }
}

ComplexMatrix sacrifice_transfer_matrix(const IsotropicVector &e) {
  const double e00 = e.e00, e01 = e.e01, e10 = e.e10, e11 = e.e11;
  return ComplexMatrix{
      {e00, 3 * e01, 3 * e10, 9 * e11},
      {e01, e00 + 2 * e01, 3 * e11, 3 * (e10 + 2 * e11)},
      {e10, 3 * e11, e00 + 2 * e10, 3 * (e01 + 2 * e11)},
      {e11, e10 + 2 * e11, e01 + 2 * e11, e00 + 2 * (e01 + e10 + 2 * e11)}};
}

SacrificeResult identity_sacrifice(const IsotropicVector &e) {
  e.validate();
  const double r = 1.0 - 4.0 * (e.e01 + 3.0 * e.e11);
  const double s = 1.0 - 4.0 * (e.e10 + 3.0 * e.e11);
  const double t = 1.0 - 4.0 * (e.e01 + e.e10 + 2.0 * e.e11);
  if (std::abs(r * s * t) < 1e-12) {
    throw InfeasibleError("singular_transfer",
                          "transfer matrix D[E] is singular (r s t = 0)");
  }
  const ComplexMatrix d = sacrifice_transfer_matrix(e);

  const auto probabilities_at = [&](double fp) {
    const std::vector<double> target = target_vector(fp);
    const double rhs[4] = {target[0], target[1], target[2], target[3]};
    return solve4(d, rhs);
  };
  const auto feasible = [&](double fp) {
    const auto p = probabilities_at(fp);
    return std::all_of(p.begin(), p.end(),
                       [](double v) { return v >= -1e-12; });
  };

  double f_max;
  const bool in_closed_form_region =
      r > 2.0 / 3.0 && r <= 1.0 && s > 2.0 / 3.0 && s <= 1.0 &&
      t > 2.0 / 3.0 && t <= 1.0;
  if (in_closed_form_region) {
    // p(f') is affine, p(f') = p(0) + f' (p(1) - p(0)); in this region
    // the noise-class slopes are negative, so the interval endpoint
    // -b_ij / a_ij of each constraint caps f' from above.
    const auto p0 = probabilities_at(0.0);
    const auto p1 = probabilities_at(1.0);
    f_max = 1.0;
    for (int i = 1; i < 4; ++i) {
      const double slope = p1[i] - p0[i];
      if (slope < -1e-15) f_max = std::min(f_max, -p0[i] / slope);
    }
  } else {
    // Scan for a feasible point, then bisect the upper boundary.
    double seed = -1.0;
    for (int i = 4096; i >= 0; --i) {
      const double fp = i / 4096.0;
      if (feasible(fp)) {
        seed = fp;
        break;
      }
    }
    if (seed < 0.0) {
      throw InfeasibleError("no_feasible_mixing",
                            "no f' admits nonnegative mixing probabilities");
    }
    double lo = seed, hi = std::min(1.0, seed + 1.0 / 4096.0);
    if (feasible(hi)) {
      lo = hi;
    } else {
      for (int it2 = 0; it2 < 60; ++it2) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
      }
    }
    f_max = lo;
  }

  const auto p = probabilities_at(f_max);
  if (!std::all_of(p.begin(), p.end(), [](double v) { return v >= -1e-9; })) {
    throw InfeasibleError("no_feasible_mixing",
                          "optimal f' yields negative probabilities");
  }

  SacrificeResult result;
  result.fidelity_before = e.e00;
  result.fidelity_after = f_max;
  result.noise_ratio =
      e.e00 < 1.0 ? (1.0 - f_max) / (1.0 - e.e00) : 1.0;
  result.probabilities = {std::max(0.0, p[0]), std::max(0.0, p[1]),
                          std::max(0.0, p[2]), std::max(0.0, p[3]),
                          r, s, t};
  return result;
}

namespace {

// Designed mixing element in the crossed pairing: moving the Bell label
// of pair (A,B') by sigma_i only needs the single-sided action, realized
// as sigma_i^T on qubit A before the gate; pair (B,A') likewise via
// qubit B. Nothing is applied after the gate.
TwirlElement cross_pair_pauli(int i, int j, double probability) {
  return TwirlElement{
      probability, kron(pauli(i).transpose(), pauli(j).transpose()),
      ComplexMatrix::identity(4),
      "s" + std::to_string(i) + "(A)*s" + std::to_string(j) + "(B)"};
}

}  // namespace

SacrificeResult swap_sacrifice(const ChoiState &e) {
  const double f = jamiolkowski_fidelity(e, swap_gate_matrix(2));
  if (f <= 15.0 / 16.0) {
    throw InfeasibleError("fidelity_too_low",
                          "SWAP sacrifice requires f > 15/16");
  }
  // Universal twirl first (fidelity preserving), then read the isotropic
  // vector in the crossed pairing. Extraction doubles as the span check.
  const ChoiState twirled = twirl(e, swap_set(2));
  extract_swap_form(twirled);

  const ComplexMatrix paired = to_swap_pairing(twirled.matrix, 2);
  const auto pair_weight = [&](int i, int j) {
    const ComplexMatrix v =
        kron(bell_state(2, i / 2, i % 2).amplitudes,
             bell_state(2, j / 2, j % 2).amplitudes);
    return (v.dagger() * paired * v)(0, 0).real();
  };
  // Bell labels (k,l): 00 -> psi_0; the class structure only needs the
  // (0,0) vs rest split, so average within classes.
  double w00 = pair_weight(0, 0);
  double w01 = 0.0, w10 = 0.0, w11 = 0.0;
  for (int a = 1; a < 4; ++a) {
    w01 += pair_weight(0, a) / 3.0;
    w10 += pair_weight(a, 0) / 3.0;
    for (int b = 1; b < 4; ++b) w11 += pair_weight(a, b) / 9.0;
  }
  const IsotropicVector vec{w00, w01, w10, w11};
  SacrificeResult result = identity_sacrifice(vec);

  // Realize the mixing as correlated Paulis in the crossed pairing.
  MixingStage stage;
  stage.name = "crossed-pauli-mixing";
  const auto &p = result.probabilities;
  const double probs[4] = {p.p00, p.p01, p.p10, p.p11};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double pr = probs[(i > 0 ? 2 : 0) + (j > 0 ? 1 : 0)];
      if (pr <= 1e-15) continue;
      stage.choices.push_back(cross_pair_pauli(i, j, pr));
    }
  }
  TwirlSet mixing;
  mixing.label = "swap-sacrifice";
  mixing.elements = stage.choices;
  result.stages.push_back(stage);
  result.output = twirl(twirled, mixing);
  result.has_output = true;
  result.fidelity_before = f;
  result.fidelity_after =
      jamiolkowski_fidelity(result.output, swap_gate_matrix(2));
  result.noise_ratio =
      f < 1.0 ? (1.0 - result.fidelity_after) / (1.0 - f) : 1.0;
  return result;
}

namespace {

// One-sided and two-sided elements used by the CNOT protocol, written as
// (pre, post) pairs over the physical qubits (A, B).
TwirlElement post_only(const ComplexMatrix &post_a, const ComplexMatrix &post_b,
                       double probability, const std::string &label) {
  return TwirlElement{probability, ComplexMatrix::identity(4),
                      kron(post_a, post_b), label};
}

TwirlElement sign_flip_b() {
  // sigma_z before and after on qubit B; flips the relevant off-diagonal
  // signs without touching diagonals.
  return TwirlElement{1.0, kron(ComplexMatrix::identity(2), pauli(3)),
                      kron(ComplexMatrix::identity(2), pauli(3)), "Fz(B)"};
}

ChoiState apply_elements(const ChoiState &e,
                         const std::vector<TwirlElement> &elements) {
  TwirlSet set;
  set.label = "stage";
  set.elements = elements;
  return twirl(e, set);
}

TwirlElement compose_elements(const TwirlElement &first,
                              const TwirlElement &second, double probability) {
  return TwirlElement{probability, first.pre * second.pre,
                      second.post * first.post,
                      second.label + "*" + first.label};
}

}  // namespace

SacrificeResult cnot_sacrifice(const ChoiState &e) {
  const CnotForm form = extract_cnot_form(e);
  const double f = form.f;
  SacrificeResult result;
  result.fidelity_before = f;

  const ComplexMatrix one2 = ComplexMatrix::identity(2);
  const ComplexMatrix i_sy = pauli(2) * cplx(0.0, 1.0);
  const TwirlElement identity_el{1.0, ComplexMatrix::identity(4),
                                 ComplexMatrix::identity(4), "1"};
  const TwirlElement flip = sign_flip_b();

  // --- Stage 1: cancel the Gamma_01 / Gamma_10 off-diagonal elements by
  // mixing E with its one-sided sigma_x/sigma_z images E^1 (on B) and E^2
  // (on A), sign-flipped where needed.
  const std::vector<TwirlElement> branch_b = {
      post_only(one2, pauli(1), 0.5, "Ux(B)"),
      post_only(one2, pauli(3), 0.5, "Uz(B)")};
  const std::vector<TwirlElement> branch_a = {
      post_only(pauli(1), one2, 0.5, "Ux(A)"),
      post_only(pauli(3), one2, 0.5, "Uz(A)")};

  const ComplexMatrix lam = to_bell_frame(e);
  const double w_total = lam(4, 7).real();
  const double x_total = lam(8, 11).real();

  const ChoiState e1 = apply_elements(e, branch_b);
  const ChoiState e2 = apply_elements(e, branch_a);
  const double z1 = to_bell_frame(e1)(4, 7).real();
  const double z2 = to_bell_frame(e2)(8, 11).real();

  double p1 = 0.0, p2 = 0.0;
  bool flip1 = false, flip2 = false;
  if (std::abs(w_total) > 1e-14) {
    if (std::abs(z1) < 1e-12) {
      throw InfeasibleError("fidelity_too_low",
                            "stage-1 cancellation impossible (Z vanishes)");
    }
    p1 = std::abs(w_total) / std::abs(z1);  // relative to p0 = 1
    flip1 = sign_of(w_total) == sign_of(z1);
  }
  if (std::abs(x_total) > 1e-14) {
    if (std::abs(z2) < 1e-12) {
      throw InfeasibleError("fidelity_too_low",
                            "stage-1 cancellation impossible (Z vanishes)");
    }
    p2 = std::abs(x_total) / std::abs(z2);
    flip2 = sign_of(x_total) == sign_of(z2);
  }
  const double norm1 = 1.0 + p1 + p2;
  const double p0 = 1.0 / norm1;
  p1 /= norm1;
  p2 /= norm1;

  MixingStage stage1;
  stage1.name = "off-diagonal-cancel";
  stage1.choices.push_back(
      TwirlElement{p0, identity_el.pre, identity_el.post, "1"});
  for (const auto &el : branch_b) {
    if (p1 <= 1e-15) break;
    stage1.choices.push_back(flip1
                                 ? compose_elements(el, flip, p1 * 0.5)
                                 : TwirlElement{p1 * 0.5, el.pre, el.post,
                                                el.label});
  }
  for (const auto &el : branch_a) {
    if (p2 <= 1e-15) break;
    stage1.choices.push_back(flip2
                                 ? compose_elements(el, flip, p2 * 0.5)
                                 : TwirlElement{p2 * 0.5, el.pre, el.post,
                                                el.label});
  }
  const ChoiState mixed1 = apply_elements(e, stage1.choices);

  // --- Stage 2: erase the |Psi_02><Psi_20| element with the W_A branch.
  const ComplexMatrix lam1 = to_bell_frame(mixed1);
  const double x_elem = lam1(1, 2).imag();
  MixingStage stage2;
  stage2.name = "x-element-cancel";
  ChoiState mixed2 = mixed1;
  if (std::abs(x_elem) > 1e-14) {
    const TwirlElement w_branch = post_only(i_sy, one2, 1.0, "W(A)");
    const ChoiState moved = apply_elements(mixed1, {w_branch});
    const double xb = to_bell_frame(moved)(1, 2).imag();
    if (std::abs(xb) < 1e-12) {
      throw InfeasibleError("fidelity_too_low",
                            "stage-2 cancellation impossible (Y vanishes)");
    }
    const bool flip_w = sign_of(x_elem) == sign_of(xb);
    const double p = std::abs(xb) / (std::abs(x_elem) + std::abs(xb));
    stage2.choices.push_back(
        TwirlElement{p, identity_el.pre, identity_el.post, "1"});
    stage2.choices.push_back(flip_w
                                 ? compose_elements(w_branch, flip, 1.0 - p)
                                 : TwirlElement{1.0 - p, w_branch.pre,
                                                w_branch.post, w_branch.label});
    mixed2 = apply_elements(mixed1, stage2.choices);
  } else {
    stage2.choices.push_back(identity_el);
  }

  // --- Stage 3: fold the remaining coherence into the ideal part
  // (f' = 2 Y') and equalize the diagonal via weight-transfer mixes.
  const ComplexMatrix lam2 = to_bell_frame(mixed2);
  const double f_prime = 2.0 * lam2(0, 3).imag();
  if (f_prime <= 0.0) {
    throw InfeasibleError("fidelity_too_low",
                          "no ideal weight left after cancellation stages");
  }

  // Diagonalizer {1, Ut(A)} removes all remaining coherences.
  const TwirlElement ut_a{0.5, kron(pauli(1), one2), kron(pauli(1), one2),
                          "Ut(A)"};
  const std::vector<TwirlElement> diagonalize = {
      TwirlElement{0.5, identity_el.pre, identity_el.post, "1"}, ut_a};
  const ChoiState diag_state = apply_elements(mixed2, diagonalize);

  // Weight-transfer branches: products of the one-sided Ux/Uz/W moves per
  // qubit translate the Bell labels by Pauli multiplication, i.e. by XOR
  // on the (k,l) bit codes. That turns diagonal equalization into an
  // XOR convolution, diagonal in the Walsh basis.
  // sigma label -> (k,l) bit code: 1 -> 00, X -> 01, Y -> 11, Z -> 10;
  // post_op is indexed by the bit code.
  const ComplexMatrix post_op[4] = {one2, pauli(1), pauli(3), i_sy};
  const char *post_name[4] = {"1", "X", "Z", "W"};
  const int code_of[4] = {0, 1, 3, 2};
  const ComplexMatrix lam_diag = to_bell_frame(diag_state);
  const auto &order = bell_ordering_two_qubit();
  double d_vec[16];  // diagonal indexed by XOR code (codeA * 4 + codeB)
  int pos_of_code[16];
  for (int pos = 0; pos < 16; ++pos) {
    const int code = code_of[order[pos].first] * 4 + code_of[order[pos].second];
    d_vec[code] = lam_diag(pos, pos).real();
    pos_of_code[code] = pos;
  }
  double tau1[16];  // q-linear part of the required transfer
  for (int code = 0; code < 16; ++code) {
    const int pos = pos_of_code[code];
    const double ideal_diag = (pos == 0 || pos == 3) ? 0.5 : 0.0;
    tau1[code] = f_prime * ideal_diag - f_prime / 16.0 - d_vec[code];
  }
  const auto walsh = [](const double *in, double *out) {
    for (int chi = 0; chi < 16; ++chi) {
      double sum = 0.0;
      for (int m = 0; m < 16; ++m) {
        sum += (__builtin_popcount(chi & m) % 2 ? -1.0 : 1.0) * in[m];
      }
      out[chi] = sum;
    }
  };
  double d_hat[16], tau1_hat[16];
  walsh(d_vec, d_hat);
  walsh(tau1, tau1_hat);
  // mu_m(q) = (1/16) [ (1 - q) + q sum_{chi != 0} chi(m) tau1_hat / d_hat ].
  double c_m[16];
  {
    double ratio_hat[16] = {0.0};
    for (int chi = 1; chi < 16; ++chi) {
      if (std::abs(d_hat[chi]) < 1e-13) {
        if (std::abs(tau1_hat[chi]) > 1e-10) {
          throw InfeasibleError("equalization_infeasible",
                                "diagonal equalization has no transfer along "
                                "a required direction");
        }
        continue;
      }
      ratio_hat[chi] = tau1_hat[chi] / d_hat[chi];
    }
    for (int m = 0; m < 16; ++m) {
      double sum = 0.0;
      for (int chi = 1; chi < 16; ++chi) {
        sum += (__builtin_popcount(chi & m) % 2 ? -1.0 : 1.0) * ratio_hat[chi];
      }
      c_m[m] = sum;
    }
  }
  double q = 1.0;
  for (int m = 0; m < 16; ++m) {
    // 1 + q (c_m - 1) >= 0.
    if (c_m[m] < 1.0) q = std::min(q, 1.0 / (1.0 - c_m[m]));
  }
  if (q <= 0.0) {
    throw InfeasibleError("equalization_infeasible",
                          "no coherent weight survives the equalization");
  }
  double mu[16];
  for (int m = 0; m < 16; ++m) {
    mu[m] = std::max(0.0, (1.0 + q * (c_m[m] - 1.0)) / 16.0);
  }

  MixingStage stage3;
  stage3.name = "diagonalize-equalize";
  stage3.choices.push_back(
      TwirlElement{q, identity_el.pre, identity_el.post, "1"});
  ComplexMatrix final_matrix = mixed2.matrix * cplx(q, 0.0);
  for (int m = 0; m < 16; ++m) {
    if (mu[m] <= 1e-15) continue;
    const int ma = m / 4, mb = m % 4;
    const TwirlElement branch =
        post_only(post_op[ma], post_op[mb], 1.0,
                  std::string(post_name[ma]) + "(A)*" + post_name[mb] + "(B)");
    for (const auto &dg : diagonalize) {
      stage3.choices.push_back(
          compose_elements(dg, branch, mu[m] * dg.probability));
    }
    final_matrix +=
        apply_elements(diag_state, {branch}).matrix * cplx(mu[m], 0.0);
  }
  ChoiState final_state{std::move(final_matrix), e.in_shape, e.out_shape};

  const double q_tilde = q * f_prime;
  result.fidelity_after = q_tilde + (1.0 - q_tilde) / 16.0;
  result.noise_ratio =
      f < 1.0 ? (1.0 - result.fidelity_after) / (1.0 - f) : 1.0;
  result.stages = {stage1, stage2, stage3};
  result.output = std::move(final_state);
  result.has_output = true;
  return result;
}

bool mixer_is_ppt(const SeparableMixer &mixer) {
  if (mixer.diagonal) return mixer.weight >= 0.0;
  ComplexMatrix a(4, 4);
  for (int i = 0; i < 4; ++i) a(i, i) = 0.25;
  a(0, 3) = mixer.beta * 0.25;
  a(3, 0) = std::conj(mixer.beta) * 0.25;
  a(1, 2) = mixer.alpha * 0.25;
  a(2, 1) = std::conj(mixer.alpha) * 0.25;
  const HermEig plain = herm_eig(a);
  const HermEig swapped = herm_eig(partial_transpose(a, TensorShape{2, 2}, 1));
  return plain.eigenvalues.back() >= -tol::herm &&
         swapped.eigenvalues.back() >= -tol::herm;
}

SacrificeResult phase_gate_sacrifice(const ChoiState &e, double alpha) {
  if (std::abs(std::sin(2.0 * alpha)) < 1e-9) {
    throw ValidationError("degenerate_angle",
                          "phase-gate sacrifice needs sin(2 alpha) != 0");
  }
  const PhaseGateForm form = extract_phase_gate_form(e, alpha);
  const double f = form.f;
  const double c = std::cos(alpha), s = std::sin(alpha);
  const ComplexMatrix lam = to_bell_frame(e);

  // Off-pattern pieces the mixers have to cancel, in total-state scale.
  const cplx u_res = lam(0, 3) - cplx(0.0, f * c * s);
  const cplx v_res = lam(1, 2);
  const cplx w_res = lam(4, 7);
  const cplx x_res = lam(8, 11);
  const double et_res = lam(12, 15).real();

  // Every cancellation weight is proportional to the kept probability p0;
  // K[block] collects |Re| + |Im| of the cancelled entries per block.
  const double k_block[4] = {
      std::abs(u_res.real()) + std::abs(u_res.imag()) +
          std::abs(v_res.real()) + std::abs(v_res.imag()),
      std::abs(w_res.real()) + std::abs(w_res.imag()),
      std::abs(x_res.real()) + std::abs(x_res.imag()),
      std::abs(et_res)};

  // Diagonal feasibility per position: (1 - p0 f)/16 must cover the kept
  // noise diagonal plus the mixers' in-block diagonal load.
  const double ideal_diag[16] = {c * c, 0, 0, s * s, 0, 0, 0, 0,
                                 0,     0, 0, 0,     0, 0, 0, 0};
  double p0 = 1.0;
  for (int pos = 0; pos < 16; ++pos) {
    const double noise_diag = lam(pos, pos).real() - f * ideal_diag[pos];
    const double load = f / 16.0 + noise_diag + k_block[pos / 4];
    if (load > 1e-15) p0 = std::min(p0, (1.0 / 16.0) / load);
  }
  if (p0 <= 0.0) {
    throw InfeasibleError("fidelity_too_low",
                          "no keep-probability admits the mixing");
  }

  SacrificeResult result;
  result.fidelity_before = f;
  result.keep_probability = p0;

  // Anti-diagonal mixers: one per nonvanishing real/imaginary part.
  const auto add_mixer = [&](int block, bool beta_slot, double part,
                             cplx direction) {
    if (std::abs(part) < 1e-15) return;
    SeparableMixer m{};
    m.weight = 4.0 * p0 * std::abs(part);
    m.block = block;
    m.diagonal = false;
    m.position = 0;
    const cplx entry = -sign_of(part) * direction;
    if (beta_slot) {
      m.beta = entry;
      m.alpha = block == 0 ? cplx(0.0, 0.0) : -entry;
    } else {
      m.alpha = entry;
      m.beta = block == 0 ? cplx(0.0, 0.0) : -entry;
    }
    result.mixers.push_back(m);
  };
  add_mixer(0, true, u_res.real(), 1.0);
  add_mixer(0, true, u_res.imag(), cplx(0.0, 1.0));
  add_mixer(0, false, v_res.real(), 1.0);
  add_mixer(0, false, v_res.imag(), cplx(0.0, 1.0));
  add_mixer(1, true, w_res.real(), 1.0);
  add_mixer(1, true, w_res.imag(), cplx(0.0, 1.0));
  add_mixer(2, true, x_res.real(), 1.0);
  add_mixer(2, true, x_res.imag(), cplx(0.0, 1.0));
  add_mixer(3, true, et_res, 1.0);

  // Assemble the mixed state in the Bell frame and top up the diagonal.
  const double q_tilde = p0 * f;
  ComplexMatrix final_lam = lam * cplx(p0, 0.0);
  for (const auto &m : result.mixers) {
    const int o = 4 * m.block;
    for (int i = 0; i < 4; ++i)
      final_lam(o + i, o + i) += m.weight * 0.25;
    final_lam(o + 0, o + 3) += m.weight * m.beta * 0.25;
    final_lam(o + 3, o + 0) += m.weight * std::conj(m.beta) * 0.25;
    final_lam(o + 1, o + 2) += m.weight * m.alpha * 0.25;
    final_lam(o + 2, o + 1) += m.weight * std::conj(m.alpha) * 0.25;
  }
  for (int pos = 0; pos < 16; ++pos) {
    const double target =
        q_tilde * ideal_diag[pos] + (1.0 - q_tilde) / 16.0;
    const double topup = target - final_lam(pos, pos).real();
    if (topup < -1e-9) {
      throw InfeasibleError("fidelity_too_low",
                            "diagonal overshoot in the separable mixing");
    }
    if (topup > 1e-15) {
      SeparableMixer m{};
      m.weight = topup;
      m.block = pos / 4;
      m.diagonal = true;
      m.position = pos;
      result.mixers.push_back(m);
      final_lam(pos, pos) += topup;
    }
  }
  for (const auto &m : result.mixers) {
    if (!mixer_is_ppt(m)) {
      throw InfeasibleError("mixer_not_separable",
                            "a required mixer failed its PPT check");
    }
  }

  result.fidelity_after = q_tilde + (1.0 - q_tilde) / 16.0;
  result.noise_ratio =
      f < 1.0 ? (1.0 - result.fidelity_after) / (1.0 - f) : 1.0;
  result.output = ChoiState{from_bell_frame(final_lam), TensorShape{2, 2},
                            TensorShape{2, 2}};
  result.has_output = true;
  return result;
}

}  // namespace depolar
