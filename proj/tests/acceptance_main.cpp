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
//
// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "depolar/json_io.hpp"
#include "depolar/lindblad.hpp"
#include "depolar/sacrifice.hpp"
#include "../tests/support.hpp"

using namespace depolar;
using namespace depolar::test;

namespace {

constexpr double kPi = 3.14159265358979323846;
int failures = 0;

void report(int criterion, const std::string &name, bool pass,
            const std::string &detail) {
  std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

ComplexMatrix matrix_unit(int d, int j, int l) {
  ComplexMatrix m(d, d);
  m(j, l) = 1.0;
  return m;
}

// --- 1 ----------------------------------------------------------------
void criterion_isomorphism() {
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = trial % 2 == 0 ? 2 : 3;
    const KrausSet kraus = random_tp_kraus(d, 2 + trial % 3);
    const auto action = [&](const ComplexMatrix &rho) {
      return kraus_action(kraus, rho);
    };
    const ChoiState from_map =
        choi_from_map(action, TensorShape{d}, TensorShape{d});
    const ChoiState from_kraus =
        choi_from_kraus(kraus, TensorShape{d}, TensorShape{d});
    worst = std::max(worst, max_abs(from_map.matrix - from_kraus.matrix));
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        const ComplexMatrix unit = matrix_unit(d, j, l);
        worst = std::max(
            worst, max_abs(apply(from_map, unit) - kraus_action(kraus, unit)));
      }
    // Inverse direction: Kraus extracted from the Choi act identically.
    const KrausSet back = kraus_from_choi(from_map);
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        const ComplexMatrix unit = matrix_unit(d, j, l);
        worst = std::max(worst, max_abs(kraus_action(back, unit) -
                                        kraus_action(kraus, unit)));
      }
  }
  report(1, "isomorphism round trip", worst < 1e-10,
         "worst residual " + format_double(worst));
}

// --- 2 ----------------------------------------------------------------
void criterion_pauli_twirl() {
  double worst_diag = 0.0, worst_off = 0.0, worst_fid = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = trial % 2 == 0 ? 2 : 3;
    const ChoiState e = random_channel(TensorShape{d});
    const ChoiState out = twirl(e, pauli_set(d, 1));
    const double f_before =
        jamiolkowski_fidelity(e, ComplexMatrix::identity(d));
    const double f_after =
        jamiolkowski_fidelity(out, ComplexMatrix::identity(d));
    worst_fid = std::max(worst_fid, std::abs(f_before - f_after));
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        const ComplexMatrix v = bell_state(d, k, l).amplitudes;
        worst_diag = std::max(
            worst_diag, std::abs(state_fidelity(out, v) - state_fidelity(e, v)));
        for (int k2 = 0; k2 < d; ++k2)
          for (int l2 = 0; l2 < d; ++l2) {
            if (k == k2 && l == l2) continue;
            const ComplexMatrix w = bell_state(d, k2, l2).amplitudes;
            worst_off = std::max(
                worst_off, std::abs((v.dagger() * out.matrix * w)(0, 0)));
          }
      }
  }
  report(2, "Pauli-channel standard form",
         worst_diag < 1e-12 && worst_off < 1e-12 && worst_fid < 1e-12,
         "diag " + format_double(worst_diag) + ", off " +
             format_double(worst_off) + ", fidelity " +
             format_double(worst_fid));
}

// --- 3 ----------------------------------------------------------------
void criterion_depolarizing() {
  bool pass = true;
  std::string detail;
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (int variant = 0; variant < 2; ++variant) {
      if (d == 3 && variant == 1) continue;
      const TwirlSet set = variant == 0 ? clifford_depolarizing_set(d, 1)
                                        : depolarizing_set(d, 1);
      for (int trial = 0; trial < 20; ++trial) {
        const ChoiState e = random_channel(TensorShape{d});
        const double f = jamiolkowski_fidelity(e, ComplexMatrix::identity(d));
        const ChoiState out = twirl(e, set);
        const ChoiState target = isotropic_choi(d, f);
        worst = std::max(worst, max_abs(out.matrix - target.matrix));
        const double alpha = (d * d * f - 1.0) / (d * d - 1.0);
        const ComplexMatrix rho = random_hermitian(d);
        const ComplexMatrix expected =
            rho * cplx(alpha, 0.0) +
            ComplexMatrix::identity(d) *
                (rho.trace() * (1.0 - alpha) / static_cast<double>(d));
        worst = std::max(worst, max_abs(apply(out, rho) - expected));
      }
    }
  }
  if (worst > 1e-10) pass = false;
  detail = "isotropic residual " + format_double(worst);

  // Appendix-style orbit counting with exact integers.
  for (int d : {2, 3, 5}) {
    const auto group = clifford_group(d);
    std::vector<long> hits(d * d, 0);
    for (const auto &[sym, q] : group) {
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          if (k == 0 && l == 0) continue;
          hits[((sym.a * k + sym.b * l) % d) * d +
               (sym.c * k + sym.e * l) % d]++;
        }
    }
    for (int idx = 1; idx < d * d; ++idx) {
      if (hits[idx] != static_cast<long>(group.size())) pass = false;
    }
    if (hits[0] != 0) pass = false;
  }
  report(3, "depolarizing standard form + orbit counts", pass, detail);
}

// --- 4 ----------------------------------------------------------------
void criterion_white_noise() {
  double worst = 0.0;
  bool pass = true;
  for (int trial = 0; trial < 10; ++trial) {
    const ChoiState e = random_channel(TensorShape{2, 2});
    const ChoiState out = twirl(e, depolarizing_set(2, 2));
    const WhiteNoiseForm wn = extract_white_noise(out);
    // Dual-basis coefficients against the orthogonal-basis reading.
    const ComplexMatrix p = max_entangled_projector(2);
    const ComplexMatrix gamma =
        (ComplexMatrix::identity(4) - p) * cplx(1.0 / 3.0, 0.0);
    const ComplexMatrix paired = permute_systems(
        out.matrix, TensorShape{2, 2, 2, 2}, {0, 2, 1, 3});
    const auto coeff = [&](const ComplexMatrix &a, const ComplexMatrix &b) {
      return (kron(a, b) * paired).trace().real();
    };
    const double e00 = coeff(p, p);
    const double e01 = 3.0 * coeff(p, gamma);
    const double e10 = 3.0 * coeff(gamma, p);
    const double e11 = 9.0 * coeff(gamma, gamma);
    const double a00 = e00 - e01 / 3.0 - e10 / 3.0 + e11 / 9.0;
    const double a11 = 16.0 / 9.0 * e11;
    worst = std::max(worst, std::abs(wn.alphas[0] - a00));
    worst = std::max(worst, std::abs(wn.alphas[3] - a11));

    const ChoiState recon = reconstruct_white_noise(wn);
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) {
        const ComplexMatrix unit = matrix_unit(4, j, l);
        worst =
            std::max(worst, max_abs(apply(recon, unit) - apply(out, unit)));
      }
    double total = 0.0;
    for (double a : wn.alphas) total += a;
    worst = std::max(worst, std::abs(total - 1.0));
  }
  if (worst > 1e-10) pass = false;

  // Census for N = 3: the twirled state is described by 2^3 coefficients.
  const ChoiState e3 = random_channel(TensorShape{2, 2, 2}, 2);
  const ChoiState out3 = twirl(e3, depolarizing_set(2, 3));
  const WhiteNoiseForm wn3 = extract_white_noise(out3);
  double total3 = 0.0;
  for (double a : wn3.alphas) total3 += a;
  if (wn3.alphas.size() != 8 || std::abs(total3 - 1.0) > 1e-9) pass = false;

  report(4, "multi-party white noise", pass,
         "worst residual " + format_double(worst) + ", N=3 census " +
             std::to_string(wn3.alphas.size() - 1) + " free parameters");
}

// --- 5 ----------------------------------------------------------------
void criterion_gate_forms() {
  double worst_pattern = 0.0, worst_fid = 0.0;
  bool pass = true;
  for (double alpha : {0.2, kPi / 4.0, 1.1}) {
    const ComplexMatrix u = phase_gate_matrix(alpha);
    for (int trial = 0; trial < 100; ++trial) {
      const ChoiState e = noisy_gate(u, TensorShape{2, 2}, 0.85 + 0.1 * uniform());
      const ChoiState out = twirl(e, phase_gate_set());
      worst_pattern = std::max(worst_pattern,
                               phase_gate_pattern_residual(to_bell_frame(out)));
      worst_fid = std::max(worst_fid,
                           std::abs(jamiolkowski_fidelity(e, u) -
                                    jamiolkowski_fidelity(out, u)));
    }
  }
  if (worst_pattern > tol::form || worst_fid > 1e-12) pass = false;

  // CNOT extension: flat Gamma_11 and vanishing mu_{11,33}.
  double worst_cnot = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const ChoiState e =
        noisy_gate(phase_gate_matrix(kPi / 4.0), TensorShape{2, 2}, 0.9);
    const ChoiState out =
        twirl(twirl(e, phase_gate_set()), cnot_extension_set());
    const ComplexMatrix lam = to_bell_frame(out);
    worst_cnot = std::max(worst_cnot, std::abs(lam(12, 15)));
    worst_cnot = std::max(worst_cnot, std::abs(lam(12, 12) - lam(15, 15)));
    worst_cnot = std::max(worst_cnot, std::abs(lam(0, 0) - lam(3, 3)));
    const CnotForm form = extract_cnot_form(out);
    const ChoiState recon = reconstruct_cnot_form(form);
    worst_cnot = std::max(worst_cnot, max_abs(recon.matrix - out.matrix));
  }
  if (worst_cnot > 1e-10) pass = false;

  // SWAP: three noise parameters.
  double worst_swap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const ChoiState e = noisy_gate(swap_gate_matrix(2), TensorShape{2, 2}, 0.9);
    const ChoiState out = twirl(e, swap_set(2));
    const SwapForm form = extract_swap_form(out);
    const ChoiState recon = reconstruct_swap_form(form);
    worst_swap = std::max(worst_swap, max_abs(recon.matrix - out.matrix));
    worst_swap = std::max(
        worst_swap, std::abs(form.f - jamiolkowski_fidelity(e, swap_gate_matrix(2))));
  }
  if (worst_swap > 1e-10) pass = false;

  report(5, "gate standard forms", pass,
         "pattern " + format_double(worst_pattern) + ", fidelity " +
             format_double(worst_fid) + ", cnot " + format_double(worst_cnot) +
             ", swap " + format_double(worst_swap));
}

// --- 6 ----------------------------------------------------------------
void criterion_identity_sacrifice() {
  bool pass = true;
  double worst_solve = 0.0, worst_ratio = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    double e01, e10, e11;
    do {
      e01 = uniform(0.0, 1.0 / 48.0);
      e10 = uniform(0.0, 1.0 / 48.0);
      e11 = uniform(0.0, 1.0 / 144.0);
    } while (e01 + e10 + 3.0 * e11 >= 1.0 / 48.0);
    const IsotropicVector e{1.0 - 3.0 * (e01 + e10 + 3.0 * e11), e01, e10, e11};
    const SacrificeResult result = identity_sacrifice(e);
    const double fp = result.fidelity_after;

    const ComplexMatrix d = sacrifice_transfer_matrix(e);
    ComplexMatrix pv(4, 1);
    pv(0, 0) = result.probabilities.p00;
    pv(1, 0) = result.probabilities.p01;
    pv(2, 0) = result.probabilities.p10;
    pv(3, 0) = result.probabilities.p11;
    const ComplexMatrix achieved = d * pv;
    const double targets[4] = {fp, (1.0 - fp) / 15.0, (1.0 - fp) / 15.0,
                               (1.0 - fp) / 15.0};
    for (int i = 0; i < 4; ++i) {
      worst_solve =
          std::max(worst_solve, std::abs(achieved(i, 0).real() - targets[i]));
      if (pv(i, 0).real() < -1e-12) pass = false;
    }
    worst_ratio = std::max(worst_ratio, result.noise_ratio);
    if (result.fidelity_after <= e.e00 / 3.0) pass = false;

    // Grid-confirmed maximality on a subsample.
    if (trial % 25 == 0 && fp < 1.0 - 1e-5) {
      const auto feasible = [&](double f2) {
        ComplexMatrix rhs(4, 1);
        rhs(0, 0) = f2;
        rhs(1, 0) = (1.0 - f2) / 15.0;
        rhs(2, 0) = (1.0 - f2) / 15.0;
        rhs(3, 0) = (1.0 - f2) / 15.0;
        const ComplexMatrix sol = solve_linear(d, rhs);
        for (int i = 0; i < 4; ++i)
          if (sol(i, 0).real() < -1e-9) return false;
        return true;
      };
      if (!feasible(fp - 1e-6) || feasible(fp + 1e-6)) pass = false;
    }
  }
  if (worst_solve > 1e-9 || worst_ratio > 5.5) pass = false;

  // SWAP route on full states.
  double worst_white = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const ChoiState e = noisy_gate(swap_gate_matrix(2), TensorShape{2, 2}, 0.97);
    const SacrificeResult result = swap_sacrifice(e);
    const double q =
        (result.fidelity_after - 1.0 / 16.0) / (15.0 / 16.0);
    const ChoiState target{
        choi_of_unitary(swap_gate_matrix(2), TensorShape{2, 2}).matrix *
                cplx(q, 0.0) +
            ComplexMatrix::identity(16) * cplx((1.0 - q) / 16.0, 0.0),
        TensorShape{2, 2}, TensorShape{2, 2}};
    worst_white = std::max(worst_white,
                           max_abs(result.output.matrix - target.matrix));
    if (result.noise_ratio > 5.5 ||
        result.fidelity_after <= result.fidelity_before / 3.0) {
      pass = false;
    }
  }
  if (worst_white > 1e-9) pass = false;

  // Numerical floor of the relative fidelity over (2/3, 1]^3. The
  // implementation (exact white-noise target) must stay above the 37.14%
  // floor; the floor value itself is reproduced from the endpoint system
  // written down for the (1/9, 1/9, 1/27) class vector.
  double floor_impl = 1.0, floor_ref = 1.0;
  const auto ref_ratio = [](double r, double s, double t) {
    const double ir = 1.0 / r, is = 1.0 / s, it = 1.0 / t;
    const double f01 = ((9.0 + 3.0 * is + 5.0 * it - ir) / 144.0) /
                       (-(3.0 * is - ir - 4.0 * it) / 18.0);
    const double f10 = ((9.0 + 3.0 * ir + 5.0 * it - is) / 144.0) /
                       (-(3.0 * ir - is - 4.0 * it) / 18.0);
    const double f11 = ((27.0 - 3.0 * ir - 3.0 * is - 5.0 * it) / 432.0) /
                       (-(4.0 * it - 3.0 * ir - 3.0 * is) / 54.0);
    const double e00 = (1.0 + 3.0 * (r + s + 3.0 * t)) / 16.0;
    return std::min({1.0, f01, f10, f11}) / e00;
  };
  const int n = 60;
  double arg[3] = {1.0, 1.0, 1.0};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const double r = 2.0 / 3.0 + (1.0 / 3.0) * i / n;
        const double s = 2.0 / 3.0 + (1.0 / 3.0) * j / n;
        const double t = 2.0 / 3.0 + (1.0 / 3.0) * k / n;
        const double ratio = ref_ratio(r, s, t);
        if (ratio < floor_ref) {
          floor_ref = ratio;
          arg[0] = r;
          arg[1] = s;
          arg[2] = t;
        }
        const double e00 = (1.0 + 3.0 * (r + s + 3.0 * t)) / 16.0;
        const double e01 = (1.0 + 3.0 * s - r - 3.0 * t) / 16.0;
        const double e10 = (1.0 + 3.0 * r - s - 3.0 * t) / 16.0;
        const double e11 = (1.0 + t - r - s) / 16.0;
        if (e01 >= 0 && e10 >= 0 && e11 >= 0 && (i + j + k) % 5 == 0) {
          const SacrificeResult res =
              identity_sacrifice(IsotropicVector{e00, e01, e10, e11});
          floor_impl = std::min(floor_impl, res.fidelity_after / e00);
        }
      }
  // The infimum sits at an open corner of the box; zoom locally.
  double width = (1.0 / 3.0) / n;
  for (int round = 0; round < 8; ++round) {
    double best[3] = {arg[0], arg[1], arg[2]};
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j)
        for (int k = -4; k <= 4; ++k) {
          const double r = std::clamp(arg[0] + i * width / 4.0,
                                      2.0 / 3.0 + 1e-9, 1.0);
          const double s = std::clamp(arg[1] + j * width / 4.0,
                                      2.0 / 3.0 + 1e-9, 1.0);
          const double t = std::clamp(arg[2] + k * width / 4.0,
                                      2.0 / 3.0 + 1e-9, 1.0);
          const double ratio = ref_ratio(r, s, t);
          if (ratio < floor_ref) {
            floor_ref = ratio;
            best[0] = r;
            best[1] = s;
            best[2] = t;
          }
        }
    arg[0] = best[0];
    arg[1] = best[1];
    arg[2] = best[2];
    width /= 4.0;
  }
  if (std::abs(floor_ref - 0.3714) > 0.005) pass = false;
  if (floor_impl < 0.3714 - 0.005) pass = false;

  report(6, "identity/SWAP sacrifice", pass,
         "solve residual " + format_double(worst_solve) + ", worst ratio " +
             format_double(worst_ratio) + ", white residual " +
             format_double(worst_white) + ", floor ref " +
             format_double(floor_ref) + ", floor impl " +
             format_double(floor_impl));
}

// --- 7 ----------------------------------------------------------------
void criterion_cnot_sacrifice() {
  bool pass = true;
  double worst_white = 0.0, worst_ratio = 0.0;
  const ComplexMatrix u = phase_gate_matrix(kPi / 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    ChoiState e =
        noisy_gate(u, TensorShape{2, 2}, 0.99 + 0.009 * uniform());
    e = twirl(twirl(e, phase_gate_set()), cnot_extension_set());
    const double f = jamiolkowski_fidelity(e, u);
    const SacrificeResult result = cnot_sacrifice(e);
    const double q = (result.fidelity_after - 1.0 / 16.0) / (15.0 / 16.0);
    const ChoiState target{
        choi_of_unitary(u, TensorShape{2, 2}).matrix * cplx(q, 0.0) +
            ComplexMatrix::identity(16) * cplx((1.0 - q) / 16.0, 0.0),
        TensorShape{2, 2}, TensorShape{2, 2}};
    worst_white =
        std::max(worst_white, max_abs(result.output.matrix - target.matrix));
    worst_ratio = std::max(worst_ratio, result.noise_ratio);
    if (result.fidelity_after < f / (17.0 - 16.0 * f) - 1e-9) pass = false;
  }
  if (worst_white > 1e-9 || worst_ratio > 20.0) pass = false;
  report(7, "CNOT sacrifice", pass,
         "white residual " + format_double(worst_white) + ", worst ratio " +
             format_double(worst_ratio));
}

// --- 8 ----------------------------------------------------------------
void criterion_phase_sacrifice() {
  bool pass = true;
  double worst_white = 0.0, worst_bound = 1.0;
  for (double alpha : {0.3, kPi / 4.0}) {
    const ComplexMatrix u = phase_gate_matrix(alpha);
    for (int trial = 0; trial < 100; ++trial) {
      ChoiState e = noisy_gate(u, TensorShape{2, 2}, 0.99 + 0.009 * uniform());
      e = twirl(e, phase_gate_set());
      const double f = jamiolkowski_fidelity(e, u);
      const SacrificeResult result = phase_gate_sacrifice(e, alpha);
      const double q = (result.fidelity_after - 1.0 / 16.0) / (15.0 / 16.0);
      const ChoiState target{
          choi_of_unitary(u, TensorShape{2, 2}).matrix * cplx(q, 0.0) +
              ComplexMatrix::identity(16) * cplx((1.0 - q) / 16.0, 0.0),
          TensorShape{2, 2}, TensorShape{2, 2}};
      worst_white =
          std::max(worst_white, max_abs(result.output.matrix - target.matrix));
      worst_bound = std::min(worst_bound, (result.fidelity_after -
                                           (1.0 - 17.0 * (1.0 - f))));
      for (const auto &mixer : result.mixers) {
        if (!mixer_is_ppt(mixer)) pass = false;
      }
    }
  }
  if (worst_white > 1e-9 || worst_bound < -1e-9) pass = false;
  report(8, "phase-gate sacrifice", pass,
         "white residual " + format_double(worst_white) +
             ", bound slack " + format_double(worst_bound));
}

// --- 9 ----------------------------------------------------------------
void criterion_closed_forms() {
  double worst = 0.0;
  const double rates[5] = {0.0, 0.05, 0.12, 0.31, 0.8};
  const double times[5] = {0.0, 0.1, 0.37, 0.9, 2.0};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double l1 = rates[i], l2 = rates[(i + 2) % 5], l3 = rates[j];
      const double t = times[j];
      LindbladGenerator z = zero_generator(1);
      z.gks(0, 0) = l1;
      z.gks(1, 1) = l2;
      z.gks(2, 2) = l3;
      const PauliChannelForm closed = closed_form_pauli_channel(l1, l2, l3, t);
      const PauliChannelForm integrated = extract_pauli_channel(evolve(z, t));
      for (int w = 0; w < 4; ++w) {
        worst = std::max(worst,
                         std::abs(closed.weights[w] - integrated.weights[w]));
      }
      // Equal rates give the depolarizing decay exp(-8 L t).
      const double l = rates[i];
      const PauliChannelForm dep = closed_form_pauli_channel(l, l, l, t);
      const double p = std::exp(-8.0 * l * t);
      worst = std::max(worst, std::abs(dep.weights[0] - (1.0 + 3.0 * p) / 4.0));
    }
  }
  report(9, "Lindblad closed forms", worst < 1e-10,
         "worst residual " + format_double(worst));
}

// --- 10 ---------------------------------------------------------------
void criterion_stroboscopic() {
  bool pass = true;
  std::string detail;

  const auto slope_fit = [](const std::vector<double> &ms,
                            const std::vector<double> &errs) {
    // Least squares on log-log.
    const int n = static_cast<int>(ms.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      const double x = std::log(ms[i]);
      const double y = std::log(errs[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };

  // Decoherence protocol: single qubit, Pauli pulses.
  LindbladGenerator zq = zero_generator(1);
  zq.gks = ComplexMatrix{{0.2, cplx(0.05, 0.02), 0.0},
                         {cplx(0.05, -0.02), 0.12, 0.0},
                         {0.0, 0.0, 0.3}};
  zq.lamb_shift = random_hermitian(2, 0.2);
  const TwirlSet pset = pauli_set(2, 1);
  std::vector<std::pair<double, LindbladGenerator>> family;
  for (const auto &e : pset.elements)
    family.push_back({e.probability, conjugate_generator(zq, e.post)});
  const ChoiState exact_q = evolve(average_generator(family), 1.0);

  // Ising protocol: two qubits, the 32-unitary set.
  LindbladGenerator zi = zero_generator(2);
  zi.hamiltonian = kron(pauli(2), pauli(2));
  zi.lamb_shift = random_hermitian(4, 0.02);
  {
    const ComplexMatrix a = random_matrix(15, 15);
    zi.gks = (a * a.dagger()) * cplx(0.003 / 15.0, 0.0);
  }
  const TwirlSet iset = phase_gate_set();
  family.clear();
  for (const auto &e : iset.elements)
    family.push_back({e.probability, conjugate_generator(zi, e.post)});
  const ChoiState exact_i = evolve(average_generator(family), 0.5);

  const std::vector<double> ms = {16, 32, 64, 128, 256, 512, 1024};
  for (const auto mode :
       {StroboscopicMode::kSequential, StroboscopicMode::kRandom}) {
    std::vector<double> errs_q, errs_i;
    for (double m : ms) {
      const PulseSchedule sq =
          PulseSchedule::from_twirl_set(pset, static_cast<int>(m), 1.0);
      errs_q.push_back(
          trace_distance(stroboscopic_evolve(zq, sq, mode), exact_q));
      const PulseSchedule si =
          PulseSchedule::from_twirl_set(iset, static_cast<int>(m), 0.5);
      errs_i.push_back(
          trace_distance(stroboscopic_evolve(zi, si, mode), exact_i));
    }
    const double slope_q = slope_fit(ms, errs_q);
    const double slope_i = slope_fit(ms, errs_i);
    if (std::abs(slope_q + 1.0) > 0.2 || std::abs(slope_i + 1.0) > 0.2) {
      pass = false;
    }
    detail += (mode == StroboscopicMode::kSequential ? "seq" : "rnd");
    detail += " slopes " + format_double(slope_q) + "/" +
              format_double(slope_i) + " ";
  }

  // Pattern check of the Ising stroboscopic output at M = 1024.
  const PulseSchedule s1024 = PulseSchedule::from_twirl_set(iset, 1024, 0.5);
  const ChoiState strobe =
      stroboscopic_evolve(zi, s1024, StroboscopicMode::kSequential);
  const double residual = phase_gate_pattern_residual(to_bell_frame(strobe));
  if (residual >= 1e-6) pass = false;
  detail += "pattern " + format_double(residual);

  report(10, "stroboscopic convergence", pass, detail);
}

// --- 11 ---------------------------------------------------------------
void criterion_chain() {
  bool pass = true;
  LindbladGenerator z = zero_generator(2);
  z.hamiltonian = kron(pauli(3), pauli(3));
  z.lamb_shift = random_hermitian(4, 0.05);
  {
    const ComplexMatrix a = random_matrix(15, 15);
    z.gks = (a * a.dagger()) * cplx(0.05 / 15.0, 0.0);
  }
  const ChainResult result = arbitrary_h_chain(
      z, axis_conjugation_decomposition(3, true),
      axis_conjugation_decomposition(3, false));

  const double h_residual =
      max_abs(result.generator.hamiltonian - z.hamiltonian);
  if (h_residual >= 1e-12) pass = false;
  if (std::abs(result.time_cost - result.c_v * result.c_y * result.c_w) >
      1e-12) {
    pass = false;
  }

  std::vector<double> values;
  for (int i = 0; i < 15; ++i)
    for (int j = i; j < 15; ++j) {
      const cplx v = result.generator.gks(i, j);
      if (std::abs(v.real()) > 1e-9) values.push_back(std::abs(v.real()));
      if (std::abs(v.imag()) > 1e-9) values.push_back(std::abs(v.imag()));
    }
  std::sort(values.begin(), values.end());
  int census = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] - values[i - 1] > 1e-9) ++census;
  }
  if (census > 17) pass = false;

  report(11, "arbitrary-Hamiltonian chain", pass,
         "H residual " + format_double(h_residual) + ", census " +
             std::to_string(census) + ", cost " +
             format_double(result.time_cost));
}

// --- 12 ---------------------------------------------------------------
void criterion_entanglement_breaking() {
  bool pass = true;
  for (int d : {2, 3}) {
    const double boundary = 1.0 / d;
    if (!is_entanglement_breaking(isotropic_choi(d, boundary - 1e-6))) {
      pass = false;
    }
    if (is_entanglement_breaking(isotropic_choi(d, boundary + 1e-6))) {
      pass = false;
    }
  }
  report(12, "entanglement-breaking boundary", pass, "checked f = 1/d +- 1e-6");
}

}  // namespace

int main() {
  criterion_isomorphism();
  criterion_pauli_twirl();
  criterion_depolarizing();
  criterion_white_noise();
  criterion_gate_forms();
  criterion_identity_sacrifice();
  criterion_cnot_sacrifice();
  criterion_phase_sacrifice();
  criterion_closed_forms();
  criterion_stroboscopic();
  criterion_chain();
  criterion_entanglement_breaking();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
