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

#include "depolar/standard_forms.hpp"

#include <cmath>
#include <sstream>

namespace depolar {

namespace {

void require_equal_qudits(const ChoiState &e, int *d, int *parties) {
  if (!(e.in_shape == e.out_shape)) {
    throw ValidationError("unsupported_shape",
                          "form extraction needs equal in/out shapes");
  }
  *parties = e.in_shape.parties();
  *d = e.in_shape.factors[0];
  for (int f : e.in_shape.factors) {
    if (f != *d) {
      throw ValidationError("unsupported_shape",
                            "form extraction needs equal party dimensions");
    }
  }
}

ComplexMatrix gamma_state(int d) {
  return (ComplexMatrix::identity(d * d) - max_entangled_projector(d)) *
         cplx(1.0 / (d * d - 1.0), 0.0);
}

std::vector<int> pair_permutation(int parties) {
  std::vector<int> perm;
  for (int p = 0; p < parties; ++p) {
    perm.push_back(p);
    perm.push_back(parties + p);
  }
  return perm;
}

std::vector<int> inverse_permutation(const std::vector<int> &perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

[[noreturn]] void form_error(const std::string &what, double residual) {
  std::ostringstream msg;
  msg << what << " (worst off-pattern magnitude " << residual << ")";
  throw ValidationError("not_in_form", msg.str());
}

}  // namespace

const std::vector<std::pair<int, int>> &bell_ordering_two_qubit() {
  static const std::vector<std::pair<int, int>> order = {
      {0, 0}, {0, 2}, {2, 0}, {2, 2}, {0, 1}, {0, 3}, {2, 1}, {2, 3},
      {1, 0}, {3, 0}, {1, 2}, {3, 2}, {1, 1}, {1, 3}, {3, 1}, {3, 3}};
  return order;
}

const ComplexMatrix &bell_product_transform() {
  static const ComplexMatrix t = [] {
    ComplexMatrix m(16, 16);
    const auto &order = bell_ordering_two_qubit();
    for (int col = 0; col < 16; ++col) {
      const auto [i, j] = order[col];
      const ComplexMatrix &si = pauli(i);
      const ComplexMatrix &sj = pauli(j);
      for (int o1 = 0; o1 < 2; ++o1)
        for (int o2 = 0; o2 < 2; ++o2)
          for (int i1 = 0; i1 < 2; ++i1)
            for (int i2 = 0; i2 < 2; ++i2) {
              m((o1 * 2 + o2) * 4 + (i1 * 2 + i2), col) =
                  si(o1, i1) * sj(o2, i2) * 0.5;
            }
    }
    return m;
  }();
  return t;
}

ComplexMatrix to_bell_frame(const ChoiState &e) {
  if (e.matrix.rows() != 16) {
    throw ValidationError("unsupported_shape",
                          "Bell frame is defined for two-qubit channels");
  }
  const ComplexMatrix &t = bell_product_transform();
  return t.dagger() * e.matrix * t;
}

ComplexMatrix from_bell_frame(const ComplexMatrix &lambda) {
  const ComplexMatrix &t = bell_product_transform();
  return t * lambda * t.dagger();
}

ComplexMatrix to_swap_pairing(const ComplexMatrix &choi, int d) {
  return permute_systems(choi, TensorShape{d, d, d, d}, {1, 2, 0, 3});
}

ComplexMatrix from_swap_pairing(const ComplexMatrix &paired, int d) {
  return permute_systems(paired, TensorShape{d, d, d, d}, {2, 0, 1, 3});
}

// ---------------------------------------------------------------------------
// Pauli channel

PauliChannelForm extract_pauli_channel(const ChoiState &e) {
  int d = 0, parties = 0;
  require_equal_qudits(e, &d, &parties);
  const int n = e.matrix.rows();
  const int count = n;  // d^{2N} basis states

  // Columns of the generalized Bell-product basis, party-major (k,l) order.
  ComplexMatrix t(n, n);
  std::vector<int> kl(parties);
  for (int col = 0; col < count; ++col) {
    int rest = col;
    for (int p = parties - 1; p >= 0; --p) {
      kl[p] = rest % (d * d);
      rest /= d * d;
    }
    ComplexMatrix u = ComplexMatrix::identity(1);
    for (int p = 0; p < parties; ++p) {
      u = kron(u, gen_pauli(d, kl[p] / d, kl[p] % d));
    }
    const ComplexMatrix psi = bell_vector_of(u);
    for (int r = 0; r < n; ++r) t(r, col) = psi(r, 0);
  }
  const ComplexMatrix lambda = t.dagger() * e.matrix * t;

  double off = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off = std::max(off, std::abs(lambda(i, j)));
  if (off > tol::form) {
    form_error("state is not diagonal in the Bell product basis", off);
  }
  PauliChannelForm form{d, parties, {}};
  form.weights.resize(count);
  double sum = 0.0;
  for (int i = 0; i < count; ++i) {
    double w = lambda(i, i).real();
    if (w < -tol::form) {
      form_error("negative Pauli-channel weight", -w);
    }
    form.weights[i] = std::max(0.0, w);
    sum += form.weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-8) {
    form_error("Pauli-channel weights do not sum to one", std::abs(sum - 1.0));
  }
  return form;
}

ChoiState reconstruct_pauli_channel(const PauliChannelForm &form) {
  const int n = static_cast<int>(form.weights.size());
  std::vector<int> factors(form.parties, form.d);
  const TensorShape shape(factors);
  ComplexMatrix e(n, n);
  std::vector<int> kl(form.parties);
  for (int col = 0; col < n; ++col) {
    int rest = col;
    for (int p = form.parties - 1; p >= 0; --p) {
      kl[p] = rest % (form.d * form.d);
      rest /= form.d * form.d;
    }
    ComplexMatrix u = ComplexMatrix::identity(1);
    for (int p = 0; p < form.parties; ++p) {
      u = kron(u, gen_pauli(form.d, kl[p] / form.d, kl[p] % form.d));
    }
    const ComplexMatrix psi = bell_vector_of(u);
    e += (psi * psi.dagger()) * cplx(form.weights[col], 0.0);
  }
  return ChoiState{std::move(e), shape, shape};
}

// ---------------------------------------------------------------------------
// Multi-party white noise

WhiteNoiseForm extract_white_noise(const ChoiState &e) {
  int d = 0, parties = 0;
  require_equal_qudits(e, &d, &parties);
  const std::vector<int> perm = pair_permutation(parties);
  const ComplexMatrix paired =
      permute_systems(e.matrix, e.combined_shape(), perm);

  const ComplexMatrix p_phi = max_entangled_projector(d);
  const ComplexMatrix gamma = gamma_state(d);
  const ComplexMatrix delta0 = p_phi - gamma;
  const ComplexMatrix delta1 = gamma * cplx(static_cast<double>(d) * d, 0.0);

  const int combos = 1 << parties;
  WhiteNoiseForm form{d, parties, std::vector<double>(combos, 0.0)};
  for (int mask = 0; mask < combos; ++mask) {
    ComplexMatrix dual = ComplexMatrix::identity(1);
    for (int p = 0; p < parties; ++p) {
      const bool one = (mask >> (parties - 1 - p)) & 1;
      dual = kron(dual, one ? delta1 : delta0);
    }
    form.alphas[mask] = (dual * paired).trace().real();
  }

  // Residual against the (P_Phi, 1/d^2) expansion.
  ComplexMatrix rec(paired.rows(), paired.cols());
  const ComplexMatrix mixed =
      ComplexMatrix::identity(d * d) * cplx(1.0 / (d * d), 0.0);
  for (int mask = 0; mask < combos; ++mask) {
    ComplexMatrix term = ComplexMatrix::identity(1);
    for (int p = 0; p < parties; ++p) {
      const bool one = (mask >> (parties - 1 - p)) & 1;
      term = kron(term, one ? mixed : p_phi);
    }
    rec += term * cplx(form.alphas[mask], 0.0);
  }
  const double residual = max_abs(paired - rec);
  if (residual > tol::form) {
    form_error("state is outside the isotropic product span", residual);
  }
  return form;
}

ChoiState reconstruct_white_noise(const WhiteNoiseForm &form) {
  const int d = form.d;
  const ComplexMatrix p_phi = max_entangled_projector(d);
  const ComplexMatrix mixed =
      ComplexMatrix::identity(d * d) * cplx(1.0 / (d * d), 0.0);
  const int combos = 1 << form.parties;
  ComplexMatrix paired;
  for (int mask = 0; mask < combos; ++mask) {
    ComplexMatrix term = ComplexMatrix::identity(1);
    for (int p = 0; p < form.parties; ++p) {
      const bool one = (mask >> (form.parties - 1 - p)) & 1;
      term = kron(term, one ? mixed : p_phi);
    }
    term *= cplx(form.alphas[mask], 0.0);
    paired = paired.empty() ? term : paired + term;
  }
  std::vector<int> pair_factors(2 * form.parties, d);
  const std::vector<int> inv =
      inverse_permutation(pair_permutation(form.parties));
  ComplexMatrix choi = permute_systems(paired, TensorShape(pair_factors), inv);
  std::vector<int> party_factors(form.parties, d);
  const TensorShape shape(party_factors);
  return ChoiState{std::move(choi), shape, shape};
}

// ---------------------------------------------------------------------------
// Phase-gate form

double phase_gate_pattern_residual(const ComplexMatrix &lam) {
  double worst = 0.0;
  const auto check_zero = [&](int i, int j) {
    worst = std::max(worst, std::abs(lam(i, j)));
  };
  const auto check_eq = [&](cplx x, cplx y) {
    worst = std::max(worst, std::abs(x - y));
  };
  // Block-diagonal zeros.
  for (int bi = 0; bi < 4; ++bi)
    for (int bj = 0; bj < 4; ++bj) {
      if (bi == bj) continue;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) check_zero(4 * bi + i, 4 * bj + j);
    }
  // In-block zeros: only the diagonal and anti-diagonal may be populated.
  for (int b = 0; b < 4; ++b)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j || i + j == 3) continue;
        check_zero(4 * b + i, 4 * b + j);
      }
  // Gamma_01 and Gamma_10 equalities.
  for (int b : {1, 2}) {
    const int o = 4 * b;
    check_eq(lam(o, o), lam(o + 1, o + 1));
    check_eq(lam(o + 2, o + 2), lam(o + 3, o + 3));
    check_eq(lam(o + 1, o + 2), -lam(o, o + 3));
  }
  // Gamma_11: uniform diagonal, real antisymmetric off-diagonal.
  check_eq(lam(12, 12), lam(13, 13));
  check_eq(lam(12, 12), lam(14, 14));
  check_eq(lam(12, 12), lam(15, 15));
  check_eq(lam(13, 14), -lam(12, 15));
  worst = std::max(worst, std::abs(lam(12, 15).imag()));
  return worst;
}

namespace {

ComplexMatrix ideal_phase_vector(double alpha) {
  ComplexMatrix v(16, 1);
  v(0, 0) = std::cos(alpha);
  v(3, 0) = cplx(0.0, -std::sin(alpha));
  return v;
}

}  // namespace

PhaseGateForm extract_phase_gate_form(const ChoiState &e, double alpha) {
  const ComplexMatrix lam = to_bell_frame(e);
  const double residual = phase_gate_pattern_residual(lam);
  if (residual > tol::form) {
    form_error("state is not in the phase-gate standard form", residual);
  }
  const ComplexMatrix v = ideal_phase_vector(alpha);
  const double f = (v.dagger() * lam * v)(0, 0).real();
  PhaseGateForm form{};
  form.alpha = alpha;
  form.f = f;
  if (1.0 - f > 1e-12) {
    const ComplexMatrix noise =
        (lam - (v * v.dagger()) * cplx(f, 0.0)) * cplx(1.0 / (1.0 - f), 0.0);
    form.a = noise(0, 0).real();
    form.b = noise(1, 1).real();
    form.b_t = noise(2, 2).real();
    form.a_t = noise(3, 3).real();
    form.u = noise(0, 3);
    form.v = noise(1, 2);
    form.c = noise(4, 4).real();
    form.c_t = noise(6, 6).real();
    form.w = noise(4, 7);
    form.d = noise(8, 8).real();
    form.d_t = noise(10, 10).real();
    form.x = noise(8, 11);
    form.e = noise(12, 12).real();
    form.e_t = noise(12, 15).real();
  }
  return form;
}

ChoiState reconstruct_phase_gate_form(const PhaseGateForm &form) {
  ComplexMatrix noise(16, 16);
  noise(0, 0) = form.a;
  noise(1, 1) = form.b;
  noise(2, 2) = form.b_t;
  noise(3, 3) = form.a_t;
  noise(0, 3) = form.u;
  noise(3, 0) = std::conj(form.u);
  noise(1, 2) = form.v;
  noise(2, 1) = std::conj(form.v);
  noise(4, 4) = noise(5, 5) = form.c;
  noise(6, 6) = noise(7, 7) = form.c_t;
  noise(4, 7) = form.w;
  noise(7, 4) = std::conj(form.w);
  noise(5, 6) = -form.w;
  noise(6, 5) = -std::conj(form.w);
  noise(8, 8) = noise(9, 9) = form.d;
  noise(10, 10) = noise(11, 11) = form.d_t;
  noise(8, 11) = form.x;
  noise(11, 8) = std::conj(form.x);
  noise(9, 10) = -form.x;
  noise(10, 9) = -std::conj(form.x);
  for (int i = 12; i < 16; ++i) noise(i, i) = form.e;
  noise(12, 15) = noise(15, 12) = form.e_t;
  noise(13, 14) = noise(14, 13) = -form.e_t;

  const ComplexMatrix v = ideal_phase_vector(form.alpha);
  const ComplexMatrix lam =
      (v * v.dagger()) * cplx(form.f, 0.0) + noise * cplx(1.0 - form.f, 0.0);
  return ChoiState{from_bell_frame(lam), TensorShape{2, 2}, TensorShape{2, 2}};
}

// ---------------------------------------------------------------------------
// CNOT form

CnotForm extract_cnot_form(const ChoiState &e) {
  const ComplexMatrix lam = to_bell_frame(e);
  double residual = phase_gate_pattern_residual(lam);
  // The pi/4 extension adds: paired diagonals in Gamma_00, imaginary
  // off-diagonals there, one uniform diagonal in Gamma_01/Gamma_10 with
  // real off-diagonals, and a fully flat Gamma_11.
  const auto bump = [&residual](double x) { residual = std::max(residual, x); };
  bump(std::abs(lam(0, 0) - lam(3, 3)));
  bump(std::abs(lam(1, 1) - lam(2, 2)));
  bump(std::abs(lam(0, 3).real()));
  bump(std::abs(lam(1, 2).real()));
  bump(std::abs(lam(4, 4) - lam(6, 6)));
  bump(std::abs(lam(8, 8) - lam(10, 10)));
  bump(std::abs(lam(4, 7).imag()));
  bump(std::abs(lam(8, 11).imag()));
  bump(std::abs(lam(12, 15)));
  if (residual > tol::form) {
    form_error("state is not in the CNOT-type standard form", residual);
  }
  constexpr double kQuarterPi = 3.14159265358979323846 / 4.0;
  const ComplexMatrix v = ideal_phase_vector(kQuarterPi);
  const double f = (v.dagger() * lam * v)(0, 0).real();
  CnotForm form{};
  form.f = f;
  if (1.0 - f > 1e-12) {
    const ComplexMatrix noise =
        (lam - (v * v.dagger()) * cplx(f, 0.0)) * cplx(1.0 / (1.0 - f), 0.0);
    form.a = noise(0, 0).real();
    form.b = noise(1, 1).real();
    form.u = noise(0, 3).imag();
    form.v = noise(1, 2).imag();
    form.c = noise(4, 4).real();
    form.w = noise(4, 7).real();
    form.d = noise(8, 8).real();
    form.x = noise(8, 11).real();
    form.e = noise(12, 12).real();
  }
  return form;
}

ChoiState reconstruct_cnot_form(const CnotForm &form) {
  PhaseGateForm pg{};
  pg.alpha = 3.14159265358979323846 / 4.0;
  pg.f = form.f;
  pg.a = pg.a_t = form.a;
  pg.b = pg.b_t = form.b;
  pg.u = cplx(0.0, form.u);
  pg.v = cplx(0.0, form.v);
  pg.c = pg.c_t = form.c;
  pg.w = form.w;
  pg.d = pg.d_t = form.d;
  pg.x = form.x;
  pg.e = form.e;
  pg.e_t = 0.0;
  return reconstruct_phase_gate_form(pg);
}

// ---------------------------------------------------------------------------
// SWAP form

SwapForm extract_swap_form(const ChoiState &e) {
  if (e.matrix.rows() != 16 || e.d_in() != 4) {
    throw ValidationError("unsupported_shape",
                          "SWAP form extraction is two-qubit only");
  }
  const double f = jamiolkowski_fidelity(e, swap_gate_matrix(2));
  // Undo the internal pair interleaving of extract_white_noise so that its
  // per-party pairs land on (B',A) and (A',B).
  const ComplexMatrix paired = to_swap_pairing(e.matrix, 2);
  const WhiteNoiseForm wn = extract_white_noise(ChoiState{
      permute_systems(paired, TensorShape{2, 2, 2, 2},
                      inverse_permutation(pair_permutation(2))),
      TensorShape{2, 2}, TensorShape{2, 2}});
  SwapForm form{};
  form.f = f;
  for (int i = 0; i < 4; ++i) form.alphas[i] = wn.alphas[i];
  return form;
}

ChoiState reconstruct_swap_form(const SwapForm &form) {
  WhiteNoiseForm wn{2, 2, {form.alphas[0], form.alphas[1], form.alphas[2],
                           form.alphas[3]}};
  const ChoiState paired_choi = reconstruct_white_noise(wn);
  const ComplexMatrix paired = permute_systems(
      paired_choi.matrix, TensorShape{2, 2, 2, 2}, pair_permutation(2));
  return ChoiState{from_swap_pairing(paired, 2), TensorShape{2, 2},
                   TensorShape{2, 2}};
}

}  // namespace depolar
