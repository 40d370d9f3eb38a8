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

#include "depolar/lindblad.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace depolar {

namespace {

ComplexMatrix vec_of(const ComplexMatrix &rho) {
  ComplexMatrix v(rho.rows() * rho.cols(), 1);
  for (int i = 0; i < rho.rows(); ++i)
    for (int j = 0; j < rho.cols(); ++j) v(i * rho.cols() + j, 0) = rho(i, j);
  return v;
}

ComplexMatrix unvec_of(const ComplexMatrix &v, int d) {
  ComplexMatrix rho(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rho(i, j) = v(i * d + j, 0);
  return rho;
}

// Conjugation superoperator rho -> U rho U^dag on row-major vec.
ComplexMatrix conjugation_superoperator(const ComplexMatrix &u) {
  return kron(u, u.conjugate());
}

}  // namespace

const std::vector<ComplexMatrix> &pauli_product_basis(int qubits) {
  static std::mutex mutex;
  static std::map<int, std::vector<ComplexMatrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(qubits);
  if (it != cache.end()) return it->second;
  std::vector<ComplexMatrix> basis;
  int total = 1;
  for (int q = 0; q < qubits; ++q) total *= 4;
  for (int idx = 1; idx < total; ++idx) {
    int rest = idx;
    std::vector<int> labels(qubits);
    for (int q = qubits - 1; q >= 0; --q) {
      labels[q] = rest % 4;
      rest /= 4;
    }
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (int q = 0; q < qubits; ++q) m = kron(m, pauli(labels[q]));
    basis.push_back(std::move(m));
  }
  return cache.emplace(qubits, std::move(basis)).first->second;
}

std::vector<std::string> pauli_product_labels(int qubits) {
  static const char *names = "1XYZ";
  std::vector<std::string> out;
  int total = 1;
  for (int q = 0; q < qubits; ++q) total *= 4;
  for (int idx = 1; idx < total; ++idx) {
    int rest = idx;
    std::string label(qubits, '1');
    for (int q = qubits - 1; q >= 0; --q) {
      label[q] = names[rest % 4];
      rest /= 4;
    }
    out.push_back(label);
  }
  return out;
}

void LindbladGenerator::validate() const {
  const int d = dim();
  const int k = d * d - 1;
  if (hamiltonian.rows() != d || lamb_shift.rows() != d || gks.rows() != k ||
      gks.cols() != k) {
    throw ValidationError("dimension_mismatch", "generator component shapes");
  }
  if (!is_hermitian(hamiltonian, tol::herm) ||
      !is_hermitian(lamb_shift, tol::herm) || !is_hermitian(gks, tol::herm)) {
    throw ValidationError("not_hermitian",
                          "H, H_l and the GKS matrix must be Hermitian");
  }
  const HermEig eig = herm_eig(gks);
  if (eig.eigenvalues.back() < -tol::herm) {
    throw ValidationError("gks_not_positive",
                          "the GKS matrix must be positive semidefinite");
  }
}

LindbladGenerator zero_generator(int qubits) {
  const int d = 1 << qubits;
  return LindbladGenerator{qubits, ComplexMatrix(d, d), ComplexMatrix(d, d),
                           ComplexMatrix(d * d - 1, d * d - 1)};
}

ComplexMatrix generator_superoperator(const LindbladGenerator &z) {
  z.validate();
  const int d = z.dim();
  const ComplexMatrix one = ComplexMatrix::identity(d);
  const ComplexMatrix h_eff = z.hamiltonian + z.lamb_shift;
  ComplexMatrix sup =
      (kron(h_eff, one) - kron(one, h_eff.transpose())) * cplx(0.0, -1.0);
  const auto &basis = pauli_product_basis(z.qubits);
  const int k = static_cast<int>(basis.size());
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const cplx l = z.gks(a, b);
      if (l == cplx(0.0, 0.0)) continue;
      const ComplexMatrix lb_la = basis[b] * basis[a];
      sup += (kron(basis[a], basis[b].transpose()) * cplx(2.0, 0.0) -
              kron(lb_la, one) - kron(one, lb_la.transpose())) *
             l;
    }
  }
  return sup;
}

ChoiState evolve(const LindbladGenerator &z, double t) {
  const int d = z.dim();
  const ComplexMatrix e = mat_exp(generator_superoperator(z) * cplx(t, 0.0));
  std::vector<int> factors(z.qubits, 2);
  const TensorShape shape(factors);
  return choi_from_map(
      [&](const ComplexMatrix &rho) { return unvec_of(e * vec_of(rho), d); },
      shape, shape);
}

ComplexMatrix pauli_change_of_basis(const ComplexMatrix &u, int qubits) {
  const auto &basis = pauli_product_basis(qubits);
  const int k = static_cast<int>(basis.size());
  const double d = static_cast<double>(1 << qubits);
  ComplexMatrix o(k, k);
  for (int col = 0; col < k; ++col) {
    const ComplexMatrix moved = u * basis[col] * u.dagger();
    for (int row = 0; row < k; ++row) {
      cplx coeff = (basis[row] * moved).trace();
      coeff /= d;
      if (std::abs(coeff.imag()) > 1e-9) {
        throw ValidationError("not_unitary",
                              "Pauli change of basis must be real");
      }
      double val = coeff.real();
      if (std::abs(val) < 1e-14) val = 0.0;  // keep signed permutations exact
      o(row, col) = val;
    }
  }
  return o;
}

LindbladGenerator conjugate_generator(const LindbladGenerator &z,
                                      const ComplexMatrix &u) {
  if (!is_unitary(u, 1e-8) || u.rows() != z.dim()) {
    throw ValidationError("not_unitary", "conjugation requires a unitary");
  }
  const ComplexMatrix o = pauli_change_of_basis(u, z.qubits);
  return LindbladGenerator{z.qubits, u * z.hamiltonian * u.dagger(),
                           u * z.lamb_shift * u.dagger(),
                           o * z.gks * o.transpose()};
}

LindbladGenerator average_generator(
    const std::vector<std::pair<double, LindbladGenerator>> &terms) {
  if (terms.empty()) {
    throw ValidationError("empty_set", "average_generator needs terms");
  }
  double total = 0.0;
  LindbladGenerator out = zero_generator(terms.front().second.qubits);
  for (const auto &[p, gen] : terms) {
    if (p <= 0.0) {
      throw ValidationError("bad_probability", "weights must be positive");
    }
    total += p;
    out.hamiltonian += gen.hamiltonian * cplx(p, 0.0);
    out.lamb_shift += gen.lamb_shift * cplx(p, 0.0);
    out.gks += gen.gks * cplx(p, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("bad_probability", "weights must sum to one");
  }
  return out;
}

PulseSchedule PulseSchedule::from_twirl_set(const TwirlSet &set, int steps,
                                            double total_time) {
  PulseSchedule schedule;
  schedule.steps = steps;
  schedule.total_time = total_time;
  if (set.elements.empty()) {
    throw ValidationError("empty_set",
                          "pulse schedules need an explicit element list");
  }
  for (const auto &e : set.elements)
    schedule.segments.push_back({e.probability, e.post});
  return schedule;
}

void PulseSchedule::validate(int dim) const {
  if (steps < 1) throw ValidationError("bad_schedule", "steps must be >= 1");
  double sum = 0.0;
  for (const auto &[u, op] : segments) {
    if (u <= 0.0) throw ValidationError("bad_schedule", "fractions positive");
    sum += u;
    if (!is_unitary(op, 1e-8) || op.rows() != dim) {
      throw ValidationError("bad_schedule", "control pulses must be unitary");
    }
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError("bad_schedule", "fractions must sum to one");
  }
}

ChoiState stroboscopic_evolve(const LindbladGenerator &z,
                              const PulseSchedule &schedule,
                              StroboscopicMode mode) {
  const int d = z.dim();
  schedule.validate(d);
  const ComplexMatrix sup = generator_superoperator(z);
  const double dt = schedule.total_time / schedule.steps;

  ComplexMatrix step(d * d, d * d);
  if (mode == StroboscopicMode::kSequential) {
    step = ComplexMatrix::identity(d * d);
    for (const auto &[u, op] : schedule.segments) {
      const ComplexMatrix c = conjugation_superoperator(op);
      const ComplexMatrix piece =
          c * mat_exp(sup * cplx(u * dt, 0.0)) * c.dagger();
      step = piece * step;
    }
  } else {
    const ComplexMatrix full = mat_exp(sup * cplx(dt, 0.0));
    for (const auto &[u, op] : schedule.segments) {
      const ComplexMatrix c = conjugation_superoperator(op);
      step += (c * full * c.dagger()) * cplx(u, 0.0);
    }
  }

  ComplexMatrix total = ComplexMatrix::identity(d * d);
  ComplexMatrix power = step;
  int m = schedule.steps;
  while (m > 0) {  // fast exponentiation; the loop order is irrelevant here
    if (m & 1) total = total * power;
    power = power * power;
    m >>= 1;
  }
  std::vector<int> factors(z.qubits, 2);
  const TensorShape shape(factors);
  return choi_from_map(
      [&](const ComplexMatrix &rho) {
        return unvec_of(total * vec_of(rho), d);
      },
      shape, shape);
}

namespace {

std::vector<std::pair<double, LindbladGenerator>> conjugated_family(
    const LindbladGenerator &z, const TwirlSet &set) {
  std::vector<std::pair<double, LindbladGenerator>> family;
  const auto &elements = set.elements;
  family.reserve(elements.size());
  for (const auto &e : elements) {
    family.push_back({e.probability, conjugate_generator(z, e.post)});
  }
  return family;
}

}  // namespace

LindbladGenerator decoherence_standard_form(const LindbladGenerator &z,
                                            DecoherenceLevel level) {
  if (max_abs(z.hamiltonian) > 1e-12) {
    throw ValidationError(
        "nonzero_hamiltonian",
        "decoherence standard form applies to H = 0 generators");
  }
  const TwirlSet set = level == DecoherenceLevel::kPauli
                           ? pauli_set(2, z.qubits)
                           : depolarizing_set(2, z.qubits);
  return average_generator(conjugated_family(z, set));
}

PauliChannelForm closed_form_pauli_channel(double l1, double l2, double l3,
                                           double t) {
  if (l1 < 0 || l2 < 0 || l3 < 0 || t < 0) {
    throw ValidationError("bad_rates",
                          "rates and time must be nonnegative");
  }
  const double ex = std::exp(-4.0 * (l2 + l3) * t);
  const double ey = std::exp(-4.0 * (l1 + l3) * t);
  const double ez = std::exp(-4.0 * (l1 + l2) * t);
  const double e0 = 0.25 * (1.0 + ex + ey + ez);
  const double e1 = 0.25 * (1.0 + ex - ey - ez);
  const double e2 = 0.25 * (1.0 - ex + ey - ez);
  const double e3 = 0.25 * (1.0 - ex - ey + ez);
  // Weight order follows the generalized-Pauli indices:
  // (0,0) = 1, (0,1) = X, (1,0) = Z, (1,1) ~ Y.
  return PauliChannelForm{2, 1, {e0, e1, e3, e2}};
}

IsingStandardForm ising_standard_form(const LindbladGenerator &z) {
  if (z.qubits != 2) {
    throw ValidationError("unsupported_shape",
                          "Ising standard form is two-qubit");
  }
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  const double g = (yy * z.hamiltonian).trace().real() / 4.0;
  if (max_abs(z.hamiltonian - yy * cplx(g, 0.0)) > 1e-10) {
    throw ValidationError("not_ising",
                          "Hamiltonian must be proportional to yy");
  }
  const TwirlSet set = phase_gate_set();
  const LindbladGenerator averaged =
      average_generator(conjugated_family(z, set));

  // The twirled Lamb shift lives on span{1, yy}; its identity part is a
  // global phase and the yy part is absorbed into the coupling.
  const double h00 = averaged.lamb_shift.trace().real() / 4.0;
  const double h22 = (yy * averaged.lamb_shift).trace().real() / 4.0;
  const ComplexMatrix residual = averaged.lamb_shift -
                                 ComplexMatrix::identity(4) * cplx(h00, 0.0) -
                                 yy * cplx(h22, 0.0);
  if (max_abs(residual) > 1e-9) {
    throw ValidationError("internal_error",
                          "twirled Lamb shift left the {1, yy} span");
  }
  const double g_prime = g + h22;
  if (g_prime <= 0.0) {
    throw InfeasibleError("time_cost_undefined",
                          "absorbed coupling g' is not positive");
  }
  IsingStandardForm out{
      LindbladGenerator{2, yy * cplx(g_prime, 0.0), ComplexMatrix(4, 4),
                        averaged.gks},
      g_prime, g / g_prime};
  return out;
}

void SimulationDecomposition::validate(const ComplexMatrix &source,
                                       const ComplexMatrix &target) const {
  if (time_cost <= 0.0) {
    throw ValidationError("bad_decomposition", "time cost must be positive");
  }
  if (max_abs(q1) > 1e-12 || max_abs(q2) > 1e-12) {
    throw ValidationError("bad_decomposition",
                          "local corrections Q1, Q2 must vanish here");
  }
  double total = 0.0;
  ComplexMatrix acc(source.rows(), source.cols());
  for (const auto &[v, op] : terms) {
    if (v <= 0.0) {
      throw ValidationError("bad_decomposition", "weights must be positive");
    }
    if (!is_unitary(op, 1e-8)) {
      throw ValidationError("bad_decomposition", "terms must be unitary");
    }
    total += v;
    acc += (op * source * op.dagger()) * cplx(v, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("bad_decomposition", "weights must sum to one");
  }
  acc *= cplx(time_cost, 0.0);
  if (max_abs(acc - target) > tol::form) {
    throw ValidationError("bad_decomposition",
                          "decomposition does not reproduce its target");
  }
}

ChainResult arbitrary_h_chain(const LindbladGenerator &z,
                              const SimulationDecomposition &fwd,
                              const SimulationDecomposition &bwd) {
  if (z.qubits != 2) {
    throw ValidationError("unsupported_shape", "chain is two-qubit");
  }
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  fwd.validate(z.hamiltonian, yy);
  bwd.validate(yy, z.hamiltonian);

  // Step 1: simulate H_y with H.
  std::vector<std::pair<double, LindbladGenerator>> family;
  for (const auto &[v, op] : fwd.terms) {
    family.push_back({v, conjugate_generator(z, op)});
  }
  const LindbladGenerator z_y = average_generator(family);

  // Step 2: depolarize the Ising-type dynamics.
  const IsingStandardForm ising = ising_standard_form(z_y);

  // Step 3: simulate back.
  family.clear();
  for (const auto &[w, op] : bwd.terms) {
    family.push_back({w, conjugate_generator(ising.generator, op)});
  }
  const LindbladGenerator chained = average_generator(family);

  const double cost = fwd.time_cost * ising.time_cost * bwd.time_cost;
  ChainResult result{
      LindbladGenerator{2, chained.hamiltonian * cplx(cost, 0.0),
                        chained.lamb_shift * cplx(cost, 0.0),
                        chained.gks * cplx(cost, 0.0)},
      cost, fwd.time_cost, ising.time_cost, bwd.time_cost};
  return result;
}

SimulationDecomposition axis_conjugation_decomposition(int axis, bool forward) {
  if (axis != 1 && axis != 3) {
    throw ValidationError("bad_decomposition",
                          "catalog covers xx and zz couplings");
  }
  // Rotation mapping sigma_axis -> +-sigma_y under conjugation; the sign
  // cancels between the two factors.
  const int rot_axis = axis == 3 ? 1 : 3;
  constexpr double kQuarterPi = 3.14159265358979323846 / 4.0;
  const double sgn = forward ? -1.0 : 1.0;
  const ComplexMatrix r =
      mat_exp(pauli(rot_axis) * cplx(0.0, sgn * kQuarterPi));
  SimulationDecomposition out;
  out.time_cost = 1.0;
  out.terms = {{1.0, kron(r, r)}};
  out.q1 = ComplexMatrix(2, 2);
  out.q2 = ComplexMatrix(2, 2);
  return out;
}

bool white_noise_generator_mix_feasible(const LindbladGenerator &z,
                                        const LindbladGenerator &separable,
                                        double weight, double tolerance) {
  if (weight < 0.0 || weight > 1.0) {
    throw ValidationError("bad_probability", "weight must lie in [0, 1]");
  }
  const ComplexMatrix mixed = z.gks * cplx(1.0 - weight, 0.0) +
                              separable.gks * cplx(weight, 0.0);
  const double level = mixed.trace().real() / mixed.rows();
  return max_abs(mixed - ComplexMatrix::identity(mixed.rows()) *
                             cplx(level, 0.0)) <= tolerance;
}

}  // namespace depolar
