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

#ifndef DEPOLAR_TESTS_SUPPORT_HPP_
#define DEPOLAR_TESTS_SUPPORT_HPP_

#include <random>

#include "depolar/channel.hpp"
#include "depolar/twirl.hpp"

namespace depolar::test {

inline std::mt19937 &rng() {
  static std::mt19937 engine(20260808);
  return engine;
}

inline double uniform(double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng());
}

inline ComplexMatrix random_matrix(int rows, int cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(dist(rng()), dist(rng()));
  return m;
}

inline ComplexMatrix random_hermitian(int n, double scale = 1.0) {
  const ComplexMatrix a = random_matrix(n, n);
  return (a + a.dagger()) * cplx(0.5 * scale, 0.0);
}

inline ComplexMatrix random_unitary(int n) {
  // Gram-Schmidt on a random complex matrix.
  ComplexMatrix a = random_matrix(n, n);
  for (int col = 0; col < n; ++col) {
    for (int prev = 0; prev < col; ++prev) {
      cplx overlap = 0.0;
      for (int i = 0; i < n; ++i)
        overlap += std::conj(a(i, prev)) * a(i, col);
      for (int i = 0; i < n; ++i) a(i, col) -= overlap * a(i, prev);
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(a(i, col));
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) a(i, col) /= norm;
  }
  return a;
}

// Random trace-preserving Kraus set on matching dimensions.
inline KrausSet random_tp_kraus(int d, int count = 3) {
  KrausSet set;
  std::vector<ComplexMatrix> raw;
  ComplexMatrix total(d, d);
  for (int i = 0; i < count; ++i) {
    raw.push_back(random_matrix(d, d));
    total += raw.back().dagger() * raw.back();
  }
  const HermEig eig = herm_eig(total);
  ComplexMatrix inv_sqrt(d, d);
  for (int i = 0; i < d; ++i) {
    ComplexMatrix v(d, 1);
    for (int r = 0; r < d; ++r) v(r, 0) = eig.eigenvectors(r, i);
    inv_sqrt += (v * v.dagger()) * cplx(1.0 / std::sqrt(eig.eigenvalues[i]), 0.0);
  }
  for (auto &k : raw) set.operators.push_back(k * inv_sqrt);
  return set;
}

inline ChoiState random_channel(const TensorShape &shape, int kraus = 3) {
  return choi_from_kraus(random_tp_kraus(shape.dim(), kraus), shape, shape);
}

// Noisy version of a unitary gate with Jamiolkowski fidelity close to f.
inline ChoiState noisy_gate(const ComplexMatrix &u, const TensorShape &shape,
                            double target_fidelity) {
  const ChoiState ideal = choi_of_unitary(u, shape);
  const ChoiState noise = random_channel(shape, 4);
  // Mixing weight tuned so the fidelity lands near the target.
  const double f_noise = state_fidelity(noise, bell_vector_of(u));
  const double eps = (1.0 - target_fidelity) / std::max(1e-12, 1.0 - f_noise);
  ChoiState out = ideal;
  out.matrix = ideal.matrix * cplx(1.0 - eps, 0.0) + noise.matrix * cplx(eps, 0.0);
  return out;
}

// Literal probability-weighted sum, independent of the twirl engine.
inline ChoiState brute_force_twirl(const ChoiState &e,
                                   const std::vector<TwirlElement> &elements) {
  ComplexMatrix acc(e.matrix.rows(), e.matrix.cols());
  for (const auto &el : elements) {
    const ComplexMatrix g = kron(el.post, el.pre.transpose());
    acc += (g * e.matrix * g.dagger()) * cplx(el.probability, 0.0);
  }
  return ChoiState{acc, e.in_shape, e.out_shape};
}

// Channel action through an explicit Kraus sum, used as the oracle for
// apply().
inline ComplexMatrix kraus_action(const KrausSet &set,
                                  const ComplexMatrix &rho) {
  ComplexMatrix out(set.operators.front().rows(),
                    set.operators.front().rows());
  for (const auto &k : set.operators) out += k * rho * k.dagger();
  return out;
}

}  // namespace depolar::test

#endif  // DEPOLAR_TESTS_SUPPORT_HPP_
