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

#include "depolar/pauli.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace depolar {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const ComplexMatrix &pauli(int i) {
  static const ComplexMatrix sigma[4] = {
      ComplexMatrix::identity(2),
      {{0.0, 1.0}, {1.0, 0.0}},
      {{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}},
      {{1.0, 0.0}, {0.0, -1.0}},
  };
  if (i < 0 || i > 3) throw ValidationError("bad_index", "pauli index in 0..3");
  return sigma[i];
}

ComplexMatrix gen_pauli(int d, int k, int l) {
  if (d < 2 || k < 0 || k >= d || l < 0 || l >= d) {
    throw ValidationError("bad_index", "gen_pauli indices must satisfy 0 <= k,l < d");
  }
  ComplexMatrix u(d, d);
  for (int m = 0; m < d; ++m) {
    const double arg = 2.0 * kPi * k * m / d;
    u((m + l) % d, m) = cplx(std::cos(arg), std::sin(arg));
  }
  return u;
}

ComplexMatrix bell_vector_of(const ComplexMatrix &u) {
  const int d = u.rows();
  ComplexMatrix v(d * d, 1);
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i * d + j, 0) = u(i, j) * inv;
  return v;
}

BellVector bell_state(int d, int k, int l) {
  return BellVector{d, k, l, bell_vector_of(gen_pauli(d, k, l))};
}

ComplexMatrix max_entangled_projector(int d) {
  const ComplexMatrix v = bell_vector_of(ComplexMatrix::identity(d));
  return v * v.dagger();
}

namespace {

// Fixes the global phase: first entry of the first column with magnitude
// above threshold becomes real positive.
ComplexMatrix canonical_phase(const ComplexMatrix &q) {
  for (int j = 0; j < q.cols(); ++j) {
    for (int i = 0; i < q.rows(); ++i) {
      if (std::abs(q(i, j)) > 1e-8) {
        const cplx phase = std::abs(q(i, j)) / q(i, j);
        return q * phase;
      }
    }
  }
  return q;
}

int mod_pos(int x, int d) { return ((x % d) + d) % d; }

SymplecticMap compose(const SymplecticMap &x, const SymplecticMap &y) {
  const int d = x.d;
  return SymplecticMap{d, mod_pos(x.a * y.a + x.b * y.c, d),
                       mod_pos(x.a * y.b + x.b * y.e, d),
                       mod_pos(x.c * y.a + x.e * y.c, d),
                       mod_pos(x.c * y.b + x.e * y.e, d)};
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int i = 2; i * i <= d; ++i)
    if (d % i == 0) return false;
  return true;
}

}  // namespace

std::vector<std::pair<SymplecticMap, ComplexMatrix>> clifford_group(int d) {
  if (!is_prime(d) || d > 5) {
    throw ValidationError("bad_dimension",
                          "clifford_group enumerates prime d <= 5 only");
  }
  // Generators: Fourier F (C_F = [[0,1],[-1,0]]) and the quadratic phase
  // gate P (C_P = [[1,1],[0,1]]); they generate all of SL(2, Z_d).
  const int dim = d;
  ComplexMatrix fourier(dim, dim);
  const double inv = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) {
      const double arg = 2.0 * kPi * m * n / dim;
      fourier(m, n) = cplx(std::cos(arg) * inv, std::sin(arg) * inv);
    }
  ComplexMatrix quad(dim, dim);
  if (d == 2) {
    quad(0, 0) = 1.0;
    quad(1, 1) = cplx(0.0, 1.0);  // S gate
  } else {
    const int half = (d + 1) / 2;  // inverse of 2 mod d
    for (int m = 0; m < dim; ++m) {
      const double arg = 2.0 * kPi * half * m * m / d;
      quad(m, m) = cplx(std::cos(arg), std::sin(arg));
    }
  }
  const SymplecticMap sym_f{d, 0, 1, mod_pos(-1, d), 0};
  const SymplecticMap sym_p{d, 1, 1, 0, 1};

  std::map<std::tuple<int, int, int, int>, ComplexMatrix> found;
  auto key = [](const SymplecticMap &s) {
    return std::make_tuple(s.a, s.b, s.c, s.e);
  };
  std::vector<SymplecticMap> frontier;
  const SymplecticMap id{d, 1, 0, 0, 1};
  found[key(id)] = ComplexMatrix::identity(dim);
  frontier.push_back(id);
  const std::pair<SymplecticMap, ComplexMatrix> gens[2] = {{sym_f, fourier},
                                                           {sym_p, quad}};
  while (!frontier.empty()) {
    std::vector<SymplecticMap> next;
    for (const auto &s : frontier) {
      const ComplexMatrix &q = found.at(key(s));
      for (const auto &g : gens) {
        const SymplecticMap sn = compose(g.first, s);
        if (found.count(key(sn))) continue;
        found[key(sn)] = canonical_phase(g.second * q);
        next.push_back(sn);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<SymplecticMap, ComplexMatrix>> result;
  result.reserve(found.size());
  for (const auto &entry : found) {
    const auto &[a, b, c, e] = entry.first;
    result.push_back({SymplecticMap{d, a, b, c, e}, entry.second});
  }
  return result;
}

ComplexMatrix swap_gate_matrix(int d) {
  ComplexMatrix u(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) u(j * d + i, i * d + j) = 1.0;
  return u;
}

ComplexMatrix cnot_gate_matrix() {
  ComplexMatrix u(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

ComplexMatrix phase_gate_matrix(double alpha) {
  if (!std::isfinite(alpha)) {
    throw ValidationError("non_finite_entry", "phase gate angle must be finite");
  }
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  ComplexMatrix u = ComplexMatrix::identity(4) * cplx(std::cos(alpha), 0.0);
  u -= yy * cplx(0.0, std::sin(alpha));
  return u;
}

TwoQubitGate gate(GateKind kind, double alpha) {
  switch (kind) {
    case GateKind::SWAP:
      return {kind, 0.0, swap_gate_matrix(2)};
    case GateKind::CNOT:
      return {kind, 0.0, cnot_gate_matrix()};
    case GateKind::PHASE:
      return {kind, alpha, phase_gate_matrix(alpha)};
  }
  throw ValidationError("bad_gate", "unknown gate kind");
}

const CnotBridge &cnot_bridge() {
  static const double s = 1.0 / std::sqrt(2.0);
  static const CnotBridge bridge{
      ComplexMatrix{{s, cplx(0, -s)}, {-s, cplx(0, -s)}},
      ComplexMatrix{{1.0, 0.0}, {0.0, cplx(0, -1)}},
      ComplexMatrix{{s, cplx(0, s)}, {cplx(0, s), s}},
      ComplexMatrix{{s, cplx(0, s)}, {-s, cplx(0, s)}},
  };
  return bridge;
}

}  // namespace depolar
