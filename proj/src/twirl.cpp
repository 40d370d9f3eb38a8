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

#include "depolar/twirl.hpp"

#include <cmath>

namespace depolar {

namespace {

constexpr double kPi = 3.14159265358979323846;

ComplexMatrix embed_at_party(const ComplexMatrix &op, int party, int parties,
                             int d) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int p = 0; p < parties; ++p) {
    out = kron(out, p == party ? op : ComplexMatrix::identity(d));
  }
  return out;
}

// Sequential composition of two twirl stages: stage `second` is applied
// to the channel already twirled by `first`.
std::vector<TwirlElement> flatten(const std::vector<TwirlElement> &first,
                                  const std::vector<TwirlElement> &second) {
  std::vector<TwirlElement> out;
  out.reserve(first.size() * second.size());
  for (const auto &h : second) {
    for (const auto &g : first) {
      out.push_back(TwirlElement{h.probability * g.probability,
                                 g.pre * h.pre, h.post * g.post,
                                 h.label.empty() ? g.label
                                                 : (h.label + "*" + g.label)});
    }
  }
  return out;
}

std::vector<TwirlElement> flatten_stages(
    const std::vector<std::vector<TwirlElement>> &stages) {
  size_t total = 1;
  for (const auto &stage : stages) total *= stage.size();
  // Very large products stay implicit; twirling then runs stage by stage.
  if (total > 4096) return {};
  std::vector<TwirlElement> flat;
  for (const auto &stage : stages) {
    flat = flat.empty() ? stage : flatten(flat, stage);
  }
  return flat;
}

TwirlElement conjugation_element(double p, const ComplexMatrix &u,
                                 const std::string &label) {
  return TwirlElement{p, u.dagger(), u, label};
}

}  // namespace

void TwirlSet::validate() const {
  const auto check_group = [](const std::vector<TwirlElement> &group) {
    double sum = 0.0;
    for (const auto &e : group) {
      if (e.probability <= 0.0) {
        throw ValidationError("bad_probability",
                              "twirl probabilities must be positive");
      }
      sum += e.probability;
      if (!is_unitary(e.pre, 1e-8) || !is_unitary(e.post, 1e-8)) {
        throw ValidationError("not_unitary", "twirl element must be unitary");
      }
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw ValidationError("bad_probability",
                            "twirl probabilities must sum to one");
    }
  };
  if (!elements.empty()) check_group(elements);
  for (const auto &stage : stages) check_group(stage);
  if (elements.empty() && stages.empty()) {
    throw ValidationError("empty_set", "twirl set has no elements");
  }
  if (preserves && !stabilizes(*preserves)) {
    throw ValidationError("not_stabilizing",
                          "twirl set does not stabilize its target unitary");
  }
}

bool TwirlSet::stabilizes(const ComplexMatrix &u, double tolerance) const {
  const ComplexMatrix psi = bell_vector_of(u);
  const auto element_ok = [&](const TwirlElement &e) {
    const ComplexMatrix moved = kron(e.post, e.pre.transpose()) * psi;
    const ComplexMatrix overlap = psi.dagger() * moved;
    return std::abs(std::abs(overlap(0, 0)) - 1.0) <= tolerance;
  };
  if (!stages.empty()) {
    for (const auto &stage : stages)
      for (const auto &e : stage)
        if (!element_ok(e)) return false;
    return true;
  }
  for (const auto &e : elements)
    if (!element_ok(e)) return false;
  return true;
}

ChoiState twirl(const ChoiState &e, const TwirlSet &s) {
  const auto apply_stage = [](const ChoiState &state,
                              const std::vector<TwirlElement> &stage) {
    ComplexMatrix acc(state.matrix.rows(), state.matrix.cols());
    for (const auto &el : stage) {
      if (el.pre.rows() != state.d_in() || el.post.rows() != state.d_out()) {
        throw ValidationError("dimension_mismatch",
                              "twirl element dimension mismatch");
      }
      const ComplexMatrix g = kron(el.post, el.pre.transpose());
      acc += (g * state.matrix * g.dagger()) * cplx(el.probability, 0.0);
    }
    return ChoiState{std::move(acc), state.in_shape, state.out_shape,
                     state.trace_one};
  };
  if (!s.stages.empty()) {
    ChoiState out = e;
    for (const auto &stage : s.stages) out = apply_stage(out, stage);
    return out;
  }
  return apply_stage(e, s.elements);
}

TwirlSet pauli_set(int d, int parties) {
  if (d < 2 || parties < 1) {
    throw ValidationError("bad_dimension", "pauli_set needs d >= 2, parties >= 1");
  }
  TwirlSet set;
  set.label = "pauli";
  for (int party = 0; party < parties; ++party) {
    std::vector<TwirlElement> stage;
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        const ComplexMatrix u =
            embed_at_party(gen_pauli(d, k, l), party, parties, d);
        stage.push_back(conjugation_element(
            1.0 / (d * d), u,
            "U" + std::to_string(k) + std::to_string(l) + "@" +
                std::to_string(party)));
      }
    }
    set.stages.push_back(std::move(stage));
  }
  set.elements = flatten_stages(set.stages);
  set.preserves = ComplexMatrix::identity(static_cast<int>(std::pow(d, parties)));
  return set;
}

namespace {

// Qubit Clifford rotations Q_k = exp(i pi/4 sigma_k).
ComplexMatrix qubit_q(int k) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix q = ComplexMatrix::identity(2) * cplx(s, 0.0);
  q += pauli(k) * cplx(0.0, s);
  return q;
}

std::vector<std::pair<std::string, ComplexMatrix>> clifford_mixers(
    int d, bool enumerated) {
  std::vector<std::pair<std::string, ComplexMatrix>> out;
  if (d == 2 && !enumerated) {
    for (int k = 1; k <= 3; ++k)
      out.push_back({"Q" + std::to_string(k), qubit_q(k)});
    return out;
  }
  for (const auto &[sym, q] : clifford_group(d)) {
    out.push_back({"C" + std::to_string(sym.a) + std::to_string(sym.b) +
                       std::to_string(sym.c) + std::to_string(sym.e),
                   q});
  }
  return out;
}

TwirlSet depolarizing_like_set(int d, int parties, bool enumerated) {
  if (parties < 1) {
    throw ValidationError("bad_dimension", "need parties >= 1");
  }
  const auto mixers = clifford_mixers(d, enumerated);
  TwirlSet set;
  set.label = enumerated ? "clifford-depolarizing" : "depolarizing";
  for (int party = 0; party < parties; ++party) {
    std::vector<TwirlElement> pauli_stage;
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        pauli_stage.push_back(conjugation_element(
            1.0 / (d * d), embed_at_party(gen_pauli(d, k, l), party, parties, d),
            "U" + std::to_string(k) + std::to_string(l) + "@" +
                std::to_string(party)));
      }
    }
    std::vector<TwirlElement> clifford_stage;
    for (const auto &[name, q] : mixers) {
      clifford_stage.push_back(conjugation_element(
          1.0 / mixers.size(), embed_at_party(q, party, parties, d),
          name + "@" + std::to_string(party)));
    }
    set.stages.push_back(std::move(pauli_stage));
    set.stages.push_back(std::move(clifford_stage));
  }
  set.elements = flatten_stages(set.stages);
  set.preserves = ComplexMatrix::identity(static_cast<int>(std::pow(d, parties)));
  return set;
}

}  // namespace

TwirlSet depolarizing_set(int d, int parties) {
  return depolarizing_like_set(d, parties, /*enumerated=*/d != 2);
}

TwirlSet clifford_depolarizing_set(int d, int parties) {
  return depolarizing_like_set(d, parties, /*enumerated=*/true);
}

TwirlSet phase_gate_set() {
  const ComplexMatrix one = ComplexMatrix::identity(2);
  const ComplexMatrix ry = mat_exp(pauli(2) * cplx(0.0, -kPi / 4.0));

  std::vector<std::vector<std::pair<std::string, ComplexMatrix>>> groups = {
      // U3: sigma_y before-and-after per qubit.
      {{"1", kron(one, one)},
       {"YA", kron(pauli(2), one)},
       {"YB", kron(one, pauli(2))},
       {"YY", kron(pauli(2), pauli(2))}},
      // U2: correlated sigma_x sigma_x.
      {{"1", kron(one, one)}, {"XX", kron(pauli(1), pauli(1))}},
      // U1: y-axis pi/2 rotations per qubit.
      {{"1", kron(one, one)},
       {"RA", kron(ry, one)},
       {"RB", kron(one, ry)},
       {"RR", kron(ry, ry)}},
  };

  TwirlSet set;
  set.label = "phase-gate";
  for (const auto &group : groups) {
    std::vector<TwirlElement> stage;
    for (const auto &[name, u] : group) {
      stage.push_back(conjugation_element(1.0 / group.size(), u, name));
    }
    set.stages.push_back(std::move(stage));
  }
  set.elements = flatten_stages(set.stages);
  set.preserves = phase_gate_matrix(kPi / 4.0);
  // The set stabilizes |Psi_alpha> for every alpha, not only pi/4.
  for (double alpha : {0.1, kPi / 4.0, 1.0}) {
    if (!set.stabilizes(phase_gate_matrix(alpha))) {
      throw ValidationError("not_stabilizing",
                            "phase-gate set failed its stabilizer check");
    }
  }
  return set;
}

TwirlSet cnot_extension_set() {
  const ComplexMatrix one = ComplexMatrix::identity(4);
  // W on qubit A: nothing before, i sigma_y after. Wtilde on qubit B:
  // sigma_z before, sigma_x after.
  const ComplexMatrix i_sy = pauli(2) * cplx(0.0, 1.0);
  TwirlSet set;
  set.label = "cnot";
  set.elements.push_back({0.5, one, one, "1"});
  set.elements.push_back({0.5, kron(ComplexMatrix::identity(2), pauli(3)),
                          kron(i_sy, pauli(1)), "WWt"});
  set.preserves = phase_gate_matrix(kPi / 4.0);
  return set;
}

TwirlSet swap_set(int d) {
  // Stabilizers of |Psi_SWAP> are U^A (x) U*^B' (x) V^B (x) V*^A'; running
  // the per-party depolarizing construction in the crossed pairing gives
  // stage U: pre = U^T (x) 1, post = 1 (x) U*, and stage V mirrored.
  const TwirlSet base = depolarizing_set(d, 1);
  const ComplexMatrix one = ComplexMatrix::identity(d);
  TwirlSet set;
  set.label = "swap";
  std::vector<TwirlElement> stage_u, stage_v;
  for (const auto &e : base.elements) {
    const ComplexMatrix &u = e.post;
    stage_u.push_back(TwirlElement{e.probability, kron(u.transpose(), one),
                                   kron(one, u.conjugate()), e.label + "@A"});
    stage_v.push_back(TwirlElement{e.probability, kron(one, u.transpose()),
                                   kron(u.conjugate(), one), e.label + "@B"});
  }
  set.stages.push_back(std::move(stage_u));
  set.stages.push_back(std::move(stage_v));
  set.elements = flatten_stages(set.stages);
  set.preserves = swap_gate_matrix(d);
  return set;
}

TwirlSet conjugate_set(const TwirlSet &s,
                       const std::vector<ComplexMatrix> &left_locals,
                       const std::vector<ComplexMatrix> &right_locals) {
  ComplexMatrix left = ComplexMatrix::identity(1);
  for (const auto &u : left_locals) left = kron(left, u);
  ComplexMatrix right = ComplexMatrix::identity(1);
  for (const auto &u : right_locals) right = kron(right, u);

  // State side this is conjugation by left (x) right^T; on the circuit
  // side the pre unitary picks up the inverse pair.
  const auto conj_el = [&](const TwirlElement &e) {
    return TwirlElement{e.probability, right.dagger() * e.pre * right,
                        left * e.post * left.dagger(), e.label};
  };
  TwirlSet out;
  out.label = s.label + "-conjugated";
  for (const auto &e : s.elements) out.elements.push_back(conj_el(e));
  for (const auto &stage : s.stages) {
    std::vector<TwirlElement> mapped;
    for (const auto &e : stage) mapped.push_back(conj_el(e));
    out.stages.push_back(std::move(mapped));
  }
  if (s.preserves) out.preserves = left * (*s.preserves) * right;
  return out;
}

TwirlSet custom_set(std::vector<TwirlElement> elements,
                    const std::string &label) {
  TwirlSet set;
  set.label = label;
  set.elements = std::move(elements);
  set.validate();
  return set;
}

}  // namespace depolar
