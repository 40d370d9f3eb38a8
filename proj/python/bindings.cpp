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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "depolar/json_io.hpp"

namespace py = pybind11;
using namespace depolar;

namespace {

using NpMatrix =
    py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const NpMatrix &arr) {
  if (arr.ndim() == 1) {
    ComplexMatrix m(static_cast<int>(arr.shape(0)), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = arr.at(i);
    return m;
  }
  if (arr.ndim() != 2) {
    throw ValidationError("bad_schema", "expected a 1D or 2D array");
  }
  ComplexMatrix m(static_cast<int>(arr.shape(0)),
                  static_cast<int>(arr.shape(1)));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = arr.at(i, j);
  return m;
}

py::array_t<std::complex<double>> to_numpy(const ComplexMatrix &m) {
  py::array_t<std::complex<double>> arr({m.rows(), m.cols()});
  auto buf = arr.mutable_unchecked<2>();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) buf(i, j) = m(i, j);
  return arr;
}

TensorShape shape_of(const std::vector<int> &dims) { return TensorShape(dims); }

TwirlSet named_set(const std::string &name, int d, int parties) {
  if (name == "pauli") return pauli_set(d, parties);
  if (name == "depolarizing") return depolarizing_set(d, parties);
  if (name == "clifford-depolarizing") return clifford_depolarizing_set(d, parties);
  if (name == "phase-gate") return phase_gate_set();
  if (name == "cnot") return cnot_extension_set();
  if (name == "cnot-gate") {
    const auto &bridge = cnot_bridge();
    return conjugate_set(phase_gate_set(), {bridge.u1, bridge.u2},
                         {bridge.v1, bridge.v2});
  }
  if (name == "swap") return swap_set(d);
  throw ValidationError("bad_set", "unknown twirl set " + name);
}

py::dict sacrifice_dict(const SacrificeResult &r) {
  py::dict out;
  out["fidelity_before"] = r.fidelity_before;
  out["fidelity_after"] = r.fidelity_after;
  out["noise_ratio"] = r.noise_ratio;
  out["p"] = py::make_tuple(r.probabilities.p00, r.probabilities.p01,
                            r.probabilities.p10, r.probabilities.p11);
  out["rst"] = py::make_tuple(r.probabilities.r, r.probabilities.s,
                              r.probabilities.t);
  out["keep_probability"] = r.keep_probability;
  if (r.has_output) out["output"] = to_numpy(r.output.matrix);
  return out;
}

}  // namespace

PYBIND11_MODULE(_depolar, m) {
  m.doc() = "Choi-state toolkit: twirls, standard forms, designed "
            "depolarization and Lindblad stroboscopics";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<InfeasibleError>(m, "InfeasibleError");

  // --- linear algebra -----------------------------------------------------
  m.def("kron", [](const NpMatrix &a, const NpMatrix &b) {
    return to_numpy(kron(to_matrix(a), to_matrix(b)));
  });
  m.def("mat_exp",
        [](const NpMatrix &a) { return to_numpy(mat_exp(to_matrix(a))); });
  m.def("herm_eig", [](const NpMatrix &a) {
    const HermEig eig = herm_eig(to_matrix(a));
    return py::make_tuple(eig.eigenvalues, to_numpy(eig.eigenvectors));
  });
  m.def("partial_trace", [](const NpMatrix &a, const std::vector<int> &dims,
                            const std::vector<int> &keep) {
    return to_numpy(partial_trace(to_matrix(a), shape_of(dims), keep));
  });
  m.def("partial_transpose",
        [](const NpMatrix &a, const std::vector<int> &dims, int subsystem) {
          return to_numpy(
              partial_transpose(to_matrix(a), shape_of(dims), subsystem));
        });

  // --- operators ----------------------------------------------------------
  m.def("pauli", [](int i) { return to_numpy(pauli(i)); });
  m.def("gen_pauli",
        [](int d, int k, int l) { return to_numpy(gen_pauli(d, k, l)); });
  m.def("bell_state", [](int d, int k, int l) {
    return to_numpy(bell_state(d, k, l).amplitudes);
  });
  m.def("swap_gate", [](int d) { return to_numpy(swap_gate_matrix(d)); },
        py::arg("d") = 2);
  m.def("cnot_gate", [] { return to_numpy(cnot_gate_matrix()); });
  m.def("phase_gate",
        [](double alpha) { return to_numpy(phase_gate_matrix(alpha)); });
  m.def("clifford_group", [](int d) {
    py::list out;
    for (const auto &[sym, q] : clifford_group(d)) {
      out.append(py::make_tuple(py::make_tuple(sym.a, sym.b, sym.c, sym.e),
                                to_numpy(q)));
    }
    return out;
  });

  // --- channels -----------------------------------------------------------
  py::class_<ChoiState>(m, "ChoiState")
      .def(py::init([](const NpMatrix &matrix, const std::vector<int> &in_dims,
                       const std::vector<int> &out_dims) {
             ChoiState e{to_matrix(matrix), shape_of(in_dims),
                         shape_of(out_dims)};
             e.validate_hermitian();
             return e;
           }),
           py::arg("matrix"), py::arg("in_dims"), py::arg("out_dims"))
      .def_property_readonly(
          "matrix", [](const ChoiState &e) { return to_numpy(e.matrix); })
      .def_property_readonly(
          "in_dims", [](const ChoiState &e) { return e.in_shape.factors; })
      .def_property_readonly(
          "out_dims", [](const ChoiState &e) { return e.out_shape.factors; })
      .def("is_cp", [](const ChoiState &e) { return e.is_cp(); })
      .def("is_tp", [](const ChoiState &e) { return e.is_tp(); })
      .def("to_json", [](const ChoiState &e) { return channel_to_json(e); });

  m.def("channel_from_json",
        [](const std::string &text) { return channel_from_json(text); });
  m.def("choi_of_unitary",
        [](const NpMatrix &u, const std::vector<int> &dims) {
          return choi_of_unitary(to_matrix(u), shape_of(dims));
        });
  m.def("choi_from_kraus", [](const std::vector<NpMatrix> &ops,
                              const std::vector<int> &in_dims,
                              const std::vector<int> &out_dims) {
    KrausSet set;
    for (const auto &k : ops) set.operators.push_back(to_matrix(k));
    return choi_from_kraus(set, shape_of(in_dims), shape_of(out_dims));
  });
  m.def("isotropic_choi", [](int d, double fidelity) {
    return isotropic_choi(d, fidelity);
  });
  m.def("apply_channel", [](const ChoiState &e, const NpMatrix &rho) {
    return to_numpy(apply(e, to_matrix(rho)));
  });
  m.def("kraus_from_choi", [](const ChoiState &e) {
    py::list out;
    for (const auto &k : kraus_from_choi(e).operators) out.append(to_numpy(k));
    return out;
  });
  m.def("sandwich", [](const ChoiState &e, const NpMatrix &b_out,
                       const NpMatrix &c_out, const NpMatrix &b_in,
                       const NpMatrix &c_in) {
    return sandwich(e, to_matrix(b_out), to_matrix(c_out), to_matrix(b_in),
                    to_matrix(c_in));
  });
  m.def("jamiolkowski_fidelity", [](const ChoiState &e, const NpMatrix &u) {
    return jamiolkowski_fidelity(e, to_matrix(u));
  });
  m.def("average_fidelity", &average_fidelity);
  m.def("trace_distance", [](const ChoiState &a, const ChoiState &b) {
    return trace_distance(a, b);
  });
  m.def("is_entanglement_breaking",
        [](const ChoiState &e) { return is_entanglement_breaking(e); });
  m.def("purify", [](const ChoiState &e) {
    const Purification p = purify(e);
    return py::make_tuple(to_numpy(p.unitary), p.env_dim);
  });

  // --- twirling -----------------------------------------------------------
  py::class_<TwirlSet>(m, "TwirlSet")
      .def_readonly("label", &TwirlSet::label)
      .def_property_readonly(
          "size", [](const TwirlSet &s) { return s.elements.size(); })
      .def("stabilizes", [](const TwirlSet &s, const NpMatrix &u) {
        return s.stabilizes(to_matrix(u));
      });
  m.def("twirl_set", &named_set, py::arg("name"), py::arg("d") = 2,
        py::arg("parties") = 1);
  m.def("twirl", [](const ChoiState &e, const TwirlSet &s) {
    return twirl(e, s);
  });

  // --- standard forms -----------------------------------------------------
  m.def("extract_pauli_channel", [](const ChoiState &e) {
    const PauliChannelForm f = extract_pauli_channel(e);
    py::dict out;
    out["d"] = f.d;
    out["parties"] = f.parties;
    out["weights"] = f.weights;
    return out;
  });
  m.def("extract_white_noise", [](const ChoiState &e) {
    const WhiteNoiseForm f = extract_white_noise(e);
    py::dict out;
    out["d"] = f.d;
    out["parties"] = f.parties;
    out["alphas"] = f.alphas;
    return out;
  });
  m.def("extract_phase_gate_form", [](const ChoiState &e, double alpha) {
    const PhaseGateForm f = extract_phase_gate_form(e, alpha);
    py::dict out;
    out["alpha"] = f.alpha;
    out["fidelity"] = f.f;
    out["a"] = f.a;
    out["a_tilde"] = f.a_t;
    out["b"] = f.b;
    out["b_tilde"] = f.b_t;
    out["u"] = f.u;
    out["v"] = f.v;
    out["c"] = f.c;
    out["c_tilde"] = f.c_t;
    out["w"] = f.w;
    out["d"] = f.d;
    out["d_tilde"] = f.d_t;
    out["x"] = f.x;
    out["e"] = f.e;
    out["e_tilde"] = f.e_t;
    return out;
  });
  m.def("extract_cnot_form", [](const ChoiState &e) {
    const CnotForm f = extract_cnot_form(e);
    py::dict out;
    out["fidelity"] = f.f;
    out["a"] = f.a;
    out["b"] = f.b;
    out["u"] = f.u;
    out["v"] = f.v;
    out["c"] = f.c;
    out["w"] = f.w;
    out["d"] = f.d;
    out["x"] = f.x;
    out["e"] = f.e;
    return out;
  });
  m.def("extract_swap_form", [](const ChoiState &e) {
    const SwapForm f = extract_swap_form(e);
    py::dict out;
    out["fidelity"] = f.f;
    out["alphas"] = py::make_tuple(f.alphas[0], f.alphas[1], f.alphas[2],
                                   f.alphas[3]);
    return out;
  });

  // --- sacrifice ----------------------------------------------------------
  m.def("identity_sacrifice",
        [](double e00, double e01, double e10, double e11) {
          return sacrifice_dict(
              identity_sacrifice(IsotropicVector{e00, e01, e10, e11}));
        });
  m.def("swap_sacrifice",
        [](const ChoiState &e) { return sacrifice_dict(swap_sacrifice(e)); });
  m.def("cnot_sacrifice",
        [](const ChoiState &e) { return sacrifice_dict(cnot_sacrifice(e)); });
  m.def("phase_gate_sacrifice", [](const ChoiState &e, double alpha) {
    return sacrifice_dict(phase_gate_sacrifice(e, alpha));
  });

  // --- Lindblad dynamics ----------------------------------------------------
  py::class_<LindbladGenerator>(m, "LindbladGenerator")
      .def(py::init([](const NpMatrix &h, const NpMatrix &hl,
                       const NpMatrix &gks, int qubits) {
             LindbladGenerator z{qubits, to_matrix(h), to_matrix(hl),
                                 to_matrix(gks)};
             z.validate();
             return z;
           }),
           py::arg("hamiltonian"), py::arg("lamb_shift"), py::arg("gks"),
           py::arg("qubits"))
      .def_property_readonly(
          "hamiltonian",
          [](const LindbladGenerator &z) { return to_numpy(z.hamiltonian); })
      .def_property_readonly(
          "lamb_shift",
          [](const LindbladGenerator &z) { return to_numpy(z.lamb_shift); })
      .def_property_readonly(
          "gks", [](const LindbladGenerator &z) { return to_numpy(z.gks); })
      .def("to_json",
           [](const LindbladGenerator &z) { return generator_to_json(z); });

  m.def("generator_from_json",
        [](const std::string &text) { return generator_from_json(text); });
  m.def("generator_superoperator", [](const LindbladGenerator &z) {
    return to_numpy(generator_superoperator(z));
  });
  m.def("evolve",
        [](const LindbladGenerator &z, double t) { return evolve(z, t); });
  m.def("conjugate_generator",
        [](const LindbladGenerator &z, const NpMatrix &u) {
          return conjugate_generator(z, to_matrix(u));
        });
  m.def("stroboscopic_evolve",
        [](const LindbladGenerator &z, const std::string &set_name, int steps,
           double total_time, const std::string &mode) {
          const TwirlSet set = named_set(set_name, 2, z.qubits);
          const PulseSchedule schedule =
              PulseSchedule::from_twirl_set(set, steps, total_time);
          return stroboscopic_evolve(z, schedule,
                                     mode == "random"
                                         ? StroboscopicMode::kRandom
                                         : StroboscopicMode::kSequential);
        },
        py::arg("generator"), py::arg("set_name"), py::arg("steps"),
        py::arg("total_time"), py::arg("mode") = "sequential");
  m.def("decoherence_standard_form",
        [](const LindbladGenerator &z, const std::string &level) {
          return decoherence_standard_form(
              z, level == "depolarizing" ? DecoherenceLevel::kDepolarizing
                                         : DecoherenceLevel::kPauli);
        });
  m.def("closed_form_pauli_channel",
        [](double l1, double l2, double l3, double t) {
          return closed_form_pauli_channel(l1, l2, l3, t).weights;
        });
  m.def("ising_standard_form", [](const LindbladGenerator &z) {
    const IsingStandardForm f = ising_standard_form(z);
    return py::make_tuple(f.generator, f.coupling, f.time_cost);
  });
  m.def("arbitrary_h_chain", [](const LindbladGenerator &z, int axis) {
    const ChainResult r =
        arbitrary_h_chain(z, axis_conjugation_decomposition(axis, true),
                          axis_conjugation_decomposition(axis, false));
    py::dict out;
    out["generator"] = r.generator;
    out["time_cost"] = r.time_cost;
    out["c_v"] = r.c_v;
    out["c_y"] = r.c_y;
    out["c_w"] = r.c_w;
    return out;
  });
}
