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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "depolar/json_io.hpp"

namespace {

using namespace depolar;

constexpr double kPi = 3.14159265358979323846;

ChoiState load_channel(const std::string &path) {
  return channel_from_json(read_text_file(path));
}

void emit(const std::string &report) { std::cout << report << std::endl; }

ComplexMatrix gate_matrix(const std::string &name, double alpha) {
  if (name == "swap") return swap_gate_matrix(2);
  if (name == "cnot") return cnot_gate_matrix();
  if (name == "phase") return phase_gate_matrix(alpha);
  throw ValidationError("bad_gate", "gate must be swap, cnot or phase");
}

TwirlSet named_set(const std::string &name, const ChoiState &e) {
  const int parties = e.in_shape.parties();
  const int d = e.in_shape.factors[0];
  if (name == "pauli") return pauli_set(d, parties);
  if (name == "depolarizing") return depolarizing_set(d, parties);
  if (name == "phase-gate") return phase_gate_set();
  if (name == "cnot") return cnot_extension_set();
  if (name == "cnot-gate") {
    // Conjugated variant stabilizing the CNOT itself rather than U(pi/4).
    const auto &bridge = cnot_bridge();
    return conjugate_set(phase_gate_set(), {bridge.u1, bridge.u2},
                         {bridge.v1, bridge.v2});
  }
  if (name == "swap") return swap_set(d);
  if (name.rfind("custom:", 0) == 0) {
    return twirl_set_from_json(read_text_file(name.substr(7)));
  }
  throw ValidationError("bad_set",
                        "set must be pauli, depolarizing, phase-gate, cnot, "
                        "cnot-gate, swap or custom:FILE");
}

std::string twirl_set_schedule_json(const TwirlSet &set) {
  MixingStage stage;
  stage.name = set.label;
  stage.choices = set.elements;
  return schedule_to_json({stage});
}

int run_validate(const std::string &in, const std::string &gate,
                 double alpha) {
  const ChoiState e = load_channel(in);
  e.validate_hermitian();
  std::string report = "{\"hermitian\":true";
  report += std::string(",\"cp\":") + (e.is_cp() ? "true" : "false");
  report += std::string(",\"tp\":") + (e.is_tp() ? "true" : "false");
  if (e.in_shape == e.out_shape) {
    const double f =
        jamiolkowski_fidelity(e, ComplexMatrix::identity(e.d_in()));
    report += ",\"fidelity_identity\":" + format_double(f);
    report += ",\"average_fidelity_identity\":" +
              format_double(average_fidelity(f, e.d_in()));
  }
  if (!gate.empty()) {
    const double f = jamiolkowski_fidelity(e, gate_matrix(gate, alpha));
    report += ",\"fidelity_gate\":" + format_double(f);
  }
  emit(report + "}");
  return 0;
}

int run_apply(const std::string &in, const std::string &state_path,
              const std::string &out) {
  const ChoiState e = load_channel(in);
  TensorShape shape;
  const ComplexMatrix rho =
      density_from_json(read_text_file(state_path), &shape);
  const ComplexMatrix result = apply(e, rho);
  const std::string payload = density_to_json(result, e.out_shape);
  if (!out.empty()) {
    write_text_file(out, payload);
    emit("{\"written\":\"" + out + "\"}");
  } else {
    emit(payload);
  }
  return 0;
}

int run_choi(const std::string &gate, double alpha, const std::string &out) {
  const ComplexMatrix u = gate_matrix(gate, alpha);
  const ChoiState e = choi_of_unitary(u, TensorShape{2, 2});
  write_text_file(out, channel_to_json(e));
  emit("{\"written\":\"" + out + "\",\"gate\":\"" + gate + "\"}");
  return 0;
}

int run_kraus(const std::string &in, const std::string &out) {
  const ChoiState e = load_channel(in);
  const KrausSet set = kraus_from_choi(e);
  const std::string payload = kraus_to_json(set);
  if (!out.empty()) {
    write_text_file(out, payload);
    emit("{\"written\":\"" + out + "\",\"rank\":" +
         std::to_string(set.operators.size()) + "}");
  } else {
    emit(payload);
  }
  return 0;
}

int run_twirl(const std::string &in, const std::string &set_name,
              const std::string &out, bool emit_schedule) {
  const ChoiState e = load_channel(in);
  const TwirlSet set = named_set(set_name, e);
  const ChoiState twirled = twirl(e, set);
  std::string report = "{\"set\":\"" + set.label + "\"";
  if (set.preserves) {
    report += ",\"fidelity_before\":" +
              format_double(state_fidelity(e, bell_vector_of(*set.preserves)));
    report += ",\"fidelity_after\":" +
              format_double(
                  state_fidelity(twirled, bell_vector_of(*set.preserves)));
  }
  if (set_name == "pauli") {
    const PauliChannelForm form = extract_pauli_channel(twirled);
    double off = 0.0;
    // Worst off-diagonal magnitude in the Bell product frame.
    const ChoiState recon = reconstruct_pauli_channel(form);
    off = max_abs(twirled.matrix - recon.matrix);
    report += ",\"weights\":[";
    for (size_t i = 0; i < form.weights.size(); ++i) {
      if (i) report += ",";
      report += format_double(form.weights[i]);
    }
    report += "],\"off_diagonal_residual\":" + format_double(off);
  }
  if (emit_schedule && !set.elements.empty()) {
    report += ",\"schedule\":" + twirl_set_schedule_json(set);
  }
  if (!out.empty()) {
    write_text_file(out, channel_to_json(twirled));
    report += ",\"written\":\"" + out + "\"";
  }
  emit(report + "}");
  return 0;
}

int run_form(const std::string &in, const std::string &gate, double alpha,
             const std::string &out) {
  const ChoiState e = load_channel(in);
  std::string payload;
  if (gate == "phase") {
    payload = phase_gate_form_to_json(extract_phase_gate_form(e, alpha));
  } else if (gate == "cnot") {
    payload = cnot_form_to_json(extract_cnot_form(e));
  } else if (gate == "swap") {
    payload = swap_form_to_json(extract_swap_form(e));
  } else if (gate == "pauli") {
    payload = pauli_form_to_json(extract_pauli_channel(e));
  } else if (gate == "white-noise") {
    payload = white_noise_form_to_json(extract_white_noise(e));
  } else {
    throw ValidationError("bad_gate",
                          "form target must be swap, cnot, phase, pauli or "
                          "white-noise");
  }
  if (!out.empty()) {
    write_text_file(out, payload);
    emit("{\"written\":\"" + out + "\"}");
  } else {
    emit(payload);
  }
  return 0;
}

int run_sacrifice(const std::string &in, const std::string &gate, double alpha,
                  const std::string &target, const std::string &out,
                  bool emit_schedule) {
  if (!target.empty() && target != "white-noise") {
    throw ValidationError("bad_target", "only --target white-noise exists");
  }
  const ChoiState e = load_channel(in);
  SacrificeResult result;
  if (gate == "swap") {
    result = swap_sacrifice(e);
  } else if (gate == "cnot") {
    result = cnot_sacrifice(e);
  } else if (gate == "phase") {
    result = phase_gate_sacrifice(e, alpha);
  } else {
    throw ValidationError("bad_gate",
                          "sacrifice target must be swap, cnot or phase");
  }
  std::string report = "{\"gate\":\"" + gate + "\"";
  report += ",\"fidelity_before\":" + format_double(result.fidelity_before);
  report += ",\"fidelity_after\":" + format_double(result.fidelity_after);
  report += ",\"noise_ratio\":" + format_double(result.noise_ratio);
  if (gate == "swap") {
    report += ",\"probabilities\":{";
    report += "\"p00\":" + format_double(result.probabilities.p00);
    report += ",\"p01\":" + format_double(result.probabilities.p01);
    report += ",\"p10\":" + format_double(result.probabilities.p10);
    report += ",\"p11\":" + format_double(result.probabilities.p11);
    report += ",\"r\":" + format_double(result.probabilities.r);
    report += ",\"s\":" + format_double(result.probabilities.s);
    report += ",\"t\":" + format_double(result.probabilities.t) + "}";
  }
  if (gate == "phase") {
    report += ",\"assumes_switchable\":true";
    report += ",\"mixing\":" +
              mixers_to_json(result.mixers, result.keep_probability);
  }
  if (emit_schedule && !result.stages.empty()) {
    report += ",\"schedule\":" + schedule_to_json(result.stages);
  }
  if (!out.empty() && result.has_output) {
    write_text_file(out, channel_to_json(result.output));
    report += ",\"written\":\"" + out + "\"";
  }
  emit(report + "}");
  return 0;
}

int run_lindblad(const std::string &in, double time, int steps,
                 const std::string &mode, const std::string &set_name,
                 const std::string &out, bool emit_schedule) {
  const LindbladGenerator z = generator_from_json(read_text_file(in));
  std::string report = "{\"time\":" + format_double(time);
  ChoiState result = evolve(z, time);
  if (!set_name.empty()) {
    ChoiState probe{ComplexMatrix(z.dim() * z.dim(), z.dim() * z.dim()),
                    TensorShape(std::vector<int>(z.qubits, 2)),
                    TensorShape(std::vector<int>(z.qubits, 2))};
    const TwirlSet set = named_set(set_name, probe);
    const PulseSchedule schedule =
        PulseSchedule::from_twirl_set(set, steps, time);
    const StroboscopicMode m = mode == "random"
                                   ? StroboscopicMode::kRandom
                                   : StroboscopicMode::kSequential;
    result = stroboscopic_evolve(z, schedule, m);

    // Exact target: evolution under the averaged generator.
    std::vector<std::pair<double, LindbladGenerator>> family;
    for (const auto &e : set.elements) {
      family.push_back({e.probability, conjugate_generator(z, e.post)});
    }
    const ChoiState exact = evolve(average_generator(family), time);
    report += ",\"steps\":" + std::to_string(steps);
    report += ",\"mode\":\"" + mode + "\"";
    report += ",\"set\":\"" + set.label + "\"";
    report +=
        ",\"trace_distance_to_exact\":" + format_double(trace_distance(result, exact));
    if (emit_schedule) {
      report += ",\"schedule\":" + twirl_set_schedule_json(set);
    }
  }
  if (!out.empty()) {
    write_text_file(out, channel_to_json(result));
    report += ",\"written\":\"" + out + "\"";
  }
  emit(report + "}");
  return 0;
}

int run_distance(const std::string &in, const std::string &in2) {
  const ChoiState a = load_channel(in);
  const ChoiState b = load_channel(in2);
  emit("{\"trace_distance\":" + format_double(trace_distance(a, b)) + "}");
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Choi-state toolkit: twirls, standard forms, designed "
               "depolarization and Lindblad stroboscopics"};
  app.require_subcommand(1);

  std::string in, in2, out, state, gate, set_name, target, mode = "sequential";
  double alpha = kPi / 4.0;
  double time = 1.0;
  int steps = 64;
  bool emit_schedule = false;

  auto *validate = app.add_subcommand("validate", "check CP/TP and fidelity");
  validate->add_option("--in", in)->required();
  validate->add_option("--gate", gate);
  validate->add_option("--alpha", alpha);

  auto *apply_cmd = app.add_subcommand("apply", "apply a channel to a state");
  apply_cmd->add_option("--in", in)->required();
  apply_cmd->add_option("--state", state)->required();
  apply_cmd->add_option("--out", out);

  auto *choi = app.add_subcommand("choi", "write an ideal gate Choi state");
  choi->add_option("--gate", gate)->required();
  choi->add_option("--alpha", alpha);
  choi->add_option("--out", out)->required();

  auto *kraus = app.add_subcommand("kraus", "extract Kraus operators");
  kraus->add_option("--in", in)->required();
  kraus->add_option("--out", out);

  auto *twirl_cmd = app.add_subcommand("twirl", "depolarize with a named set");
  twirl_cmd->add_option("--in", in)->required();
  twirl_cmd->add_option("--set", set_name)->required();
  twirl_cmd->add_option("--out", out);
  twirl_cmd->add_flag("--emit-schedule", emit_schedule);

  auto *form = app.add_subcommand("form", "extract standard-form parameters");
  form->add_option("--in", in)->required();
  form->add_option("--gate", gate)->required();
  form->add_option("--alpha", alpha);
  form->add_option("--out", out);

  auto *sacrifice = app.add_subcommand(
      "sacrifice", "trade fidelity for a global-white-noise form");
  sacrifice->add_option("--in", in)->required();
  sacrifice->add_option("--gate", gate)->required();
  sacrifice->add_option("--alpha", alpha);
  sacrifice->add_option("--target", target);
  sacrifice->add_option("--out", out);
  sacrifice->add_flag("--emit-schedule", emit_schedule);

  auto *lindblad = app.add_subcommand(
      "lindblad", "integrate or stroboscopically depolarize a generator");
  lindblad->add_option("--in", in)->required();
  lindblad->add_option("--time", time)->required();
  lindblad->add_option("--steps", steps);
  lindblad->add_option("--mode", mode)
      ->check(CLI::IsMember({"sequential", "random"}));
  lindblad->add_option("--set", set_name);
  lindblad->add_option("--out", out);
  lindblad->add_flag("--emit-schedule", emit_schedule);

  auto *distance = app.add_subcommand("distance", "trace distance of channels");
  distance->add_option("--in", in)->required();
  distance->add_option("--in2", in2)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(in, gate, alpha);
    if (apply_cmd->parsed()) return run_apply(in, state, out);
    if (choi->parsed()) return run_choi(gate, alpha, out);
    if (kraus->parsed()) return run_kraus(in, out);
    if (twirl_cmd->parsed())
      return run_twirl(in, set_name, out, emit_schedule);
    if (form->parsed()) return run_form(in, gate, alpha, out);
    if (sacrifice->parsed())
      return run_sacrifice(in, gate, alpha, target, out, emit_schedule);
    if (lindblad->parsed())
      return run_lindblad(in, time, steps, mode, set_name, out, emit_schedule);
    if (distance->parsed()) return run_distance(in, in2);
  } catch (const depolar::InfeasibleError &err) {
    std::cout << "{\"error\":{\"code\":\"" << err.code() << "\",\"message\":\""
              << err.what() << "\"}}" << std::endl;
    return 3;
  } catch (const depolar::Error &err) {
    std::cout << "{\"error\":{\"code\":\"" << err.code() << "\",\"message\":\""
              << err.what() << "\"}}" << std::endl;
    return 2;
  }
  return 1;
}
