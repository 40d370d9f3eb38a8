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

#include "depolar/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace depolar {

namespace {

using nlohmann::json;

json parse(const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ValidationError("bad_json", "input is not valid JSON");
  }
  return j;
}

ComplexMatrix matrix_from_parts(const json &re, const json &im, int rows,
                                int cols) {
  if (!re.is_array() || static_cast<int>(re.size()) != rows ||
      (!im.is_null() && (!im.is_array() || static_cast<int>(im.size()) != rows))) {
    throw ValidationError("bad_schema", "matrix row count mismatch");
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json &row_re = re[i];
    if (!row_re.is_array() || static_cast<int>(row_re.size()) != cols) {
      throw ValidationError("bad_schema", "matrix column count mismatch");
    }
    for (int j = 0; j < cols; ++j) {
      double real = row_re[j].get<double>();
      double imag = 0.0;
      if (!im.is_null()) imag = im[i][j].get<double>();
      if (!std::isfinite(real) || !std::isfinite(imag)) {
        throw ValidationError("non_finite_entry", "matrix entries must be finite");
      }
      m(i, j) = cplx(real, imag);
    }
  }
  return m;
}

std::vector<int> dims_from(const json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].empty()) {
    throw ValidationError("bad_schema",
                          std::string("missing dimension list ") + key);
  }
  std::vector<int> dims;
  for (const auto &v : j[key]) dims.push_back(v.get<int>());
  return dims;
}

std::string json_int_list(const std::vector<int> &v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string json_double_list(const std::vector<double> &v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_double(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string json_real_matrix(const ComplexMatrix &m, bool imaginary) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += format_double(imaginary ? m(i, j).imag() : m(i, j).real());
    }
    out += "]";
  }
  return out + "]";
}

std::string channel_to_json(const ChoiState &e) {
  std::string out = "{\"in_dims\":" + json_int_list(e.in_shape.factors);
  out += ",\"out_dims\":" + json_int_list(e.out_shape.factors);
  out += ",\"choi_re\":" + json_real_matrix(e.matrix, false);
  out += ",\"choi_im\":" + json_real_matrix(e.matrix, true);
  return out + "}\n";
}

ChoiState channel_from_json(const std::string &text) {
  const json j = parse(text);
  const TensorShape in_shape(dims_from(j, "in_dims"));
  const TensorShape out_shape(dims_from(j, "out_dims"));
  const int n = in_shape.dim() * out_shape.dim();
  if (!j.contains("choi_re")) {
    throw ValidationError("bad_schema", "missing choi_re");
  }
  ComplexMatrix m = matrix_from_parts(
      j["choi_re"], j.contains("choi_im") ? j["choi_im"] : json(), n, n);
  ChoiState e{std::move(m), in_shape, out_shape};
  e.validate_hermitian();
  return e;
}

std::string density_to_json(const ComplexMatrix &rho,
                            const TensorShape &shape) {
  std::string out = "{\"dims\":" + json_int_list(shape.factors);
  out += ",\"re\":" + json_real_matrix(rho, false);
  out += ",\"im\":" + json_real_matrix(rho, true);
  return out + "}\n";
}

ComplexMatrix density_from_json(const std::string &text, TensorShape *shape) {
  const json j = parse(text);
  const TensorShape s(dims_from(j, "dims"));
  const int n = s.dim();
  if (shape) *shape = s;
  return matrix_from_parts(j["re"], j.contains("im") ? j["im"] : json(), n, n);
}

std::string generator_to_json(const LindbladGenerator &z) {
  std::string out = "{\"H_re\":" + json_real_matrix(z.hamiltonian, false);
  out += ",\"H_im\":" + json_real_matrix(z.hamiltonian, true);
  out += ",\"Hl_re\":" + json_real_matrix(z.lamb_shift, false);
  out += ",\"Hl_im\":" + json_real_matrix(z.lamb_shift, true);
  out += ",\"gks_re\":" + json_real_matrix(z.gks, false);
  out += ",\"gks_im\":" + json_real_matrix(z.gks, true);
  out += ",\"basis\":\"pauli-lex\"";
  return out + "}\n";
}

LindbladGenerator generator_from_json(const std::string &text) {
  const json j = parse(text);
  if (j.contains("basis") && j["basis"].get<std::string>() != "pauli-lex") {
    throw ValidationError("bad_schema", "unsupported GKS basis tag");
  }
  if (!j.contains("H_re")) {
    throw ValidationError("bad_schema", "missing H_re");
  }
  const int d = static_cast<int>(j["H_re"].size());
  int qubits = 0;
  for (int n = d; n > 1; n /= 2) {
    if (n % 2 != 0) {
      throw ValidationError("bad_schema", "H dimension must be a power of 2");
    }
    ++qubits;
  }
  const int k = d * d - 1;
  LindbladGenerator z{
      qubits,
      matrix_from_parts(j["H_re"], j.contains("H_im") ? j["H_im"] : json(), d, d),
      matrix_from_parts(j["Hl_re"], j.contains("Hl_im") ? j["Hl_im"] : json(),
                        d, d),
      matrix_from_parts(j["gks_re"],
                        j.contains("gks_im") ? j["gks_im"] : json(), k, k)};
  z.validate();
  return z;
}

std::string kraus_to_json(const KrausSet &set) {
  std::string out = "{\"operators\":[";
  for (size_t i = 0; i < set.operators.size(); ++i) {
    if (i) out += ",";
    out += "{\"re\":" + json_real_matrix(set.operators[i], false);
    out += ",\"im\":" + json_real_matrix(set.operators[i], true) + "}";
  }
  return out + "]}\n";
}

TwirlSet twirl_set_from_json(const std::string &text) {
  const json j = parse(text);
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw ValidationError("bad_schema", "custom set needs an elements array");
  }
  std::vector<TwirlElement> elements;
  int index = 0;
  for (const auto &el : j["elements"]) {
    const double p = el.at("p").get<double>();
    const int n = static_cast<int>(el.at("pre_re").size());
    ComplexMatrix pre = matrix_from_parts(
        el["pre_re"], el.contains("pre_im") ? el["pre_im"] : json(), n, n);
    ComplexMatrix post = matrix_from_parts(
        el["post_re"], el.contains("post_im") ? el["post_im"] : json(), n, n);
    elements.push_back(TwirlElement{p, std::move(pre), std::move(post),
                                    "custom" + std::to_string(index++)});
  }
  return custom_set(std::move(elements));
}

std::string schedule_to_json(const std::vector<MixingStage> &stages) {
  std::string out = "[";
  for (size_t s = 0; s < stages.size(); ++s) {
    if (s) out += ",";
    out += "{\"stage\":\"" + stages[s].name + "\",\"choices\":[";
    for (size_t i = 0; i < stages[s].choices.size(); ++i) {
      const auto &e = stages[s].choices[i];
      if (i) out += ",";
      out += "{\"p\":" + format_double(e.probability);
      out += ",\"label\":\"" + e.label + "\"";
      out += ",\"pre_re\":" + json_real_matrix(e.pre, false);
      out += ",\"pre_im\":" + json_real_matrix(e.pre, true);
      out += ",\"post_re\":" + json_real_matrix(e.post, false);
      out += ",\"post_im\":" + json_real_matrix(e.post, true) + "}";
    }
    out += "]}";
  }
  return out + "]";
}

std::string pauli_form_to_json(const PauliChannelForm &form) {
  std::string out = "{\"form\":\"pauli-channel\",\"d\":" + std::to_string(form.d);
  out += ",\"parties\":" + std::to_string(form.parties);
  out += ",\"basis_ordering\":\"kl-lex\"";
  out += ",\"weights\":" + json_double_list(form.weights);
  return out + "}\n";
}

std::string white_noise_form_to_json(const WhiteNoiseForm &form) {
  std::string out = "{\"form\":\"white-noise\",\"d\":" + std::to_string(form.d);
  out += ",\"parties\":" + std::to_string(form.parties);
  out += ",\"basis_ordering\":\"phi-then-mixed\"";
  out += ",\"alphas\":" + json_double_list(form.alphas);
  return out + "}\n";
}

std::string phase_gate_form_to_json(const PhaseGateForm &form) {
  std::string out = "{\"form\":\"phase-gate\"";
  out += ",\"basis_ordering\":\"bell-parity-blocks\"";
  out += ",\"alpha\":" + format_double(form.alpha);
  out += ",\"fidelity\":" + format_double(form.f);
  out += ",\"a\":" + format_double(form.a);
  out += ",\"a_tilde\":" + format_double(form.a_t);
  out += ",\"b\":" + format_double(form.b);
  out += ",\"b_tilde\":" + format_double(form.b_t);
  out += ",\"u_re\":" + format_double(form.u.real());
  out += ",\"u_im\":" + format_double(form.u.imag());
  out += ",\"v_re\":" + format_double(form.v.real());
  out += ",\"v_im\":" + format_double(form.v.imag());
  out += ",\"c\":" + format_double(form.c);
  out += ",\"c_tilde\":" + format_double(form.c_t);
  out += ",\"w_re\":" + format_double(form.w.real());
  out += ",\"w_im\":" + format_double(form.w.imag());
  out += ",\"d\":" + format_double(form.d);
  out += ",\"d_tilde\":" + format_double(form.d_t);
  out += ",\"x_re\":" + format_double(form.x.real());
  out += ",\"x_im\":" + format_double(form.x.imag());
  out += ",\"e\":" + format_double(form.e);
  out += ",\"e_tilde\":" + format_double(form.e_t);
  return out + "}\n";
}

std::string cnot_form_to_json(const CnotForm &form) {
  std::string out = "{\"form\":\"cnot\"";
  out += ",\"basis_ordering\":\"bell-parity-blocks\"";
  out += ",\"fidelity\":" + format_double(form.f);
  out += ",\"a\":" + format_double(form.a);
  out += ",\"b\":" + format_double(form.b);
  out += ",\"u\":" + format_double(form.u);
  out += ",\"v\":" + format_double(form.v);
  out += ",\"c\":" + format_double(form.c);
  out += ",\"w\":" + format_double(form.w);
  out += ",\"d\":" + format_double(form.d);
  out += ",\"x\":" + format_double(form.x);
  out += ",\"e\":" + format_double(form.e);
  return out + "}\n";
}

std::string swap_form_to_json(const SwapForm &form) {
  std::string out = "{\"form\":\"swap\"";
  out += ",\"basis_ordering\":\"crossed-pairing\"";
  out += ",\"fidelity\":" + format_double(form.f);
  out += ",\"alphas\":" +
         json_double_list({form.alphas[0], form.alphas[1], form.alphas[2],
                           form.alphas[3]});
  return out + "}\n";
}

std::string mixers_to_json(const std::vector<SeparableMixer> &mixers,
                           double keep_probability) {
  std::string out =
      "{\"keep_probability\":" + format_double(keep_probability);
  out += ",\"mixers\":[";
  for (size_t i = 0; i < mixers.size(); ++i) {
    const auto &m = mixers[i];
    if (i) out += ",";
    out += "{\"weight\":" + format_double(m.weight);
    out += ",\"block\":" + std::to_string(m.block);
    if (m.diagonal) {
      out += ",\"kind\":\"diagonal\",\"position\":" + std::to_string(m.position);
    } else {
      out += ",\"kind\":\"antidiagonal\"";
      out += ",\"alpha_re\":" + format_double(m.alpha.real());
      out += ",\"alpha_im\":" + format_double(m.alpha.imag());
      out += ",\"beta_re\":" + format_double(m.beta.real());
      out += ",\"beta_im\":" + format_double(m.beta.imag());
    }
    out += "}";
  }
  return out + "]}";
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("file_not_found", "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("file_not_found", "cannot write " + path);
  }
  out << content;
}

}  // namespace depolar
