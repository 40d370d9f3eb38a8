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

#ifndef DEPOLAR_JSON_IO_HPP_
#define DEPOLAR_JSON_IO_HPP_

#include <string>

#include "depolar/lindblad.hpp"
#include "depolar/sacrifice.hpp"
#include "depolar/standard_forms.hpp"
#include "depolar/twirl.hpp"

namespace depolar {

// Writers emit fixed key order and 17 significant digits so that
// save(load(x)) is byte-stable.
std::string format_double(double value);
std::string json_real_matrix(const ComplexMatrix &m, bool imaginary);

std::string channel_to_json(const ChoiState &e);
ChoiState channel_from_json(const std::string &text);

std::string density_to_json(const ComplexMatrix &rho,
                            const TensorShape &shape);
ComplexMatrix density_from_json(const std::string &text, TensorShape *shape);

std::string generator_to_json(const LindbladGenerator &z);
LindbladGenerator generator_from_json(const std::string &text);

std::string kraus_to_json(const KrausSet &set);

TwirlSet twirl_set_from_json(const std::string &text);
std::string schedule_to_json(const std::vector<MixingStage> &stages);

std::string pauli_form_to_json(const PauliChannelForm &form);
std::string white_noise_form_to_json(const WhiteNoiseForm &form);
std::string phase_gate_form_to_json(const PhaseGateForm &form);
std::string cnot_form_to_json(const CnotForm &form);
std::string swap_form_to_json(const SwapForm &form);
std::string mixers_to_json(const std::vector<SeparableMixer> &mixers,
                           double keep_probability);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

}  // namespace depolar

#endif  // DEPOLAR_JSON_IO_HPP_
