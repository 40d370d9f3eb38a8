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

#ifndef DEPOLAR_ERRORS_HPP_
#define DEPOLAR_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace depolar {

// Base error carrying a machine-readable code (used by the CLI for exit
// status and structured error reports).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string &code() const { return code_; }

private:
  std::string code_;
};

// Bad input: dimension mismatch, non-Hermitian matrix, schema violation,
// pattern-check failure. CLI exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A protocol that cannot be executed for the given channel (e.g. no
// nonnegative mixing probabilities exist). CLI exit code 3.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

}  // namespace depolar

#endif  // DEPOLAR_ERRORS_HPP_
