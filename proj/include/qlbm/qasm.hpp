// Copyright 2026 The qlbm Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qlbm/kernel.hpp"

namespace qlbm {

/// Parse failure with a 1-based source position.
class QasmError : public std::runtime_error {
 public:
  QasmError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// qelib1 spelling of a gate: x y z h s t u1 rx ry rz cx cz cu1 swap ccx.
std::string_view qasm_name(GateKind kind);

/// Serializes a kernel as an OpenQASM 2.0 program over a single register
/// `q`. Angles are written with 17 significant digits.
std::string emit_qasm(const Kernel& kernel);

/// Parses the OpenQASM 2.0 subset produced by emit_qasm: header, optional
/// include, one qreg, gate statements, `barrier` (ignored) and `//`
/// comments. Angle arguments may be constant expressions using pi.
Kernel parse_qasm(std::string_view text, std::string name = "qasm");

}  // namespace qlbm
