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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace qlbm {

/// Qubit index inside a register. Qubit 0 is the least significant bit of
/// the basis-state index.
using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  X,
  Y,
  Z,
  H,
  S,
  T,
  Phase,
  RX,
  RY,
  RZ,
  CX,
  CZ,
  CPhase,
  Swap,
  Toffoli,
};

inline constexpr std::array<GateKind, 15> kAllGateKinds = {
    GateKind::X,  GateKind::Y,  GateKind::Z,      GateKind::H,    GateKind::S,
    GateKind::T,  GateKind::Phase, GateKind::RX,  GateKind::RY,   GateKind::RZ,
    GateKind::CX, GateKind::CZ, GateKind::CPhase, GateKind::Swap, GateKind::Toffoli,
};

/// Number of qubit operands the gate acts on.
constexpr std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CPhase:
    case GateKind::Swap:
      return 2;
    case GateKind::Toffoli:
      return 3;
    default:
      return 1;
  }
}

constexpr bool is_parametric(GateKind kind) {
  switch (kind) {
    case GateKind::Phase:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CPhase:
      return true;
    default:
      return false;
  }
}

std::string_view gate_name(GateKind kind);

/// One gate applied to concrete qubits. Controls come first in `qubits`,
/// the target last (CX, CZ, CPhase, Toffoli).
struct GateInstruction {
  GateKind kind = GateKind::X;
  std::array<Qubit, 3> qubits{};
  double angle = 0.0;

  std::span<const Qubit> operands() const { return {qubits.data(), arity(kind)}; }

  friend bool operator==(const GateInstruction& a, const GateInstruction& b) {
    if (a.kind != b.kind || a.angle != b.angle) return false;
    for (std::size_t i = 0; i < arity(a.kind); ++i)
      if (a.qubits[i] != b.qubits[i]) return false;
    return true;
  }
};

/// Builds an instruction from a runtime operand list. Throws
/// std::invalid_argument on arity mismatch or repeated operands.
GateInstruction make_instruction(GateKind kind, std::span<const Qubit> operands,
                                 double angle = 0.0);

/// Dense 2^k x 2^k matrix of the gate in its own operand space, where
/// operand i is bit i of the local index.
Eigen::MatrixXcd local_matrix(GateKind kind, double angle);

namespace ops {

GateInstruction x(Qubit q);
GateInstruction y(Qubit q);
GateInstruction z(Qubit q);
GateInstruction h(Qubit q);
GateInstruction s(Qubit q);
GateInstruction t(Qubit q);
GateInstruction phase(Qubit q, double angle);
GateInstruction rx(Qubit q, double angle);
GateInstruction ry(Qubit q, double angle);
GateInstruction rz(Qubit q, double angle);
GateInstruction cx(Qubit control, Qubit target);
GateInstruction cz(Qubit control, Qubit target);
GateInstruction cphase(Qubit control, Qubit target, double angle);
GateInstruction swap(Qubit a, Qubit b);
GateInstruction toffoli(Qubit control1, Qubit control2, Qubit target);

}  // namespace ops

}  // namespace qlbm
