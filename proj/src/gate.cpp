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

#include "qlbm/gate.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qlbm {

using cd = std::complex<double>;

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::Phase: return "Phase";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
    case GateKind::CPhase: return "CPhase";
    case GateKind::Swap: return "SWAP";
    case GateKind::Toffoli: return "Toffoli";
  }
  return "?";
}

GateInstruction make_instruction(GateKind kind, std::span<const Qubit> operands,
                                 double angle) {
  if (operands.size() != arity(kind)) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " expects " +
                                std::to_string(arity(kind)) + " operand(s), got " +
                                std::to_string(operands.size()));
  }
  GateInstruction inst;
  inst.kind = kind;
  inst.angle = is_parametric(kind) ? angle : 0.0;
  for (std::size_t i = 0; i < operands.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (operands[i] == operands[j]) {
        throw std::invalid_argument(std::string(gate_name(kind)) +
                                    ": repeated operand q" + std::to_string(operands[i]));
      }
    }
    inst.qubits[i] = operands[i];
  }
  return inst;
}

Eigen::MatrixXcd local_matrix(GateKind kind, double angle) {
  const double r = std::numbers::sqrt2 / 2.0;
  const cd i{0.0, 1.0};
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::MatrixXcd m;
  switch (kind) {
    case GateKind::X:
      m.resize(2, 2);
      m << 0, 1, 1, 0;
      break;
    case GateKind::Y:
      m.resize(2, 2);
      m << 0, -i, i, 0;
      break;
    case GateKind::Z:
      m.resize(2, 2);
      m << 1, 0, 0, -1;
      break;
    case GateKind::H:
      m.resize(2, 2);
      m << r, r, r, -r;
      break;
    case GateKind::S:
      m.resize(2, 2);
      m << 1, 0, 0, i;
      break;
    case GateKind::T:
      m.resize(2, 2);
      m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0);
      break;
    case GateKind::Phase:
      m.resize(2, 2);
      m << 1, 0, 0, std::polar(1.0, angle);
      break;
    case GateKind::RX:
      m.resize(2, 2);
      m << c, -i * s, -i * s, c;
      break;
    case GateKind::RY:
      m.resize(2, 2);
      m << c, -s, s, c;
      break;
    case GateKind::RZ:
      m.resize(2, 2);
      m << std::polar(1.0, -angle / 2.0), 0, 0, std::polar(1.0, angle / 2.0);
      break;
    // Two-qubit gates: local index = b0 + 2*b1 with b0 the first operand.
    case GateKind::CX:
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(2, 2) = 1;
      m(3, 1) = 1;  // |c=1,t=0> -> |c=1,t=1>
      m(1, 3) = 1;
      break;
    case GateKind::CZ:
      m = Eigen::MatrixXcd::Identity(4, 4);
      m(3, 3) = -1;
      break;
    case GateKind::CPhase:
      m = Eigen::MatrixXcd::Identity(4, 4);
      m(3, 3) = std::polar(1.0, angle);
      break;
    case GateKind::Swap:
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      break;
    case GateKind::Toffoli:
      m = Eigen::MatrixXcd::Identity(8, 8);
      m(3, 3) = 0;
      m(7, 7) = 0;
      m(7, 3) = 1;
      m(3, 7) = 1;
      break;
  }
  return m;
}

namespace ops {

namespace {
GateInstruction one(GateKind k, Qubit q, double angle = 0.0) {
  const std::array<Qubit, 1> qs{q};
  return make_instruction(k, qs, angle);
}
GateInstruction two(GateKind k, Qubit a, Qubit b, double angle = 0.0) {
  const std::array<Qubit, 2> qs{a, b};
  return make_instruction(k, qs, angle);
}
}  // namespace

GateInstruction x(Qubit q) { return one(GateKind::X, q); }
GateInstruction y(Qubit q) { return one(GateKind::Y, q); }
GateInstruction z(Qubit q) { return one(GateKind::Z, q); }
GateInstruction h(Qubit q) { return one(GateKind::H, q); }
GateInstruction s(Qubit q) { return one(GateKind::S, q); }
GateInstruction t(Qubit q) { return one(GateKind::T, q); }
GateInstruction phase(Qubit q, double angle) { return one(GateKind::Phase, q, angle); }
GateInstruction rx(Qubit q, double angle) { return one(GateKind::RX, q, angle); }
GateInstruction ry(Qubit q, double angle) { return one(GateKind::RY, q, angle); }
GateInstruction rz(Qubit q, double angle) { return one(GateKind::RZ, q, angle); }
GateInstruction cx(Qubit control, Qubit target) { return two(GateKind::CX, control, target); }
GateInstruction cz(Qubit control, Qubit target) { return two(GateKind::CZ, control, target); }
GateInstruction cphase(Qubit control, Qubit target, double angle) {
  return two(GateKind::CPhase, control, target, angle);
}
GateInstruction swap(Qubit a, Qubit b) { return two(GateKind::Swap, a, b); }
GateInstruction toffoli(Qubit control1, Qubit control2, Qubit target) {
  const std::array<Qubit, 3> qs{control1, control2, target};
  return make_instruction(GateKind::Toffoli, qs);
}

}  // namespace ops

}  // namespace qlbm
