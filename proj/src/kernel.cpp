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

#include "qlbm/kernel.hpp"

#include <cstdint>
#include <numbers>
#include <utility>

namespace qlbm {

Kernel build_kernel(std::string name, std::size_t num_qubits,
                    std::vector<GateInstruction> instructions) {
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const auto qs = instructions[i].operands();
    for (std::size_t a = 0; a < qs.size(); ++a) {
      if (qs[a] >= num_qubits)
        throw KernelValidationError(i, std::string(gate_name(instructions[i].kind)) +
                                           " references qubit " + std::to_string(qs[a]) +
                                           " in a " + std::to_string(num_qubits) +
                                           "-qubit kernel");
      for (std::size_t b = 0; b < a; ++b)
        if (qs[a] == qs[b])
          throw KernelValidationError(i, std::string(gate_name(instructions[i].kind)) +
                                             " repeats qubit " + std::to_string(qs[a]));
    }
  }
  Kernel k;
  k.name_ = std::move(name);
  k.num_qubits_ = num_qubits;
  k.instructions_ = std::move(instructions);
  return k;
}

Kernel compose(std::span<const Kernel> parts, std::string name) {
  if (parts.empty()) throw std::invalid_argument("compose needs at least one kernel");
  const std::size_t width = parts.front().num_qubits();
  std::vector<GateInstruction> all;
  for (const auto& part : parts) {
    if (part.num_qubits() != width)
      throw std::invalid_argument("compose: kernel '" + part.name() + "' has width " +
                                  std::to_string(part.num_qubits()) + ", expected " +
                                  std::to_string(width));
    all.insert(all.end(), part.instructions().begin(), part.instructions().end());
  }
  if (name.empty()) name = parts.size() == 1 ? parts.front().name() : "composed";
  return build_kernel(std::move(name), width, std::move(all));
}

Kernel compose(std::initializer_list<Kernel> parts, std::string name) {
  return compose(std::span<const Kernel>(parts.begin(), parts.size()), std::move(name));
}

Kernel embed(const Kernel& kernel, std::size_t num_qubits, std::span<const Qubit> mapping) {
  if (mapping.size() != kernel.num_qubits())
    throw std::invalid_argument("embed: mapping size does not match kernel width");
  std::vector<GateInstruction> out;
  out.reserve(kernel.size());
  for (auto inst : kernel.instructions()) {
    for (std::size_t i = 0; i < arity(inst.kind); ++i) inst.qubits[i] = mapping[inst.qubits[i]];
    out.push_back(inst);
  }
  return build_kernel(kernel.name(), num_qubits, std::move(out));
}

Kernel widen(const Kernel& kernel, std::size_t num_qubits) {
  if (num_qubits < kernel.num_qubits())
    throw std::invalid_argument("widen: cannot shrink kernel '" + kernel.name() + "'");
  std::vector<GateInstruction> copy(kernel.instructions().begin(), kernel.instructions().end());
  return build_kernel(kernel.name(), num_qubits, std::move(copy));
}

Kernel adjoint(const Kernel& kernel) {
  std::vector<GateInstruction> out;
  out.reserve(kernel.size());
  for (auto it = kernel.instructions().rbegin(); it != kernel.instructions().rend(); ++it) {
    GateInstruction inst = *it;
    switch (inst.kind) {
      case GateKind::S:
        inst = ops::phase(inst.qubits[0], -std::numbers::pi / 2);
        break;
      case GateKind::T:
        inst = ops::phase(inst.qubits[0], -std::numbers::pi / 4);
        break;
      default:
        inst.angle = -inst.angle;
    }
    out.push_back(inst);
  }
  return build_kernel(kernel.name() + "_dg", kernel.num_qubits(), std::move(out));
}

Eigen::MatrixXcd kernel_unitary(const Kernel& kernel) {
  const std::size_t n = kernel.num_qubits();
  if (n > kMaxUnitaryQubits)
    throw std::length_error("kernel_unitary limited to " + std::to_string(kMaxUnitaryQubits) +
                            " qubits, kernel has " + std::to_string(n));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);

  for (const auto& inst : kernel.instructions()) {
    const auto qs = inst.operands();
    const Eigen::MatrixXcd g = local_matrix(inst.kind, inst.angle);
    const std::size_t k = qs.size();
    const Eigen::Index local_dim = Eigen::Index{1} << k;

    std::uint64_t op_mask = 0;
    for (const Qubit q : qs) op_mask |= std::uint64_t{1} << q;

    // Row indices of each group: rows sharing all non-operand bits.
    std::vector<Eigen::Index> rows(static_cast<std::size_t>(local_dim));
    Eigen::MatrixXcd block(local_dim, dim);
    for (Eigen::Index base = 0; base < dim; ++base) {
      if (static_cast<std::uint64_t>(base) & op_mask) continue;
      for (Eigen::Index l = 0; l < local_dim; ++l) {
        std::uint64_t idx = static_cast<std::uint64_t>(base);
        for (std::size_t b = 0; b < k; ++b)
          if (l & (Eigen::Index{1} << b)) idx |= std::uint64_t{1} << qs[b];
        rows[static_cast<std::size_t>(l)] = static_cast<Eigen::Index>(idx);
      }
      for (Eigen::Index l = 0; l < local_dim; ++l) block.row(l) = u.row(rows[l]);
      block = (g * block).eval();
      for (Eigen::Index l = 0; l < local_dim; ++l) u.row(rows[l]) = block.row(l);
    }
  }
  return u;
}

}  // namespace qlbm
