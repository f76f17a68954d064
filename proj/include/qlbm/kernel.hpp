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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qlbm/gate.hpp"
#include "qlbm/state_vector.hpp"

namespace qlbm {

/// Raised when an instruction does not fit the kernel it is placed in.
class KernelValidationError : public std::invalid_argument {
 public:
  KernelValidationError(std::size_t instruction_index, const std::string& what)
      : std::invalid_argument("instruction " + std::to_string(instruction_index) + ": " + what),
        index_(instruction_index) {}
  std::size_t instruction_index() const { return index_; }

 private:
  std::size_t index_;
};

/// A named, validated, immutable gate sequence over a fixed register width.
class Kernel {
 public:
  const std::string& name() const { return name_; }
  std::size_t num_qubits() const { return num_qubits_; }
  std::span<const GateInstruction> instructions() const { return instructions_; }
  std::size_t size() const { return instructions_.size(); }
  bool empty() const { return instructions_.empty(); }

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  friend Kernel build_kernel(std::string name, std::size_t num_qubits,
                             std::vector<GateInstruction> instructions);
  Kernel() = default;

  std::string name_;
  std::size_t num_qubits_ = 0;
  std::vector<GateInstruction> instructions_;
};

/// Validates every instruction against `num_qubits`; throws
/// KernelValidationError naming the first offending instruction.
Kernel build_kernel(std::string name, std::size_t num_qubits,
                    std::vector<GateInstruction> instructions);

/// Concatenates kernels of equal width in order. Throws
/// std::invalid_argument on an empty list or a width mismatch.
Kernel compose(std::span<const Kernel> parts, std::string name = {});
Kernel compose(std::initializer_list<Kernel> parts, std::string name = {});

/// Relabels a kernel into a wider register: qubit q becomes `mapping[q]`.
Kernel embed(const Kernel& kernel, std::size_t num_qubits, std::span<const Qubit> mapping);

/// Same gates on the same qubits in a register of `num_qubits` >= the
/// kernel's width.
Kernel widen(const Kernel& kernel, std::size_t num_qubits);

/// Same gates in reverse order with every angle negated (the adjoint).
Kernel adjoint(const Kernel& kernel);

template <typename Real>
void run(const Kernel& kernel, BasicStateVector<Real>& state) {
  if (kernel.num_qubits() != state.num_qubits())
    throw std::invalid_argument("kernel '" + kernel.name() + "' has width " +
                                std::to_string(kernel.num_qubits()) + ", state has " +
                                std::to_string(state.num_qubits()));
  for (const auto& inst : kernel.instructions()) state.apply(inst);
}

inline constexpr std::size_t kMaxUnitaryQubits = 10;

/// Dense unitary of the whole kernel, built from each gate's local matrix.
/// Intended as a test oracle; limited to kMaxUnitaryQubits.
Eigen::MatrixXcd kernel_unitary(const Kernel& kernel);

}  // namespace qlbm
