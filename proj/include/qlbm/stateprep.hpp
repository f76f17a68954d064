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

#include <vector>

#include <Eigen/Dense>

#include "qlbm/kernel.hpp"

namespace qlbm {

/// Rotation angles of the binary amplitude tree. Level k holds the 2^k
/// angles of the RY multiplexor acting on qubit n-1-k, indexed by the value
/// of the k more significant qubits.
struct AngleTree {
  std::vector<Eigen::VectorXd> levels;

  std::size_t num_qubits() const { return levels.size(); }
};

/// Splits a real non-negative unit vector of length 2^n into the angle tree
/// with cos(theta/2) = |left half| / |parent| at every node. Zero-norm
/// subtrees get theta = 0.
///
/// Throws std::invalid_argument for negative entries, a length that is not
/// a power of two >= 2, or a norm further than 1e-10 from one.
AngleTree rotation_angles(const Eigen::Ref<const Eigen::VectorXd>& target);

/// Circuit over n qubits that maps |0...0> to `target`, built from RY and
/// CX gates only (uniformly controlled rotations, Gray-code lowered).
Kernel encode_amplitudes(const Eigen::Ref<const Eigen::VectorXd>& target);

/// The same circuit for an already computed angle tree.
Kernel encode_amplitudes(const AngleTree& tree);

}  // namespace qlbm
