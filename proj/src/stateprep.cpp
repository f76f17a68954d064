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

#include "qlbm/stateprep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qlbm {

namespace {

constexpr double kNormTolerance = 1e-10;

// Uniformly controlled RY on `target`; angles[j] applies when the controls
// read j (controls[i] is bit i of j). The returned list always ends with a
// CX from the most significant control when there is at least one control.
std::vector<GateInstruction> multiplexed_ry(std::span<const Qubit> controls, Qubit target,
                                            const Eigen::VectorXd& angles) {
  const std::size_t k = controls.size();
  if (k == 0) return {ops::ry(target, angles(0))};

  const Eigen::Index half = angles.size() / 2;
  const Eigen::VectorXd sum = (angles.head(half) + angles.tail(half)) / 2.0;
  const Eigen::VectorXd diff = (angles.head(half) - angles.tail(half)) / 2.0;
  const Qubit top = controls[k - 1];

  if (k == 1) {
    return {ops::ry(target, sum(0)), ops::cx(top, target), ops::ry(target, diff(0)),
            ops::cx(top, target)};
  }

  const auto rest = controls.first(k - 1);
  std::vector<GateInstruction> first = multiplexed_ry(rest, target, sum);
  std::vector<GateInstruction> second = multiplexed_ry(rest, target, diff);
  std::reverse(second.begin(), second.end());

  // first ends and reversed second starts with CX(rest.back(), target);
  // with the CX on `top` between them the pair cancels.
  std::vector<GateInstruction> out(first.begin(), first.end() - 1);
  out.push_back(ops::cx(top, target));
  out.insert(out.end(), second.begin() + 1, second.end());
  out.push_back(ops::cx(top, target));
  return out;
}

}  // namespace

AngleTree rotation_angles(const Eigen::Ref<const Eigen::VectorXd>& target) {
  const auto len = static_cast<std::uint64_t>(target.size());
  if (len < 2 || !std::has_single_bit(len))
    throw std::invalid_argument("state preparation needs a power-of-two length >= 2, got " +
                                std::to_string(len));
  for (Eigen::Index i = 0; i < target.size(); ++i)
    if (target(i) < 0.0 || std::isnan(target(i)))
      throw std::invalid_argument("state preparation target has negative entry at index " +
                                  std::to_string(i));
  const double norm = target.norm();
  if (std::abs(norm - 1.0) > kNormTolerance)
    throw std::invalid_argument("state preparation target is not unit norm (norm = " +
                                std::to_string(norm) + ")");

  const auto n = static_cast<std::size_t>(std::countr_zero(len));

  // norms[k] holds the 2^k subtree norms at depth k; norms[n] are the leaves.
  std::vector<Eigen::VectorXd> norms(n + 1);
  norms[n] = target;
  for (std::size_t k = n; k-- > 0;) {
    const Eigen::Index count = Eigen::Index{1} << k;
    norms[k].resize(count);
    for (Eigen::Index j = 0; j < count; ++j)
      norms[k](j) = std::hypot(norms[k + 1](2 * j), norms[k + 1](2 * j + 1));
  }

  // Node j at depth k covers indices [j 2^(n-k), (j+1) 2^(n-k)), so bit i of
  // j is qubit n-k+i: exactly the multiplexor's control value. Its children
  // 2j and 2j+1 differ in qubit n-1-k.
  AngleTree tree;
  tree.levels.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Index count = Eigen::Index{1} << k;
    tree.levels[k].resize(count);
    for (Eigen::Index j = 0; j < count; ++j) {
      const double left = norms[k + 1](2 * j);
      const double right = norms[k + 1](2 * j + 1);
      tree.levels[k](j) = 2.0 * std::atan2(right, left);
    }
  }
  return tree;
}

Kernel encode_amplitudes(const AngleTree& tree) {
  const std::size_t n = tree.num_qubits();
  std::vector<GateInstruction> gates;
  for (std::size_t k = 0; k < n; ++k) {
    const auto target = static_cast<Qubit>(n - 1 - k);
    std::vector<Qubit> controls;
    for (std::size_t i = 0; i < k; ++i) controls.push_back(static_cast<Qubit>(n - k + i));
    const auto part = multiplexed_ry(controls, target, tree.levels[k]);
    gates.insert(gates.end(), part.begin(), part.end());
  }
  return build_kernel("encoding", n, std::move(gates));
}

Kernel encode_amplitudes(const Eigen::Ref<const Eigen::VectorXd>& target) {
  return encode_amplitudes(rotation_angles(target));
}

}  // namespace qlbm
