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

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <bit>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qlbm/gate.hpp"

namespace qlbm {

/// Fixes one qubit of the register to a classical bit value.
struct BitAssignment {
  Qubit qubit;
  bool value;
};

/// Full-state simulator over a register of `num_qubits` qubits.
///
/// Amplitudes are stored densely, indexed little-endian: qubit q is bit q of
/// the basis index. Gate application mutates the amplitudes in place; copy
/// the object to take a snapshot.
template <typename Real = double>
class BasicStateVector {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  static constexpr std::size_t kMaxQubits = 30;

  /// |0...0> on `num_qubits` qubits. Throws std::length_error outside
  /// [1, kMaxQubits].
  explicit BasicStateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
      throw std::length_error("register of " + std::to_string(num_qubits) +
                              " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    amps_ = Vector::Zero(Eigen::Index{1} << num_qubits);
    amps_(0) = Scalar{1};
  }

  /// Wraps an explicit amplitude vector; its length must be a power of two.
  static BasicStateVector from_amplitudes(Vector amps) {
    const auto dim = static_cast<std::uint64_t>(amps.size());
    if (dim < 2 || (dim & (dim - 1)) != 0)
      throw std::invalid_argument("amplitude count must be a power of two >= 2");
    BasicStateVector state(static_cast<std::size_t>(std::countr_zero(dim)));
    state.amps_ = std::move(amps);
    return state;
  }

  std::size_t num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }

  Scalar amplitude(std::uint64_t basis_index) const {
    if (basis_index >= static_cast<std::uint64_t>(amps_.size()))
      throw std::out_of_range("basis index " + std::to_string(basis_index) + " out of range");
    return amps_(static_cast<Eigen::Index>(basis_index));
  }

  RealVector probabilities() const { return amps_.cwiseAbs2(); }

  Real norm_squared() const { return amps_.squaredNorm(); }

  /// Amplitudes of every basis state consistent with `fixed`, ordered by the
  /// little-endian index formed from the remaining free qubits.
  Vector subspace_amplitudes(std::span<const BitAssignment> fixed) const {
    std::uint64_t fixed_mask = 0;
    std::uint64_t fixed_value = 0;
    for (const auto& [q, v] : fixed) {
      check_qubit(q);
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (fixed_mask & bit)
        throw std::invalid_argument("qubit " + std::to_string(q) + " fixed twice");
      fixed_mask |= bit;
      if (v) fixed_value |= bit;
    }
    const std::size_t free_count = num_qubits_ - fixed.size();
    Vector out(Eigen::Index{1} << free_count);
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << free_count); ++j) {
      // Deposit the bits of j into the free positions.
      std::uint64_t index = fixed_value;
      std::uint64_t src = j;
      for (std::size_t q = 0; q < num_qubits_ && src != 0; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (fixed_mask & bit) continue;
        if (src & 1) index |= bit;
        src >>= 1;
      }
      out(static_cast<Eigen::Index>(j)) = amps_(static_cast<Eigen::Index>(index));
    }
    return out;
  }

  /// Applies one gate. Throws std::out_of_range for operands beyond the
  /// register and std::invalid_argument for repeated operands.
  void apply(const GateInstruction& inst) {
    const auto qs = inst.operands();
    for (std::size_t i = 0; i < qs.size(); ++i) {
      check_qubit(qs[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (qs[i] == qs[j])
          throw std::invalid_argument(std::string(gate_name(inst.kind)) + ": repeated operand");
    }
    const Real theta = static_cast<Real>(inst.angle);
    const Real half = theta / Real{2};
    const Scalar i{0, 1};
    const Real r = std::numbers::sqrt2_v<Real> / Real{2};
    switch (inst.kind) {
      case GateKind::X: flip(0, qs[0]); break;
      case GateKind::CX: flip(mask(qs[0]), qs[1]); break;
      case GateKind::Toffoli: flip(mask(qs[0]) | mask(qs[1]), qs[2]); break;
      case GateKind::Z: phase_where(mask(qs[0]), Scalar{-1}); break;
      case GateKind::S: phase_where(mask(qs[0]), i); break;
      case GateKind::T:
        phase_where(mask(qs[0]), std::polar(Real{1}, std::numbers::pi_v<Real> / 4));
        break;
      case GateKind::Phase: phase_where(mask(qs[0]), std::polar(Real{1}, theta)); break;
      case GateKind::CZ: phase_where(mask(qs[0]) | mask(qs[1]), Scalar{-1}); break;
      case GateKind::CPhase:
        phase_where(mask(qs[0]) | mask(qs[1]), std::polar(Real{1}, theta));
        break;
      case GateKind::RZ:
        diagonal(qs[0], std::polar(Real{1}, -half), std::polar(Real{1}, half));
        break;
      case GateKind::Y: single(qs[0], 0, -i, i, 0); break;
      case GateKind::H: single(qs[0], r, r, r, -r); break;
      case GateKind::RX:
        single(qs[0], std::cos(half), -i * std::sin(half), -i * std::sin(half), std::cos(half));
        break;
      case GateKind::RY:
        single(qs[0], std::cos(half), -std::sin(half), std::sin(half), std::cos(half));
        break;
      case GateKind::Swap: swap_bits(qs[0], qs[1]); break;
    }
  }

 private:
  static std::uint64_t mask(Qubit q) { return std::uint64_t{1} << q; }

  void check_qubit(Qubit q) const {
    if (q >= num_qubits_)
      throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                              std::to_string(num_qubits_) + "-qubit register");
  }

  // Visits every basis index with the target bit clear.
  template <typename F>
  void for_each_pair(Qubit target, F&& f) {
    const std::uint64_t bit = mask(target);
    const auto n = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t base = 0; base < n; base += 2 * bit)
      for (std::uint64_t k = base; k < base + bit; ++k) f(k, k | bit);
  }

  void flip(std::uint64_t controls, Qubit target) {
    for_each_pair(target, [&](std::uint64_t lo, std::uint64_t hi) {
      if ((lo & controls) == controls)
        std::swap(amps_(static_cast<Eigen::Index>(lo)), amps_(static_cast<Eigen::Index>(hi)));
    });
  }

  void phase_where(std::uint64_t required, Scalar factor) {
    for (Eigen::Index k = 0; k < amps_.size(); ++k)
      if ((static_cast<std::uint64_t>(k) & required) == required) amps_(k) *= factor;
  }

  void diagonal(Qubit target, Scalar d0, Scalar d1) {
    for_each_pair(target, [&](std::uint64_t lo, std::uint64_t hi) {
      amps_(static_cast<Eigen::Index>(lo)) *= d0;
      amps_(static_cast<Eigen::Index>(hi)) *= d1;
    });
  }

  void single(Qubit target, Scalar m00, Scalar m01, Scalar m10, Scalar m11) {
    for_each_pair(target, [&](std::uint64_t lo, std::uint64_t hi) {
      const Scalar a0 = amps_(static_cast<Eigen::Index>(lo));
      const Scalar a1 = amps_(static_cast<Eigen::Index>(hi));
      amps_(static_cast<Eigen::Index>(lo)) = m00 * a0 + m01 * a1;
      amps_(static_cast<Eigen::Index>(hi)) = m10 * a0 + m11 * a1;
    });
  }

  void swap_bits(Qubit a, Qubit b) {
    const std::uint64_t ma = mask(a);
    const std::uint64_t mb = mask(b);
    for (Eigen::Index k = 0; k < amps_.size(); ++k) {
      const auto u = static_cast<std::uint64_t>(k);
      // Each unordered pair is visited once, from its a=1, b=0 member.
      if ((u & ma) && !(u & mb))
        std::swap(amps_(k), amps_(static_cast<Eigen::Index>((u & ~ma) | mb)));
    }
  }

  std::size_t num_qubits_;
  Vector amps_;
};

using StateVector = BasicStateVector<double>;

inline StateVector new_state(std::size_t num_qubits) { return StateVector(num_qubits); }

template <typename Real>
void apply(BasicStateVector<Real>& state, const GateInstruction& inst) {
  state.apply(inst);
}

}  // namespace qlbm
