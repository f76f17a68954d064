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
#include <vector>

#include <Eigen/Dense>

#include "qlbm/kernel.hpp"

namespace qlbm {

/// Sound speed squared of the D1Q2 lattice (sum of w_i e_i^2 with w = 1/2,
/// e = +-1).
inline constexpr double kDefaultCs2 = 1.0;

/// Qubit roles inside the solver register.
struct RegisterLayout {
  std::vector<Qubit> position;      // little-endian lattice coordinate
  Qubit selector = 0;               // |0>: f1 (moves right), |1>: f2 (moves left)
  Qubit lcu_ancilla = 0;
  std::vector<Qubit> mcx_ancillas;  // scratch for the shift cascades
  std::size_t num_qubits = 0;
};

/// D1Q2 lattice parameters and the derived register layout.
///
/// Position qubits occupy 0..log2(M)-1, the selector sits at log2(M), the
/// LCU ancilla at log2(M)+1 and log2(M)-1 MCX ancillas follow.
class LatticeConfig {
 public:
  /// Throws std::invalid_argument unless `sites` is a power of two >= 16,
  /// `cs2` > 0 and both collision weights (1 +- u/cs2)/2 lie in [-1, 1].
  LatticeConfig(std::size_t sites, double velocity, double cs2 = kDefaultCs2);

  std::size_t sites() const { return sites_; }
  double velocity() const { return velocity_; }
  double cs2() const { return cs2_; }
  std::size_t position_qubits() const { return layout_.position.size(); }
  /// log2(2M): position register plus selector.
  std::size_t working_qubits() const { return position_qubits() + 1; }
  std::size_t num_qubits() const { return layout_.num_qubits; }
  const RegisterLayout& layout() const { return layout_; }

  static constexpr std::size_t kMinSites = 16;

 private:
  std::size_t sites_;
  double velocity_;
  double cs2_;
  RegisterLayout layout_;
};

/// Concentration C(x) on the lattice. Values are finite and >= 0.
class ConcentrationField {
 public:
  explicit ConcentrationField(Eigen::VectorXd values);

  const Eigen::VectorXd& values() const { return values_; }
  double norm() const { return norm_; }
  double mass() const { return values_.sum(); }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator[](std::size_t x) const { return values_(static_cast<Eigen::Index>(x)); }

 private:
  Eigen::VectorXd values_;
  double norm_;
};

/// Collision diagonal d_i = w_i (1 + e_i u / cs2) and the LCU phases
/// lambda_i = arccos(d_i), so that (e^{i lambda} + e^{-i lambda}) / 2 = d.
struct CollisionAngles {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double d1 = 1.0;
  double d2 = 1.0;
};

/// Throws std::domain_error if cs2 <= 0 or either |d_i| > 1.
CollisionAngles collision_angles(double velocity, double cs2);

/// Builds a CollisionAngles directly from phases (d_i = cos lambda_i).
CollisionAngles collision_angles_from_phases(double lambda1, double lambda2);

/// LCU collision: H on the ancilla, four controlled subspace phases selected
/// by (ancilla, selector) = (0,0): +l1, (0,1): +l2, (1,0): -l1, (1,1): -l2,
/// then H on the ancilla. The ancilla=0 block is diag(d1, d2) over the
/// selector, identity on position.
Kernel build_collision(const LatticeConfig& cfg, const CollisionAngles& angles);

/// Right shift of the selector=0 populations followed by a left shift of
/// the selector=1 populations, periodic.
Kernel build_propagation(const LatticeConfig& cfg);

/// SWAP(selector, ancilla) then H on the ancilla: the ancilla=0, selector=0
/// block then holds (f1 + f2) / sqrt(2).
Kernel build_macroscopic(const LatticeConfig& cfg);

/// One full time step as a single kernel: amplitude encoding of C / |C| on
/// the position register, H on the selector, collision, propagation and
/// macroscopic stages.
Kernel build_step_circuit(const ConcentrationField& field, const LatticeConfig& cfg,
                          const CollisionAngles& angles);

/// Result of one step plus the raw post-selected amplitudes.
struct StepReadout {
  ConcentrationField next;
  Eigen::VectorXcd amplitudes;  // a(x) on selector = ancillas = 0
  double renormalization = 0.0;  // r with C'(x) = r Re a(x)
};

/// Simulates one step on a fresh register and reads out
/// C'(x) = 2 |C| Re a(x). Readouts below -1e-9 raise std::runtime_error;
/// smaller negative rounding residue is clamped to zero.
StepReadout step_readout(const ConcentrationField& field, const LatticeConfig& cfg,
                         const CollisionAngles& angles);

ConcentrationField step(const ConcentrationField& field, const LatticeConfig& cfg);
ConcentrationField step(const ConcentrationField& field, const LatticeConfig& cfg,
                        const CollisionAngles& angles);

/// Hybrid time stepping: C_0 ... C_steps, re-encoding every step.
std::vector<ConcentrationField> run_simulation(const ConcentrationField& initial,
                                               std::size_t steps, const LatticeConfig& cfg);
std::vector<ConcentrationField> run_simulation(const ConcentrationField& initial,
                                               std::size_t steps, const LatticeConfig& cfg,
                                               const CollisionAngles& angles);

}  // namespace qlbm
