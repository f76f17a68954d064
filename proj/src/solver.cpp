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

#include "qlbm/solver.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qlbm/custom_gates.hpp"
#include "qlbm/state_vector.hpp"
#include "qlbm/stateprep.hpp"

namespace qlbm {

namespace {

constexpr double kNegativeReadoutGuard = 1e-9;

}  // namespace

LatticeConfig::LatticeConfig(std::size_t sites, double velocity, double cs2)
    : sites_(sites), velocity_(velocity), cs2_(cs2) {
  if (sites < kMinSites || !std::has_single_bit(sites))
    throw std::invalid_argument("sites must be a power of two >= " + std::to_string(kMinSites) +
                                ", got " + std::to_string(sites));
  try {
    collision_angles(velocity, cs2);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }

  const auto n = static_cast<Qubit>(std::countr_zero(sites));
  for (Qubit q = 0; q < n; ++q) layout_.position.push_back(q);
  layout_.selector = n;
  layout_.lcu_ancilla = n + 1;
  for (Qubit q = 0; q + 1 < n; ++q) layout_.mcx_ancillas.push_back(n + 2 + q);
  layout_.num_qubits = 2 * static_cast<std::size_t>(n) + 1;
}

ConcentrationField::ConcentrationField(Eigen::VectorXd values) : values_(std::move(values)) {
  for (Eigen::Index i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_(i)) || values_(i) < 0.0)
      throw std::invalid_argument("concentration at x=" + std::to_string(i) +
                                  " is negative or not finite");
  norm_ = values_.norm();
}

CollisionAngles collision_angles(double velocity, double cs2) {
  if (!(cs2 > 0.0)) throw std::domain_error("cs2 must be positive");
  CollisionAngles a;
  a.d1 = 0.5 * (1.0 + velocity / cs2);
  a.d2 = 0.5 * (1.0 - velocity / cs2);
  if (std::abs(a.d1) > 1.0 || std::abs(a.d2) > 1.0)
    throw std::domain_error("velocity " + std::to_string(velocity) +
                            " out of range: collision weights (1 +- u/cs2)/2 must lie in [-1, 1]");
  a.lambda1 = std::acos(a.d1);
  a.lambda2 = std::acos(a.d2);
  return a;
}

CollisionAngles collision_angles_from_phases(double lambda1, double lambda2) {
  return {lambda1, lambda2, std::cos(lambda1), std::cos(lambda2)};
}

Kernel build_collision(const LatticeConfig& cfg, const CollisionAngles& angles) {
  const auto& lay = cfg.layout();
  const Qubit anc = lay.lcu_ancilla;
  const Qubit sel = lay.selector;
  const Qubit target = lay.position.front();

  struct Block {
    bool anc_value;
    bool sel_value;
    double angle;
  };
  const std::array<Block, 4> blocks{{
      {false, false, angles.lambda1},
      {false, true, angles.lambda2},
      {true, false, -angles.lambda1},
      {true, true, -angles.lambda2},
  }};

  std::vector<GateInstruction> out{ops::h(anc)};
  // Track which controls are currently X-conjugated to select 0-valued controls.
  bool anc_flipped = false;
  bool sel_flipped = false;
  for (const auto& b : blocks) {
    if (anc_flipped != !b.anc_value) {
      out.push_back(ops::x(anc));
      anc_flipped = !anc_flipped;
    }
    if (sel_flipped != !b.sel_value) {
      out.push_back(ops::x(sel));
      sel_flipped = !sel_flipped;
    }
    const Kernel phase = cc_subspace_phase(anc, sel, target, b.angle);
    out.insert(out.end(), phase.instructions().begin(), phase.instructions().end());
  }
  if (anc_flipped) out.push_back(ops::x(anc));
  if (sel_flipped) out.push_back(ops::x(sel));
  out.push_back(ops::h(anc));
  return build_kernel("collision", cfg.num_qubits(), std::move(out));
}

Kernel build_propagation(const LatticeConfig& cfg) {
  const auto& lay = cfg.layout();
  const Kernel right = widen(right_shift(lay.position, lay.selector, lay.mcx_ancillas),
                             cfg.num_qubits());
  const Kernel left = widen(left_shift(lay.position, lay.selector, lay.mcx_ancillas),
                            cfg.num_qubits());
  return compose({right, left}, "propagation");
}

Kernel build_macroscopic(const LatticeConfig& cfg) {
  const auto& lay = cfg.layout();
  return build_kernel("macroscopic", cfg.num_qubits(),
                      {ops::swap(lay.selector, lay.lcu_ancilla), ops::h(lay.lcu_ancilla)});
}

Kernel build_step_circuit(const ConcentrationField& field, const LatticeConfig& cfg,
                          const CollisionAngles& angles) {
  if (field.size() != cfg.sites())
    throw std::invalid_argument("field has " + std::to_string(field.size()) +
                                " sites, lattice has " + std::to_string(cfg.sites()));
  if (!(field.norm() > 0.0)) throw std::invalid_argument("cannot encode an all-zero field");

  const auto& lay = cfg.layout();
  const Eigen::VectorXd unit = field.values() / field.norm();
  const Kernel encoding = embed(encode_amplitudes(unit), cfg.num_qubits(), lay.position);
  const Kernel split = build_kernel("selector_split", cfg.num_qubits(), {ops::h(lay.selector)});
  return compose({encoding, split, build_collision(cfg, angles), build_propagation(cfg),
                  build_macroscopic(cfg)},
                 "qlbm_step");
}

StepReadout step_readout(const ConcentrationField& field, const LatticeConfig& cfg,
                         const CollisionAngles& angles) {
  const Kernel circuit = build_step_circuit(field, cfg, angles);
  StateVector state(cfg.num_qubits());
  run(circuit, state);

  const auto& lay = cfg.layout();
  std::vector<BitAssignment> fixed{{lay.selector, false}, {lay.lcu_ancilla, false}};
  for (const Qubit q : lay.mcx_ancillas) fixed.push_back({q, false});
  Eigen::VectorXcd amps = state.subspace_amplitudes(fixed);

  const double r = 2.0 * field.norm();
  Eigen::VectorXd next = r * amps.real();
  for (Eigen::Index x = 0; x < next.size(); ++x) {
    if (next(x) < -kNegativeReadoutGuard)
      throw std::runtime_error("negative concentration " + std::to_string(next(x)) + " at x=" +
                               std::to_string(x) + " (inadmissible parameters or circuit error)");
    if (next(x) < 0.0) next(x) = 0.0;
  }
  return {ConcentrationField(std::move(next)), std::move(amps), r};
}

ConcentrationField step(const ConcentrationField& field, const LatticeConfig& cfg,
                        const CollisionAngles& angles) {
  return step_readout(field, cfg, angles).next;
}

ConcentrationField step(const ConcentrationField& field, const LatticeConfig& cfg) {
  return step(field, cfg, collision_angles(cfg.velocity(), cfg.cs2()));
}

std::vector<ConcentrationField> run_simulation(const ConcentrationField& initial,
                                               std::size_t steps, const LatticeConfig& cfg,
                                               const CollisionAngles& angles) {
  std::vector<ConcentrationField> trajectory{initial};
  trajectory.reserve(steps + 1);
  for (std::size_t t = 0; t < steps; ++t) trajectory.push_back(step(trajectory.back(), cfg, angles));
  return trajectory;
}

std::vector<ConcentrationField> run_simulation(const ConcentrationField& initial,
                                               std::size_t steps, const LatticeConfig& cfg) {
  return run_simulation(initial, steps, cfg, collision_angles(cfg.velocity(), cfg.cs2()));
}

}  // namespace qlbm
