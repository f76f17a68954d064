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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qlbm/reference.hpp"
#include "qlbm/state_vector.hpp"
#include "test_support.hpp"

namespace qlbm {
namespace {

using cd = std::complex<double>;
using testing::max_abs_diff;

Eigen::VectorXd triangle(Eigen::Index m) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
  c(5) = 0.5;
  c(6) = 1.0;
  c(7) = 0.5;
  return c;
}

Eigen::VectorXd random_field(Eigen::Index m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd c(m);
  for (auto& v : c) v = u(rng) < 0.2 ? 0.0 : u(rng);
  c(0) += 0.1;
  return c;
}

std::vector<Qubit> working_qubits(const LatticeConfig& cfg) {
  std::vector<Qubit> w = cfg.layout().position;
  w.push_back(cfg.layout().selector);
  return w;
}

// ---- configuration ----

TEST(LatticeConfigTest, LayoutForThirtyTwoSites) {
  const LatticeConfig cfg(32, 0.0);
  const auto& lay = cfg.layout();
  EXPECT_EQ(lay.position, (std::vector<Qubit>{0, 1, 2, 3, 4}));
  EXPECT_EQ(lay.selector, 5U);
  EXPECT_EQ(lay.lcu_ancilla, 6U);
  EXPECT_EQ(lay.mcx_ancillas, (std::vector<Qubit>{7, 8, 9, 10}));
  EXPECT_EQ(cfg.working_qubits(), 6U);  // log2(2M)
  EXPECT_EQ(cfg.num_qubits(), 11U);
  EXPECT_EQ(cfg.cs2(), kDefaultCs2);
}

TEST(LatticeConfigTest, Rejections) {
  EXPECT_THROW(LatticeConfig(20, 0.0), std::invalid_argument);
  EXPECT_THROW(LatticeConfig(8, 0.0), std::invalid_argument);
  EXPECT_THROW(LatticeConfig(16, 1.5, 1.0), std::invalid_argument);
  EXPECT_THROW(LatticeConfig(16, 0.0, 0.0), std::invalid_argument);
}

TEST(ConcentrationFieldTest, CachesNorm) {
  const ConcentrationField f(Eigen::Vector4d(3, 0, 4, 0));
  EXPECT_EQ(f.norm(), 5.0);
  EXPECT_EQ(f.mass(), 7.0);
  EXPECT_EQ(f[2], 4.0);
  EXPECT_THROW(ConcentrationField(Eigen::Vector2d(1.0, -0.1)), std::invalid_argument);
}

// ---- collision angles ----

TEST(CollisionAnglesTest, ZeroVelocity) {
  const auto a = collision_angles(0.0, 1.0 / 3.0);
  EXPECT_EQ(a.d1, 0.5);
  EXPECT_EQ(a.d2, 0.5);
  EXPECT_NEAR(a.lambda1, std::numbers::pi / 3, 1e-15);
  EXPECT_NEAR(a.lambda2, std::numbers::pi / 3, 1e-15);
}

TEST(CollisionAnglesTest, AdvectingCase) {
  const auto a = collision_angles(0.2, 1.0 / 3.0);
  EXPECT_NEAR(a.d1, 0.8, 1e-15);
  EXPECT_NEAR(a.d2, 0.2, 1e-15);
  EXPECT_NEAR(a.lambda1, 0.6435011087932843, 1e-15);
  EXPECT_NEAR(a.lambda2, 1.369438406004566, 1e-15);
  EXPECT_NEAR(std::cos(a.lambda1), a.d1, 1e-15);
  EXPECT_NEAR(std::cos(a.lambda2), a.d2, 1e-15);
}

TEST(CollisionAnglesTest, VelocityEqualToCs2) {
  const auto a = collision_angles(0.5, 0.5);
  EXPECT_EQ(a.d2, 0.0);
  EXPECT_NEAR(a.lambda2, std::numbers::pi / 2, 1e-15);
}

TEST(CollisionAnglesTest, OutOfRange) {
  EXPECT_THROW(collision_angles(2.0, 1.0 / 3.0), std::domain_error);
  EXPECT_THROW(collision_angles(0.1, -1.0), std::domain_error);
}

// ---- subcircuits ----

// Ancilla-0 block of the collision over (position, selector), with the MCX
// pool idle at |0>.
Eigen::MatrixXcd collision_block(const LatticeConfig& cfg, const CollisionAngles& a) {
  return testing::restrict(kernel_unitary(build_collision(cfg, a)), working_qubits(cfg), 0);
}

Eigen::MatrixXcd selector_diagonal(const LatticeConfig& cfg, cd on_zero, cd on_one) {
  const auto m = static_cast<Eigen::Index>(cfg.sites());
  Eigen::VectorXcd d(2 * m);
  d.head(m).setConstant(on_zero);
  d.tail(m).setConstant(on_one);
  return d.asDiagonal();
}

TEST(CollisionTest, ZeroAnglesGiveIdentityBlock) {
  const LatticeConfig cfg(16, 0.0);
  const auto block = collision_block(cfg, collision_angles_from_phases(0.0, 0.0));
  EXPECT_LE(max_abs_diff(block, Eigen::MatrixXcd::Identity(32, 32)), 1e-12);
}

TEST(CollisionTest, ZeroVelocityHalvesEverything) {
  const LatticeConfig cfg(16, 0.0);
  const auto block = collision_block(cfg, collision_angles(0.0, 1.0));
  EXPECT_LE(max_abs_diff(block, 0.5 * Eigen::MatrixXcd::Identity(32, 32)), 1e-12);
}

TEST(CollisionTest, GeneralBlockIsSelectorDiagonal) {
  const LatticeConfig cfg(16, 0.0);
  for (const double u : {0.1, -0.3, 0.25}) {
    const auto a = collision_angles(u, 1.0);
    EXPECT_LE(max_abs_diff(collision_block(cfg, a), selector_diagonal(cfg, a.d1, a.d2)), 1e-12);
  }
}

TEST(CollisionTest, FullOperatorIsUnitary) {
  const LatticeConfig cfg(16, 0.0);
  const Eigen::MatrixXcd u = kernel_unitary(build_collision(cfg, collision_angles(0.3, 1.0)));
  EXPECT_LE(max_abs_diff(u.adjoint() * u, Eigen::MatrixXcd::Identity(u.rows(), u.cols())), 1e-12);
}

TEST(PropagationTest, BasisStatesMove) {
  const LatticeConfig cfg(16, 0.0);
  const Kernel k = build_propagation(cfg);
  {
    StateVector s(cfg.num_qubits());
    run(k, s);
    EXPECT_EQ(s.amplitude(1), cd(1, 0));  // |x=0, sel=0> -> |x=1, sel=0>
  }
  {
    StateVector s(cfg.num_qubits());
    s.apply(ops::x(cfg.layout().selector));
    run(k, s);
    EXPECT_EQ(s.amplitude(15 | 16), cd(1, 0));  // |x=0, sel=1> -> |x=15, sel=1>
  }
}

TEST(PropagationTest, PermutationOnWorkingQubitsWithCleanAncillas) {
  const LatticeConfig cfg(16, 0.0);
  const Eigen::MatrixXcd u = kernel_unitary(build_propagation(cfg));
  const auto expected = testing::permutation_matrix(5, [](std::uint64_t b) {
    const std::uint64_t x = b & 15U;
    const bool sel = (b >> 4) & 1U;
    return ((sel ? x + 15 : x + 1) % 16) | (b & 16U);
  });
  EXPECT_LE(max_abs_diff(testing::restrict(u, working_qubits(cfg), 0), expected), 1e-12);
  // Columns with idle ancillas have no weight outside the ancilla-0 rows.
  const auto block = testing::restrict(u, working_qubits(cfg), 0);
  for (Eigen::Index c = 0; c < block.cols(); ++c) EXPECT_NEAR(block.col(c).squaredNorm(), 1.0, 1e-12);
}

TEST(MacroscopicTest, SwapThenHadamard) {
  const LatticeConfig cfg(16, 0.0);
  const Kernel k = build_macroscopic(cfg);
  ASSERT_EQ(k.size(), 2U);
  EXPECT_EQ(k.instructions()[0], ops::swap(cfg.layout().selector, cfg.layout().lcu_ancilla));
  EXPECT_EQ(k.instructions()[1], ops::h(cfg.layout().lcu_ancilla));
}

TEST(MacroscopicTest, AddsTheTwoPopulations) {
  const LatticeConfig cfg(16, 0.0);
  std::mt19937_64 rng(83);
  std::normal_distribution<double> g;
  Eigen::VectorXcd a(16), b(16);
  for (auto& v : a) v = g(rng);
  for (auto& v : b) v = g(rng);
  ASSERT_EQ(cfg.num_qubits(), 9U);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(512);
  amps.head(16) = a;         // selector 0, ancilla 0
  amps.segment(16, 16) = b;  // selector 1, ancilla 0
  amps.normalize();
  const double scale = 1.0 / std::sqrt(a.squaredNorm() + b.squaredNorm());
  auto s = StateVector::from_amplitudes(amps);
  run(build_macroscopic(cfg), s);
  const Eigen::VectorXcd expected = scale * (a + b) / std::sqrt(2.0);
  EXPECT_LE((s.amplitudes().head(16) - expected).cwiseAbs().maxCoeff(), 1e-14);
}

// ---- stepping ----

TEST(StepTest, PointMassDiffusesSymmetrically) {
  const LatticeConfig cfg(16, 0.0);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(16);
  c(1) = 1.0;
  const ConcentrationField next = step(ConcentrationField(c), cfg);
  Eigen::VectorXd expected = Eigen::VectorXd::Zero(16);
  expected(0) = 0.5;
  expected(2) = 0.5;
  EXPECT_LE((next.values() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(StepTest, TriangleMatchesClassicalStep) {
  const LatticeConfig cfg(32, 0.0);
  const ConcentrationField next = step(ConcentrationField(triangle(32)), cfg);
  const Eigen::VectorXd classical = classical_lbm_step(triangle(32), 0.0, cfg.cs2());
  EXPECT_LE((next.values() - classical).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(StepTest, ReadoutIsRealAndRenormalized) {
  const LatticeConfig cfg(32, 0.1);
  std::mt19937_64 rng(89);
  const ConcentrationField field(random_field(32, rng));
  const StepReadout r = step_readout(field, cfg, collision_angles(0.1, cfg.cs2()));
  EXPECT_EQ(r.renormalization, 2.0 * field.norm());
  EXPECT_LE(r.amplitudes.imag().cwiseAbs().maxCoeff(), 1e-12);
}

TEST(StepTest, MassConservedOverRandomFields) {
  std::mt19937_64 rng(97);
  for (const double u : {0.0, 0.2, -0.1}) {
    const LatticeConfig cfg(16, u);
    const ConcentrationField field(random_field(16, rng));
    EXPECT_NEAR(step(field, cfg).mass(), field.mass(), 1e-10);
  }
}

TEST(StepTest, OracleEquivalence) {
  std::mt19937_64 rng(101);
  for (const std::size_t m : {16U, 32U}) {
    for (const double u : {0.0, 0.1, -0.1, 0.2}) {
      const LatticeConfig cfg(m, u);
      const Eigen::VectorXd c0 = random_field(static_cast<Eigen::Index>(m), rng);
      const auto quantum = run_simulation(ConcentrationField(c0), 5, cfg);
      const auto classical = classical_trajectory(c0, 5, u, cfg.cs2());
      for (std::size_t t = 0; t <= 5; ++t)
        EXPECT_LE((quantum[t].values() - classical[t]).cwiseAbs().maxCoeff(), 1e-12)
            << "M=" << m << " u=" << u << " t=" << t;
    }
  }
}

TEST(StepTest, OracleEquivalenceWithNonDefaultCs2) {
  const LatticeConfig cfg(16, 0.1, 1.0 / 3.0);
  const auto quantum = run_simulation(ConcentrationField(triangle(16)), 4, cfg);
  const auto classical = classical_trajectory(triangle(16), 4, 0.1, 1.0 / 3.0);
  for (std::size_t t = 0; t <= 4; ++t)
    EXPECT_LE((quantum[t].values() - classical[t]).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(StepTest, NegativeReadoutGuard) {
  // cos(2.5) < 0 drives f1 negative; the guard must trip.
  const LatticeConfig cfg(16, 0.0);
  EXPECT_THROW(step(ConcentrationField(triangle(16)), cfg, collision_angles_from_phases(2.5, 1.0)),
               std::runtime_error);
}

TEST(StepTest, RejectsZeroAndMismatchedFields) {
  const LatticeConfig cfg(16, 0.0);
  EXPECT_THROW(step(ConcentrationField(Eigen::VectorXd::Zero(16)), cfg), std::invalid_argument);
  EXPECT_THROW(step(ConcentrationField(triangle(32)), cfg), std::invalid_argument);
}

TEST(RunSimulationTest, ZeroStepsReturnsInitial) {
  const LatticeConfig cfg(16, 0.0);
  const auto traj = run_simulation(ConcentrationField(triangle(16)), 0, cfg);
  ASSERT_EQ(traj.size(), 1U);
  EXPECT_EQ(traj[0].values(), triangle(16));
}

TEST(RunSimulationTest, SymmetryPreservedWithoutAdvection) {
  const LatticeConfig cfg(32, 0.0);
  const auto traj = run_simulation(ConcentrationField(triangle(32)), 20, cfg);
  for (const auto& f : traj)
    for (std::size_t k = 1; k < 16; ++k)
      EXPECT_NEAR(f[(6 + k) % 32], f[(6 + 32 - k) % 32], 1e-12);
}

TEST(RunSimulationTest, PeakDriftsRight) {
  const LatticeConfig cfg(32, 0.1);
  const auto traj = run_simulation(ConcentrationField(triangle(32)), 40, cfg);
  Eigen::Index start = 0, end = 0;
  traj.front().values().maxCoeff(&start);
  traj.back().values().maxCoeff(&end);
  EXPECT_NEAR(static_cast<double>(end - start), 0.1 * 40, 1.0);
  for (const auto& f : traj) EXPECT_GE(f.values().minCoeff(), -1e-12);
}

}  // namespace
}  // namespace qlbm
