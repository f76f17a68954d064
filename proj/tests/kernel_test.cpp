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

#include <random>

#include <gtest/gtest.h>

#include "qlbm/custom_gates.hpp"
#include "test_support.hpp"

namespace qlbm {
namespace {

TEST(KernelTest, BuildKernel) {
  const Kernel k = build_kernel("h0", 1, {ops::h(0)});
  EXPECT_EQ(k.size(), 1U);
  EXPECT_EQ(k.name(), "h0");
  EXPECT_EQ(k.num_qubits(), 1U);
}

TEST(KernelTest, ValidationPinpointsInstruction) {
  try {
    build_kernel("bad", 3, {ops::x(5)});
    FAIL() << "expected KernelValidationError";
  } catch (const KernelValidationError& e) {
    EXPECT_EQ(e.instruction_index(), 0U);
  }
  try {
    build_kernel("bad", 3, {ops::x(0), ops::h(1), ops::cx(2, 3)});
    FAIL() << "expected KernelValidationError";
  } catch (const KernelValidationError& e) {
    EXPECT_EQ(e.instruction_index(), 2U);
  }
}

TEST(KernelTest, EmptyKernelIsIdentity) {
  const Kernel k = build_kernel("id", 2, {});
  EXPECT_TRUE(k.empty());
  EXPECT_LE(testing::max_abs_diff(kernel_unitary(k), Eigen::MatrixXcd::Identity(4, 4)), 0.0);

  std::mt19937_64 rng(1);
  auto s = testing::random_state(2, rng);
  const auto before = s.amplitudes();
  run(k, s);
  EXPECT_EQ(s.amplitudes(), before);
}

TEST(KernelTest, SingleXUnitary) {
  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_EQ(kernel_unitary(build_kernel("x", 1, {ops::x(0)})), x);
}

TEST(KernelTest, RunHadamard) {
  auto s = new_state(1);
  run(build_kernel("h", 1, {ops::h(0)}), s);
  EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(KernelTest, RunWidthMismatch) {
  auto s = new_state(3);
  EXPECT_THROW(run(build_kernel("h", 1, {ops::h(0)}), s), std::invalid_argument);
}

TEST(KernelTest, ComposePreservesOrder) {
  const Kernel a = build_kernel("a", 2, {ops::h(0), ops::x(1)});
  const Kernel b = build_kernel("b", 2, {ops::cx(0, 1)});
  const Kernel ab = compose({a, b});
  ASSERT_EQ(ab.size(), 3U);
  EXPECT_EQ(ab.instructions()[0], ops::h(0));
  EXPECT_EQ(ab.instructions()[1], ops::x(1));
  EXPECT_EQ(ab.instructions()[2], ops::cx(0, 1));

  const Kernel single = compose({a});
  EXPECT_TRUE(std::equal(single.instructions().begin(), single.instructions().end(),
                         a.instructions().begin(), a.instructions().end()));
}

TEST(KernelTest, ComposeOfInvolutionIsIdentity) {
  const Kernel x = build_kernel("x", 1, {ops::x(0)});
  auto s = new_state(1);
  run(compose({x, x}), s);
  EXPECT_EQ(s.amplitude(0), std::complex<double>(1, 0));
}

TEST(KernelTest, ComposeWidthMismatch) {
  const Kernel a = build_kernel("a", 2, {});
  const Kernel b = build_kernel("b", 3, {});
  EXPECT_THROW(compose({a, b}), std::invalid_argument);
}

TEST(KernelTest, ComposedRunIsBitIdenticalToSequentialRuns) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Kernel a = testing::random_kernel(4, 15, rng);
    const Kernel b = testing::random_kernel(4, 15, rng);
    auto s1 = testing::random_state(4, rng);
    auto s2 = s1;
    run(compose({a, b}), s1);
    run(a, s2);
    run(b, s2);
    EXPECT_EQ(s1.amplitudes(), s2.amplitudes());
  }
}

TEST(KernelTest, UnitaryOfComposeIsProduct) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Kernel a = testing::random_kernel(4, 12, rng);
    const Kernel b = testing::random_kernel(4, 12, rng);
    const Eigen::MatrixXcd expected = kernel_unitary(b) * kernel_unitary(a);
    EXPECT_LE(testing::max_abs_diff(kernel_unitary(compose({a, b})), expected), 1e-12);
  }
}

TEST(KernelTest, UnitaryIsUnitary) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXcd u = kernel_unitary(testing::random_kernel(5, 40, rng));
    EXPECT_LE(testing::max_abs_diff(u.adjoint() * u, Eigen::MatrixXcd::Identity(32, 32)), 1e-12);
  }
}

TEST(KernelTest, SimulatorMatchesDenseUnitary) {
  std::mt19937_64 rng(37);
  for (std::size_t n : {3U, 6U, 10U}) {
    const Kernel k = testing::random_kernel(n, 30, rng);
    const Eigen::MatrixXcd u = kernel_unitary(k);
    auto s = testing::random_state(n, rng);
    const Eigen::VectorXcd expected = u * s.amplitudes();
    run(k, s);
    EXPECT_LE((s.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12) << n << " qubits";
  }
}

TEST(KernelTest, UnitaryGuard) {
  EXPECT_THROW(kernel_unitary(build_kernel("big", 11, {})), std::length_error);
}

TEST(KernelTest, EmbedRelabelsQubits) {
  const Kernel k = build_kernel("cx", 2, {ops::cx(0, 1)});
  const std::array<Qubit, 2> mapping{3, 1};
  const Kernel wide = embed(k, 4, mapping);
  EXPECT_EQ(wide.num_qubits(), 4U);
  EXPECT_EQ(wide.instructions()[0], ops::cx(3, 1));
}

TEST(KernelTest, WidenKeepsQubits) {
  const Kernel k = widen(build_kernel("h", 1, {ops::h(0)}), 3);
  EXPECT_EQ(k.num_qubits(), 3U);
  EXPECT_EQ(k.instructions()[0], ops::h(0));
  EXPECT_THROW(widen(k, 2), std::invalid_argument);
}

TEST(KernelTest, AdjointInverts) {
  std::mt19937_64 rng(41);
  const Kernel k = testing::random_kernel(4, 30, rng);
  const Eigen::MatrixXcd u = kernel_unitary(compose({k, adjoint(k)}));
  EXPECT_LE(testing::max_abs_diff(u, Eigen::MatrixXcd::Identity(16, 16)), 1e-12);
}

}  // namespace
}  // namespace qlbm
