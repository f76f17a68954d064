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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qlbm {

/// One classical D1Q2 step with tau = 1: f_i = w_i C (1 + e_i u / cs2),
/// f1 streams to x+1 and f2 to x-1 (periodic), C' = f1 + f2.
/// Throws std::domain_error for inadmissible (u, cs2).
Eigen::VectorXd classical_lbm_step(const Eigen::Ref<const Eigen::VectorXd>& concentration,
                                   double velocity, double cs2);

/// C_0 ... C_steps under classical_lbm_step.
std::vector<Eigen::VectorXd> classical_trajectory(const Eigen::VectorXd& initial,
                                                  std::size_t steps, double velocity,
                                                  double cs2);

/// Transport diagnostics of a trajectory on a periodic lattice.
///
/// Drift and variance come from the first circular moment
/// m1(t) = sum_x C(x,t) e^{2 pi i x / M}: the centre is the unwrapped phase
/// of m1 scaled to sites, the spread is the wrapped-normal variance
/// -2 ln(|m1| / m0) / k^2. Slopes are least-squares fits over t >= T/4.
struct AnalyticalReport {
  double drift_rate = 0.0;          // sites per step
  double expected_drift_rate = 0.0; // u
  double variance_slope = 0.0;      // sites^2 per step
  double expected_variance_slope = 0.0;  // 2 D = cs2 for tau = 1
  double max_mass_deviation = 0.0;  // max_t |sum C_t - sum C_0|
  std::vector<double> centre;       // unwrapped centre of mass per step
  std::vector<double> variance;     // circular variance per step
};

/// Throws std::invalid_argument for fewer than 3 snapshots or ragged input.
AnalyticalReport analytical_checks(std::span<const Eigen::VectorXd> trajectory, double velocity,
                                   double cs2);

/// Entrywise sum c_i U_i. Throws std::invalid_argument when the term counts
/// differ, the list is empty, or the matrices are not square of one size.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> lcu_combine(
    std::span<const std::complex<Scalar>> coeffs,
    std::span<const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>>
        matrices) {
  if (coeffs.size() != matrices.size() || coeffs.empty())
    throw std::invalid_argument("lcu_combine: need one coefficient per matrix");
  const Eigen::Index dim = matrices.front().rows();
  using Matrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].rows() != dim || matrices[i].cols() != dim)
      throw std::invalid_argument("lcu_combine: matrices must be square and of equal size");
    out += coeffs[i] * matrices[i];
  }
  return out;
}

inline Eigen::MatrixXcd lcu_combine(std::initializer_list<std::complex<double>> coeffs,
                                    std::initializer_list<Eigen::MatrixXcd> matrices) {
  return lcu_combine<double>(std::span(coeffs.begin(), coeffs.size()),
                             std::span(matrices.begin(), matrices.size()));
}

}  // namespace qlbm
