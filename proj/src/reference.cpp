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

#include "qlbm/reference.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qlbm {

Eigen::VectorXd classical_lbm_step(const Eigen::Ref<const Eigen::VectorXd>& concentration,
                                   double velocity, double cs2) {
  if (!(cs2 > 0.0)) throw std::domain_error("cs2 must be positive");
  constexpr double weight = 0.5;
  const double w1 = weight * (1.0 + velocity / cs2);  // e1 = +1
  const double w2 = weight * (1.0 - velocity / cs2);  // e2 = -1
  if (std::abs(w1) > 1.0 || std::abs(w2) > 1.0)
    throw std::domain_error("velocity out of range for the D1Q2 equilibrium");

  const Eigen::Index m = concentration.size();
  Eigen::VectorXd next(m);
  for (Eigen::Index x = 0; x < m; ++x) {
    const double from_left = concentration((x - 1 + m) % m);
    const double from_right = concentration((x + 1) % m);
    next(x) = w1 * from_left + w2 * from_right;
  }
  return next;
}

std::vector<Eigen::VectorXd> classical_trajectory(const Eigen::VectorXd& initial,
                                                  std::size_t steps, double velocity,
                                                  double cs2) {
  std::vector<Eigen::VectorXd> out{initial};
  out.reserve(steps + 1);
  for (std::size_t t = 0; t < steps; ++t)
    out.push_back(classical_lbm_step(out.back(), velocity, cs2));
  return out;
}

namespace {

// Least-squares slope of y against t over [first, y.size()).
double fit_slope(const std::vector<double>& y, std::size_t first) {
  const auto n = static_cast<double>(y.size() - first);
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t t = first; t < y.size(); ++t) {
    const auto tt = static_cast<double>(t);
    st += tt;
    sy += y[t];
    stt += tt * tt;
    sty += tt * y[t];
  }
  return (n * sty - st * sy) / (n * stt - st * st);
}

}  // namespace

AnalyticalReport analytical_checks(std::span<const Eigen::VectorXd> trajectory, double velocity,
                                   double cs2) {
  if (trajectory.size() < 3)
    throw std::invalid_argument("analytical_checks needs at least 3 snapshots");
  const Eigen::Index m = trajectory.front().size();
  const double k = 2.0 * std::numbers::pi / static_cast<double>(m);

  AnalyticalReport report;
  report.expected_drift_rate = velocity;
  report.expected_variance_slope = cs2;

  const double mass0 = trajectory.front().sum();
  double previous_phase = 0.0;
  double unwrapped = 0.0;
  for (std::size_t t = 0; t < trajectory.size(); ++t) {
    const auto& c = trajectory[t];
    if (c.size() != m) throw std::invalid_argument("trajectory snapshots differ in size");
    std::complex<double> m1{0.0, 0.0};
    for (Eigen::Index x = 0; x < m; ++x)
      m1 += c(x) * std::polar(1.0, k * static_cast<double>(x));
    const double mass = c.sum();
    report.max_mass_deviation = std::max(report.max_mass_deviation, std::abs(mass - mass0));

    const double phase = std::arg(m1);
    if (t == 0) {
      unwrapped = phase;
    } else {
      double delta = phase - previous_phase;
      delta -= 2.0 * std::numbers::pi * std::round(delta / (2.0 * std::numbers::pi));
      unwrapped += delta;
    }
    previous_phase = phase;
    report.centre.push_back(unwrapped / k);
    report.variance.push_back(-2.0 * std::log(std::abs(m1) / mass) / (k * k));
  }

  const std::size_t first = trajectory.size() / 4;
  report.drift_rate = fit_slope(report.centre, first);
  report.variance_slope = fit_slope(report.variance, first);
  return report;
}

}  // namespace qlbm
