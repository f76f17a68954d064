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
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qlbm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag values; reported with exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Resolves `triangle`, `gaussian:x0,sigma,amp` or `file:<path>` into a
/// field of `sites` values.
Eigen::VectorXd parse_initial_field(const std::string& spec, std::size_t sites);

/// CSV with header `step,x,concentration`, step-major, 17 significant digits.
void write_csv(std::ostream& out, std::span<const Eigen::VectorXd> trajectory);

/// Standalone SVG with one concentration-vs-x polyline per selected step.
void write_svg(std::ostream& out, std::span<const Eigen::VectorXd> trajectory,
               std::span<const std::size_t> steps);

/// Steps drawn by default: up to five evenly spaced snapshots including the
/// first and last.
std::vector<std::size_t> default_plot_steps(std::size_t trajectory_length);

/// Entry point shared by the `qlbm` executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlbm::cli
