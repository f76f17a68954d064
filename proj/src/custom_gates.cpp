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

#include "qlbm/custom_gates.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlbm {

namespace {

void require_distinct(std::initializer_list<std::span<const Qubit>> groups, const char* who) {
  std::set<Qubit> seen;
  for (const auto group : groups)
    for (const Qubit q : group)
      if (!seen.insert(q).second)
        throw std::invalid_argument(std::string(who) + ": qubit " + std::to_string(q) +
                                    " used more than once");
}

void append(std::vector<GateInstruction>& out, const Kernel& k) {
  out.insert(out.end(), k.instructions().begin(), k.instructions().end());
}

// The multi-controlled X as a plain gate list (no width attached).
std::vector<GateInstruction> mcx_gates(std::span<const Qubit> controls, Qubit target,
                                       std::span<const Qubit> ancillas) {
  const std::size_t k = controls.size();
  if (k == 0) throw std::invalid_argument("mcx: at least one control required");
  if (k == 1) return {ops::cx(controls[0], target)};
  if (k == 2) return {ops::toffoli(controls[0], controls[1], target)};
  if (ancillas.size() < k - 2)
    throw std::invalid_argument("mcx: " + std::to_string(k) + " controls need at least " +
                                std::to_string(k - 2) + " ancillas, got " +
                                std::to_string(ancillas.size()));

  // Compute chain: anc[0] = c0 & c1, anc[j] = c[j+1] & anc[j-1].
  const bool full_chain = ancillas.size() >= k - 1;
  const std::size_t chain = full_chain ? k - 1 : k - 2;
  std::vector<GateInstruction> compute;
  compute.push_back(ops::toffoli(controls[0], controls[1], ancillas[0]));
  for (std::size_t j = 1; j < chain; ++j)
    compute.push_back(ops::toffoli(controls[j + 1], ancillas[j - 1], ancillas[j]));

  std::vector<GateInstruction> out = compute;
  if (full_chain)
    out.push_back(ops::cx(ancillas[chain - 1], target));
  else
    out.push_back(ops::toffoli(controls[k - 1], ancillas[chain - 1], target));
  out.insert(out.end(), compute.rbegin(), compute.rend());
  return out;
}

std::size_t width_of(std::initializer_list<std::span<const Qubit>> groups) {
  Qubit hi = 0;
  bool any = false;
  for (const auto g : groups)
    for (const Qubit q : g) {
      hi = std::max(hi, q);
      any = true;
    }
  return any ? static_cast<std::size_t>(hi) + 1 : 0;
}

// Increment cascade without the selector polarity handling: for each
// position bit from the top down, flip it when the selector and all lower
// bits are set; finish with CX(selector, q0).
std::vector<GateInstruction> increment_gates(std::span<const Qubit> position, Qubit selector,
                                             std::span<const Qubit> ancillas) {
  std::vector<GateInstruction> out;
  for (std::size_t b = position.size(); b-- > 0;) {
    std::vector<Qubit> controls{selector};
    controls.insert(controls.end(), position.begin(), position.begin() + static_cast<long>(b));
    const auto gates = mcx_gates(controls, position[b], ancillas);
    out.insert(out.end(), gates.begin(), gates.end());
  }
  return out;
}

void check_shift_args(std::span<const Qubit> position, Qubit selector,
                      std::span<const Qubit> ancillas, const char* who) {
  if (position.empty()) throw std::invalid_argument(std::string(who) + ": empty position register");
  const std::array<Qubit, 1> sel{selector};
  require_distinct({position, sel, ancillas}, who);
  const std::size_t widest = position.size();  // selector + (n-1) lower bits
  if (widest >= 3 && ancillas.size() < widest - 2)
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(position.size()) +
                                " position qubits need at least " + std::to_string(widest - 2) +
                                " ancillas, got " + std::to_string(ancillas.size()));
}

}  // namespace

Kernel ccphase(Qubit control1, Qubit control2, Qubit target, double angle) {
  const std::array<Qubit, 3> qs{control1, control2, target};
  require_distinct({qs}, "ccphase");
  return build_kernel("ccphase", width_of({qs}),
                      {
                          ops::cphase(control2, target, angle / 2),
                          ops::cx(control1, control2),
                          ops::cphase(control2, target, -angle / 2),
                          ops::cx(control1, control2),
                          ops::cphase(control1, target, angle / 2),
                      });
}

Kernel cc_subspace_phase(Qubit control1, Qubit control2, Qubit target, double angle) {
  const std::array<Qubit, 3> qs{control1, control2, target};
  require_distinct({qs}, "cc_subspace_phase");
  const Kernel phase = ccphase(control1, control2, target, angle);
  std::vector<GateInstruction> out;
  append(out, phase);
  out.push_back(ops::toffoli(control1, control2, target));
  append(out, phase);
  out.push_back(ops::toffoli(control1, control2, target));
  return build_kernel("cc_subspace_phase", width_of({qs}), std::move(out));
}

Kernel mcx(std::span<const Qubit> controls, Qubit target, std::span<const Qubit> ancillas) {
  const std::array<Qubit, 1> t{target};
  require_distinct({controls, t, ancillas}, "mcx");
  return build_kernel("mcx" + std::to_string(controls.size()), width_of({controls, t, ancillas}),
                      mcx_gates(controls, target, ancillas));
}

Kernel right_shift(std::span<const Qubit> position, Qubit selector,
                   std::span<const Qubit> ancillas) {
  check_shift_args(position, selector, ancillas, "right_shift");
  std::vector<GateInstruction> out{ops::x(selector)};
  const auto body = increment_gates(position, selector, ancillas);
  out.insert(out.end(), body.begin(), body.end());
  out.push_back(ops::x(selector));
  const std::array<Qubit, 1> sel{selector};
  return build_kernel("right_shift", width_of({position, sel, ancillas}), std::move(out));
}

Kernel left_shift(std::span<const Qubit> position, Qubit selector,
                  std::span<const Qubit> ancillas) {
  check_shift_args(position, selector, ancillas, "left_shift");
  // Every gate in the increment is self-inverse, so the reversed list is the
  // decrement.
  auto body = increment_gates(position, selector, ancillas);
  std::reverse(body.begin(), body.end());
  const std::array<Qubit, 1> sel{selector};
  return build_kernel("left_shift", width_of({position, sel, ancillas}), std::move(body));
}

}  // namespace qlbm
