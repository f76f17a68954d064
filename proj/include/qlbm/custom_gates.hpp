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

#include <span>

#include "qlbm/kernel.hpp"

namespace qlbm {

// Each constructor returns a kernel whose width is one past the highest
// qubit it touches; use widen() to place it in a larger register.

/// Doubly-controlled phase: multiplies |c1=1, c2=1, target=1> by e^{i angle}.
/// Lowered to three CPhase and two CX gates.
Kernel ccphase(Qubit control1, Qubit control2, Qubit target, double angle);

/// Controlled global phase on the target's two-dimensional subspace:
/// both target values pick up e^{i angle} when c1 = c2 = 1.
Kernel cc_subspace_phase(Qubit control1, Qubit control2, Qubit target, double angle);

/// Multi-controlled X using a Toffoli V-cascade.
///
/// One control gives a CX and two a Toffoli. For k >= 3 controls, k-1
/// ancillas select the layout that ANDs all controls into the last ancilla
/// followed by a CX onto the target; exactly k-2 ancillas replace that CX by
/// a Toffoli. Ancillas must start in |0> and are returned to it.
Kernel mcx(std::span<const Qubit> controls, Qubit target, std::span<const Qubit> ancillas);

/// Modular increment |x> -> |x+1 mod 2^n> of the little-endian position
/// register, active when `selector` is |0>.
Kernel right_shift(std::span<const Qubit> position, Qubit selector,
                   std::span<const Qubit> ancillas);

/// Modular decrement |x> -> |x-1 mod 2^n>, active when `selector` is |1>.
Kernel left_shift(std::span<const Qubit> position, Qubit selector,
                  std::span<const Qubit> ancillas);

}  // namespace qlbm
