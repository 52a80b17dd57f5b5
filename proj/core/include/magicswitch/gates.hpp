// Copyright 2026 The magic-switch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGICSWITCH_GATES_HPP_
#define MAGICSWITCH_GATES_HPP_

#include <cstddef>

#include "magicswitch/operator.hpp"

namespace magicswitch::gates {

// Qubit gates.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();
Operator phase_s();               // diag(1, i)
Operator t_gate();                // diag(1, e^{i pi/4})

// `gate` acting on `wire` of an n-wire register of local dimension
// gate.rows(); wire 0 is the leftmost tensor factor.
Operator on_wire(const Operator& gate, std::size_t wire, std::size_t n_wires);
Operator cnot(std::size_t control, std::size_t target, std::size_t n_qubits);

// Generalized Pauli operators for any d >= 2.
Operator shift(std::size_t d);    // X|j> = |j+1 mod d>
Operator clock(std::size_t d);    // Z|j> = w^j |j>, w = e^{2 pi i / d}

// Qutrit gates. H_jk = w^{jk}/sqrt(3), S = diag(1, 1, w),
// T = diag(zeta, 1, zeta^{-1}) with zeta = e^{2 pi i / 9}.
Operator qutrit_hadamard();
Operator qutrit_phase_s();
Operator qutrit_t_gate();

}  // namespace magicswitch::gates

#endif  // MAGICSWITCH_GATES_HPP_
