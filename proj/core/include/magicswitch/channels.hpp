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

#ifndef MAGICSWITCH_CHANNELS_HPP_
#define MAGICSWITCH_CHANNELS_HPP_

#include <cstddef>
#include <vector>

#include "magicswitch/operator.hpp"

namespace magicswitch {

KrausChannel identity_channel(std::size_t d);
KrausChannel unitary_channel(const Operator& u);

// `outer` after `inner`: Kraus set {A_i B_j}.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

// The d^2 operators Z^a X^b, (a, b) in Z_d x Z_d, ordered with a major and
// the identity first. They are unitary and orthogonal under the
// Hilbert-Schmidt inner product, Tr[U_i^dagger U_j] = d delta_ij.
std::vector<Operator> clock_shift_basis(std::size_t d);

// D_p(rho) = p Tr(rho) I/d + (1-p) rho, valid as a channel for
// 0 <= p <= d^2/(d^2-1). Kraus set: sqrt(1 - p (d^2-1)/d^2) I together with
// sqrt(p)/d U_i for the d^2 - 1 non-identity clock-shift operators.
KrausChannel depolarizing_channel(std::size_t d, double p);

// Closed form of the depolarizing action, for cross-checks.
Operator depolarize(const Operator& rho, double p);

}  // namespace magicswitch

#endif  // MAGICSWITCH_CHANNELS_HPP_
