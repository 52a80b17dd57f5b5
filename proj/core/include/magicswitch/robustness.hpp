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

#ifndef MAGICSWITCH_ROBUSTNESS_HPP_
#define MAGICSWITCH_ROBUSTNESS_HPP_

#include "magicswitch/l1_solver.hpp"
#include "magicswitch/operator.hpp"
#include "magicswitch/stabilizer.hpp"

namespace magicswitch {

// A robustness value counts as "free" (equal to one) below 1 + this.
inline constexpr double kRobustnessFreeTol = 1e-6;

inline bool robustness_is_free(double value, double tol = kRobustnessFreeTol) {
  return value < 1.0 + tol;
}

struct RomResult {
  L1Solution solution;
  double scale = 1.0;  // trace of the input before renormalization
};

// Robustness of magic: min ||q||_1 with sum_i q_i |s_i><s_i| = rho over the
// dictionary atoms. Unnormalized inputs are renormalized first (logged).
RomResult rom_state(const DensityOperator& rho, const StabilizerDictionary& dict,
                    const SimplexOptions& options = {});

AffineL1Problem rom_problem(const Operator& rho, const StabilizerDictionary& dict);

// Channel robustness R_*(N) = min 1 + 2p over N = (1+p) N_+ - p N_- with N_+
// and N_- completely stabilizer preserving. Both Choi states are conic
// combinations of stabilizer atoms: coefficients a_i (positive part) come
// first in the solution, b_i (negative part) after. Trace preservation of
// N_- is imposed by forcing the traceless part of Tr_out(sum_i b_i s_i) to
// vanish; that of N_+ then follows from Tr_out J_N = I/d.
L1Solution channel_robustness(const KrausChannel& ch, const CspoAtoms& atoms,
                              const SimplexOptions& options = {});

AffineL1Problem channel_robustness_problem(const KrausChannel& ch, const CspoAtoms& atoms);

}  // namespace magicswitch

#endif  // MAGICSWITCH_ROBUSTNESS_HPP_
