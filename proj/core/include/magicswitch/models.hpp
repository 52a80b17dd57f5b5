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

#ifndef MAGICSWITCH_MODELS_HPP_
#define MAGICSWITCH_MODELS_HPP_

#include "magicswitch/operator.hpp"

namespace magicswitch::models {

// Qubit channel with Kraus operators
//   K0 = sqrt(p/2) (|0><0| + |0><1|),  K1 = sqrt(p/2) (|1><1| - |1><0|),
//   K2 = sqrt(1-p) T H.
// Completely stabilizer preserving for p >~ 0.29, yet its switched pair turns
// |+> into a magic state on the + branch up to p ~ 0.59.
KrausChannel noisy_th_channel(double p);

// D_p o D_p o T on a qubit.
KrausChannel sequential_depolarized_t(double p);

// Qutrit channel: with probability-like weight p the input is measured in the
// Fourier basis and |k> is prepared (with fixed phases), otherwise T H is
// applied. Two Kraus sets are available for the k = 2 operator:
//   original:  sqrt(p/3) zeta (|2><0| + w^2 |1><1| + w |1><2|)
//   corrected: sqrt(p/3) zeta (|2><0| + w^2 |2><1| + w |2><2|)
// Only the corrected set is complete; the original one is kept so the
// discrepancy can be reported.
enum class QutritKrausVariant { original, corrected };

KrausChannel qutrit_th_channel(double p, QutritKrausVariant variant);

struct QutritKrausResolution {
  QutritKrausVariant used = QutritKrausVariant::corrected;
  double original_completeness_error = 0.0;
  double corrected_completeness_error = 0.0;
  KrausChannel channel;
};

// Checks both Kraus sets at `p` and returns the original one if it is
// complete, the corrected one otherwise. Throws std::runtime_error if
// neither passes.
QutritKrausResolution resolve_qutrit_th_channel(double p);

const char* to_string(QutritKrausVariant variant);

// (|0> + ... + |d-1>) / sqrt(d).
DensityOperator plus_state(std::size_t d);

}  // namespace magicswitch::models

#endif  // MAGICSWITCH_MODELS_HPP_
