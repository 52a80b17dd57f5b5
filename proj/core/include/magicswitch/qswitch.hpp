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

#ifndef MAGICSWITCH_QSWITCH_HPP_
#define MAGICSWITCH_QSWITCH_HPP_

#include <cstddef>
#include <vector>

#include "magicswitch/operator.hpp"

namespace magicswitch {

// Which inner channel acts last on the |0>_c branch.
//   standard: W_ij = |0><0|_c (x) E_i F_j + |1><1|_c (x) F_j E_i
//   swapped:  W_ij = |0><0|_c (x) F_j E_i + |1><1|_c (x) E_i F_j
// with {E_i} the Kraus set of `a` and {F_j} that of `b`. For a == b the two
// coincide.
enum class SwitchOrder { standard, swapped };

// Quantum SWITCH of two equal-dimension channels acting on a control qubit
// (first tensor factor) and a d-dimensional target.
class SwitchedChannel {
 public:
  const KrausChannel& inner_a() const { return a_; }
  const KrausChannel& inner_b() const { return b_; }
  SwitchOrder order() const { return order_; }
  std::size_t target_dim() const { return a_.d_in(); }
  const std::vector<Operator>& switch_kraus() const { return kraus_; }

  KrausChannel as_channel() const { return KrausChannel(kraus_); }
  // Acts on control (x) target.
  DensityOperator apply(const DensityOperator& joint) const;

 private:
  friend SwitchedChannel build_switch(const KrausChannel&, const KrausChannel&, SwitchOrder);
  SwitchedChannel(KrausChannel a, KrausChannel b, SwitchOrder order,
                  std::vector<Operator> kraus)
      : a_(std::move(a)), b_(std::move(b)), order_(order), kraus_(std::move(kraus)) {}

  KrausChannel a_;
  KrausChannel b_;
  SwitchOrder order_;
  std::vector<Operator> kraus_;
};

// Throws DimensionError for mismatched or non-square inner channels and
// std::invalid_argument if either is incomplete, or if the constructed
// switch fails completeness.
SwitchedChannel build_switch(const KrausChannel& a, const KrausChannel& b,
                             SwitchOrder order = SwitchOrder::standard);

struct ConditionalOutputs {
  DensityOperator rho_plus;   // unnormalized target after outcome +
  DensityOperator rho_minus;  // unnormalized target after outcome -
  double prob_plus = 0.0;
  double prob_minus = 0.0;
};

// Runs the switch on control_in (x) target_in and measures the control in
// the {|+>, |->} basis.
ConditionalOutputs conditional_outputs(const SwitchedChannel& sw, const DensityOperator& target_in,
                                       const DensityOperator& control_in);
// Same with the control prepared in |+>.
ConditionalOutputs conditional_outputs(const SwitchedChannel& sw, const DensityOperator& target_in);

// Switching two copies of D_p with control |+> and post-selecting the
// control leaves a weighted depolarizing channel on each branch:
//   outcome +: weight_plus  * D_{p_plus},   p_plus  = d^2 (4p - 3p^2) / (2d^2 - (d^2-1) p^2)
//   outcome -: weight_minus * D_{p_minus},  p_minus = d^2 / (d^2 - 1)
// with weight_plus = (2d^2 - (d^2-1) p^2) / (2d^2) and weight_minus = 1 - weight_plus.
struct EffectiveDepolarizingSwitch {
  std::size_t d = 0;
  double p = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double weight_plus = 0.0;
  double weight_minus = 0.0;
};

// Throws std::invalid_argument for d < 2 or p outside [0, 1].
EffectiveDepolarizingSwitch effective_depolarizing_switch(std::size_t d, double p);

struct BranchStates {
  DensityOperator rho_plus;
  DensityOperator rho_minus;
};

BranchStates depolarizing_switch_closed_form(std::size_t d, double p, const DensityOperator& rho);

// A trace-preserving channel together with the probability weight of the
// branch it describes; the branch map itself is weight * channel.
struct WeightedChannel {
  double weight = 0.0;
  KrausChannel channel;
};

struct EffectiveTChannels {
  WeightedChannel plus;   // weight_plus  * D_{p_plus}  o T
  WeightedChannel minus;  // weight_minus * D_{p_minus} o T
};

// Qubit T gate followed by the post-selected branches of the switched pair
// of p-depolarizing channels.
EffectiveTChannels effective_t_channels(double p);

}  // namespace magicswitch

#endif  // MAGICSWITCH_QSWITCH_HPP_
