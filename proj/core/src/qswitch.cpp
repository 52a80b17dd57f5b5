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

#include "magicswitch/qswitch.hpp"

#include <fmt/format.h>

#include "magicswitch/channels.hpp"
#include "magicswitch/gates.hpp"

namespace magicswitch {

DensityOperator SwitchedChannel::apply(const DensityOperator& joint) const {
  if (joint.dim() != 2 * target_dim()) {
    throw DimensionError(fmt::format("SwitchedChannel::apply: input dimension {} != 2 x {}",
                                     joint.dim(), target_dim()));
  }
  const auto n = static_cast<Eigen::Index>(joint.dim());
  Operator out = Operator::Zero(n, n);
  for (const Operator& w : kraus_) out.noalias() += w * joint.op() * w.adjoint();
  return DensityOperator::from_operator(out);
}

SwitchedChannel build_switch(const KrausChannel& a, const KrausChannel& b, SwitchOrder order) {
  if (a.d_in() != a.d_out() || b.d_in() != b.d_out() || a.d_in() != b.d_in()) {
    throw DimensionError(fmt::format(
        "build_switch: inner channels must be square and equal-sized ({}->{} and {}->{})",
        a.d_in(), a.d_out(), b.d_in(), b.d_out()));
  }
  a.validate();
  b.validate();

  Operator p0 = Operator::Zero(2, 2);
  p0(0, 0) = 1.0;
  Operator p1 = Operator::Zero(2, 2);
  p1(1, 1) = 1.0;

  std::vector<Operator> kraus;
  kraus.reserve(a.kraus_ops().size() * b.kraus_ops().size());
  for (const Operator& e : a.kraus_ops()) {
    for (const Operator& f : b.kraus_ops()) {
      const Operator ef = e * f;
      const Operator fe = f * e;
      if (order == SwitchOrder::standard) {
        kraus.push_back(tensor(p0, ef) + tensor(p1, fe));
      } else {
        kraus.push_back(tensor(p0, fe) + tensor(p1, ef));
      }
    }
  }
  SwitchedChannel sw(a, b, order, std::move(kraus));
  sw.as_channel().validate();
  return sw;
}

ConditionalOutputs conditional_outputs(const SwitchedChannel& sw, const DensityOperator& target_in,
                                       const DensityOperator& control_in) {
  if (control_in.dim() != 2) {
    throw DimensionError("conditional_outputs: control must be a qubit");
  }
  if (target_in.dim() != sw.target_dim()) {
    throw DimensionError(fmt::format("conditional_outputs: target dimension {} vs switch {}",
                                     target_in.dim(), sw.target_dim()));
  }
  const DensityOperator joint =
      DensityOperator::from_operator(tensor(control_in.op(), target_in.op()));
  const DensityOperator out = sw.apply(joint);
  MeasuredBranch plus = measure_control(out, 0, FourierOutcome::plus);
  MeasuredBranch minus = measure_control(out, 0, FourierOutcome::minus);
  return {std::move(plus.state), std::move(minus.state), plus.probability, minus.probability};
}

ConditionalOutputs conditional_outputs(const SwitchedChannel& sw, const DensityOperator& target_in) {
  Ket plus(2);
  plus << 1.0, 1.0;
  return conditional_outputs(sw, target_in, DensityOperator::pure(plus));
}

EffectiveDepolarizingSwitch effective_depolarizing_switch(std::size_t d, double p) {
  if (d < 2) throw std::invalid_argument("effective_depolarizing_switch: d must be >= 2");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(fmt::format("effective_depolarizing_switch: p = {} not in [0, 1]", p));
  }
  const double d2 = static_cast<double>(d) * static_cast<double>(d);
  const double denom = 2.0 * d2 - (d2 - 1.0) * p * p;
  EffectiveDepolarizingSwitch e;
  e.d = d;
  e.p = p;
  e.p_plus = d2 * (4.0 * p - 3.0 * p * p) / denom;
  e.p_minus = d2 / (d2 - 1.0);
  e.weight_plus = denom / (2.0 * d2);
  e.weight_minus = (d2 - 1.0) * p * p / (2.0 * d2);
  return e;
}

BranchStates depolarizing_switch_closed_form(std::size_t d, double p, const DensityOperator& rho) {
  if (rho.dim() != d) {
    throw DimensionError(fmt::format("depolarizing_switch_closed_form: state dimension {} != d = {}",
                                     rho.dim(), d));
  }
  const EffectiveDepolarizingSwitch e = effective_depolarizing_switch(d, p);
  return {DensityOperator::from_operator(e.weight_plus * depolarize(rho.op(), e.p_plus)),
          DensityOperator::from_operator(e.weight_minus * depolarize(rho.op(), e.p_minus))};
}

EffectiveTChannels effective_t_channels(double p) {
  const EffectiveDepolarizingSwitch e = effective_depolarizing_switch(2, p);
  const KrausChannel t = unitary_channel(gates::t_gate());
  return {{e.weight_plus, compose(depolarizing_channel(2, e.p_plus), t)},
          {e.weight_minus, compose(depolarizing_channel(2, e.p_minus), t)}};
}

}  // namespace magicswitch
