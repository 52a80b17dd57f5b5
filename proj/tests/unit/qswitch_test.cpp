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

#include <gtest/gtest.h>

#include <cmath>

#include "magicswitch/channels.hpp"
#include "magicswitch/gates.hpp"
#include "magicswitch/models.hpp"
#include "magicswitch/qswitch.hpp"
#include "support/test_support.hpp"

namespace ms = magicswitch;
namespace ts = testing_support;

namespace {

const std::vector<double> kPs = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

TEST(Switch, KrausSetIsComplete) {
  ts::Rng rng(1);
  const ms::KrausChannel a(rng.kraus(3, 2));
  const ms::KrausChannel b(rng.kraus(3, 3));
  for (auto order : {ms::SwitchOrder::standard, ms::SwitchOrder::swapped}) {
    const ms::SwitchedChannel sw = ms::build_switch(a, b, order);
    EXPECT_EQ(sw.switch_kraus().size(), 6u);
    EXPECT_TRUE(sw.as_channel().is_complete());
    EXPECT_EQ(sw.target_dim(), 3u);
  }
}

TEST(Switch, RejectsBadInnerChannels) {
  EXPECT_THROW(ms::build_switch(ms::identity_channel(2), ms::identity_channel(3)), ms::DimensionError);
  const ms::KrausChannel incomplete({0.5 * ms::Operator::Identity(2, 2)});
  EXPECT_THROW(ms::build_switch(incomplete, ms::identity_channel(2)), std::invalid_argument);
}

TEST(Switch, BranchesMatchKrausSumOracle) {
  ts::Rng rng(2);
  for (Eigen::Index d : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto e = rng.kraus(d, 2);
      const auto f = rng.kraus(d, 1 + trial % 3);
      const ms::Operator rho = rng.density(d);
      const auto oracle = ts::switch_branches(e, f, rho);
      for (auto order : {ms::SwitchOrder::standard, ms::SwitchOrder::swapped}) {
        const ms::ConditionalOutputs out = ms::conditional_outputs(
            ms::build_switch(ms::KrausChannel(e), ms::KrausChannel(f), order),
            ms::DensityOperator::from_operator(rho));
        EXPECT_LT(ms::max_abs_diff(out.rho_plus.op(), oracle.plus), 1e-12);
        EXPECT_LT(ms::max_abs_diff(out.rho_minus.op(), oracle.minus), 1e-12);
        EXPECT_NEAR(out.prob_plus + out.prob_minus, 1.0, 1e-12);
        EXPECT_NEAR(out.prob_plus, oracle.plus.trace().real(), 1e-12);
      }
    }
  }
}

TEST(Switch, OrderFlagSelectsBranchComposition) {
  const ms::KrausChannel h = ms::unitary_channel(ms::gates::hadamard());
  const ms::KrausChannel s = ms::unitary_channel(ms::gates::phase_s());
  const auto zero_c = ms::DensityOperator::pure(ms::basis_ket(2, 0));
  const auto target = ms::DensityOperator::pure(ms::basis_ket(2, 0));
  const ms::Operator joint_in = ms::tensor(zero_c.op(), target.op());
  // Standard order: the |0>_c branch applies b first, then a.
  const ms::DensityOperator out_std =
      ms::build_switch(s, h).apply(ms::DensityOperator::from_operator(joint_in));
  const std::array<std::size_t, 2> dims{2, 2};
  const std::array<std::size_t, 1> keep{1};
  EXPECT_LT(ms::max_abs_diff(ms::partial_trace(out_std.op(), dims, keep),
                             ms::apply_channel(ms::compose(s, h), target.op())),
            1e-12);
  const ms::DensityOperator out_swp = ms::build_switch(s, h, ms::SwitchOrder::swapped)
                                          .apply(ms::DensityOperator::from_operator(joint_in));
  EXPECT_LT(ms::max_abs_diff(ms::partial_trace(out_swp.op(), dims, keep),
                             ms::apply_channel(ms::compose(h, s), target.op())),
            1e-12);
}

TEST(Switch, CommutingUnitariesNeverGiveMinus) {
  const ms::KrausChannel z = ms::unitary_channel(ms::gates::pauli_z());
  const ms::KrausChannel t = ms::unitary_channel(ms::gates::t_gate());
  ts::Rng rng(5);
  const auto out = ms::conditional_outputs(ms::build_switch(z, t),
                                           ms::DensityOperator::from_operator(rng.density(2)));
  EXPECT_NEAR(out.prob_minus, 0.0, 1e-14);
  EXPECT_NEAR(out.prob_plus, 1.0, 1e-14);
}

TEST(DepolarizingSwitch, ClosedFormMatchesGenericComposition) {
  ts::Rng rng(6);
  for (std::size_t d : {2u, 3u}) {
    const auto di = static_cast<Eigen::Index>(d);
    for (double p : kPs) {
      const ms::KrausChannel dp = ms::depolarizing_channel(d, p);
      const ms::SwitchedChannel sw = ms::build_switch(dp, dp);
      const auto weyl = ts::weyl_depolarizing(di, p);
      for (int trial = 0; trial < 20; ++trial) {
        const ms::Operator rho = rng.density(di, 1 + trial % di);
        const auto state = ms::DensityOperator::from_operator(rho);
        const ms::BranchStates closed = ms::depolarizing_switch_closed_form(d, p, state);
        const ms::ConditionalOutputs generic = ms::conditional_outputs(sw, state);
        const auto oracle = ts::switch_branches(weyl, weyl, rho);
        EXPECT_LT(ms::max_abs_diff(closed.rho_plus.op(), generic.rho_plus.op()), 1e-10);
        EXPECT_LT(ms::max_abs_diff(closed.rho_minus.op(), generic.rho_minus.op()), 1e-10);
        EXPECT_LT(ms::max_abs_diff(closed.rho_plus.op(), oracle.plus), 1e-10);
        EXPECT_LT(ms::max_abs_diff(closed.rho_minus.op(), oracle.minus), 1e-10);
      }
    }
  }
}

TEST(DepolarizingSwitch, ParameterFormulas) {
  for (std::size_t d : {2u, 3u, 5u, 10u}) {
    const double dd = static_cast<double>(d * d);
    for (double p : kPs) {
      const ms::EffectiveDepolarizingSwitch e = ms::effective_depolarizing_switch(d, p);
      EXPECT_NEAR(e.weight_plus + e.weight_minus, 1.0, 1e-15);
      EXPECT_NEAR(e.p_minus, dd / (dd - 1.0), 1e-15);
      EXPECT_NEAR(e.weight_minus, (dd - 1.0) * p * p / (2.0 * dd), 1e-15);
    }
    EXPECT_NEAR(ms::effective_depolarizing_switch(d, 0.0).p_plus, 0.0, 1e-15);
    EXPECT_NEAR(ms::effective_depolarizing_switch(d, 1.0).p_plus, dd / (dd + 1.0), 1e-14);
  }
  EXPECT_THROW(ms::effective_depolarizing_switch(1, 0.5), std::invalid_argument);
  EXPECT_THROW(ms::effective_depolarizing_switch(2, 1.5), std::invalid_argument);
}

TEST(DepolarizingSwitch, FactoredIdentityAndBound) {
  for (std::size_t d : {2u, 3u, 5u, 10u, 1000u}) {
    const double dd = static_cast<double>(d) * static_cast<double>(d);
    for (int k = 1; k <= 1000; ++k) {
      const double p = k / 1000.0;
      const double pp = ms::effective_depolarizing_switch(d, p).p_plus;
      const double lhs = (2.0 * dd - (dd - 1.0) * p * p) * (2.0 * p - p * p - pp);
      const double rhs = p * p * (dd - (dd - 1.0) * p * (2.0 - p));
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, dd)) << "d=" << d << " p=" << p;
      EXPECT_LT(pp - (2.0 * p - p * p), 0.0) << "d=" << d << " p=" << p;
    }
  }
  EXPECT_NEAR(ms::effective_depolarizing_switch(1000, 1.0).p_plus - 1.0, -1.0 / (1e6 + 1.0), 1e-15);
}

TEST(EffectiveTChannels, BranchesReproduceSwitchAfterT) {
  ts::Rng rng(9);
  const ms::Operator t = ms::gates::t_gate();
  for (double p : kPs) {
    const ms::EffectiveTChannels eff = ms::effective_t_channels(p);
    EXPECT_TRUE(eff.plus.channel.is_complete());
    EXPECT_TRUE(eff.minus.channel.is_complete());
    const auto weyl = ts::weyl_depolarizing(2, p);
    for (int trial = 0; trial < 5; ++trial) {
      const ms::Operator rho = rng.density(2);
      const auto oracle = ts::switch_branches(weyl, weyl, t * rho * t.adjoint());
      EXPECT_LT(ms::max_abs_diff(eff.plus.weight * ms::apply_channel(eff.plus.channel, rho), oracle.plus),
                1e-12);
      EXPECT_LT(ms::max_abs_diff(eff.minus.weight * ms::apply_channel(eff.minus.channel, rho), oracle.minus),
                1e-12);
    }
  }
}

// --- model channels ------------------------------------------------------------

TEST(Models, NoisyThIsCompleteAndInterpolates) {
  for (double p : kPs) EXPECT_TRUE(ms::models::noisy_th_channel(p).is_complete()) << p;
  EXPECT_THROW(ms::models::noisy_th_channel(-0.01), std::invalid_argument);
  EXPECT_THROW(ms::models::noisy_th_channel(1.01), std::invalid_argument);
  const ms::Operator th = ms::gates::t_gate() * ms::gates::hadamard();
  ts::Rng rng(10);
  const ms::Operator rho = rng.density(2);
  EXPECT_LT(ms::max_abs_diff(ms::apply_channel(ms::models::noisy_th_channel(0.0), rho),
                             th * rho * th.adjoint()),
            1e-12);
}

TEST(Models, SequentialDepolarizedT) {
  ts::Rng rng(12);
  const ms::Operator t = ms::gates::t_gate();
  for (double p : kPs) {
    const ms::Operator rho = rng.density(2);
    const double q = 2.0 * p - p * p;
    const ms::Operator expected =
        (1.0 - q) * t * rho * t.adjoint() + q * 0.5 * ms::Operator::Identity(2, 2);
    EXPECT_LT(ms::max_abs_diff(ms::apply_channel(ms::models::sequential_depolarized_t(p), rho), expected),
              1e-12);
  }
}

TEST(Models, QutritKrausSets) {
  using ms::models::QutritKrausVariant;
  for (double p : kPs) {
    const ms::KrausChannel corrected = ms::models::qutrit_th_channel(p, QutritKrausVariant::corrected);
    const ms::KrausChannel original = ms::models::qutrit_th_channel(p, QutritKrausVariant::original);
    EXPECT_TRUE(corrected.is_complete()) << p;
    EXPECT_NEAR(original.completeness_error(), p / 3.0, 1e-12) << p;
  }
  const auto at_zero = ms::models::resolve_qutrit_th_channel(0.0);
  EXPECT_EQ(at_zero.used, QutritKrausVariant::original);
  const auto at_half = ms::models::resolve_qutrit_th_channel(0.5);
  EXPECT_EQ(at_half.used, QutritKrausVariant::corrected);
  EXPECT_NEAR(at_half.original_completeness_error, 0.5 / 3.0, 1e-12);
  EXPECT_LT(at_half.corrected_completeness_error, 1e-12);
  EXPECT_STREQ(ms::models::to_string(at_half.used), "corrected");
}

TEST(Models, QutritChannelAtOneIsFourierMeasureAndPrepare) {
  const ms::KrausChannel ch =
      ms::models::qutrit_th_channel(1.0, ms::models::QutritKrausVariant::corrected);
  // Every output is diagonal in the computational basis.
  ts::Rng rng(14);
  const ms::Operator out = ms::apply_channel(ch, rng.density(3));
  for (Eigen::Index r = 0; r < 3; ++r) {
    for (Eigen::Index c = 0; c < 3; ++c) {
      if (r != c) {
        EXPECT_NEAR(std::abs(out(r, c)), 0.0, 1e-12);
      }
    }
  }
}

TEST(Models, PlusState) {
  for (std::size_t d : {2u, 3u, 5u}) {
    const ms::DensityOperator plus = ms::models::plus_state(d);
    EXPECT_NEAR(plus.trace(), 1.0, 1e-14);
    EXPECT_NEAR(plus.op()(0, static_cast<Eigen::Index>(d - 1)).real(), 1.0 / static_cast<double>(d), 1e-14);
  }
}

}  // namespace
