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

#include "magicswitch/models.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "logger.hpp"
#include "magicswitch/channels.hpp"
#include "magicswitch/gates.hpp"

namespace magicswitch::models {
namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(fmt::format("{}: p = {} not in [0, 1]", what, p));
  }
}

Complex unit(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

}  // namespace

KrausChannel noisy_th_channel(double p) {
  require_probability(p, "noisy_th_channel");
  const double s = std::sqrt(p / 2.0);
  Operator k0 = Operator::Zero(2, 2);
  k0(0, 0) = s;
  k0(0, 1) = s;
  Operator k1 = Operator::Zero(2, 2);
  k1(1, 1) = s;
  k1(1, 0) = -s;
  const Operator k2 = std::sqrt(1.0 - p) * gates::t_gate() * gates::hadamard();
  return KrausChannel({k0, k1, k2});
}

KrausChannel sequential_depolarized_t(double p) {
  require_probability(p, "sequential_depolarized_t");
  const KrausChannel dp = depolarizing_channel(2, p);
  return compose(dp, compose(dp, unitary_channel(gates::t_gate())));
}

KrausChannel qutrit_th_channel(double p, QutritKrausVariant variant) {
  require_probability(p, "qutrit_th_channel");
  const Complex w = unit(1.0 / 3.0);
  const Complex zeta = unit(1.0 / 9.0);
  const double s = std::sqrt(p / 3.0);
  auto kb = [](std::size_t r, std::size_t c) { return ket_bra(3, r, c); };

  const Operator k0 = s * zeta * (kb(0, 0) + kb(0, 1) + kb(0, 2));
  const Operator k1 = s * (kb(1, 0) + w * kb(1, 1) + w * w * kb(1, 2));
  const Operator k2 = variant == QutritKrausVariant::original
                          ? Operator(s * zeta * (kb(2, 0) + w * w * kb(1, 1) + w * kb(1, 2)))
                          : Operator(s * zeta * (kb(2, 0) + w * w * kb(2, 1) + w * kb(2, 2)));
  const Operator k3 = std::sqrt(1.0 - p) * gates::qutrit_t_gate() * gates::qutrit_hadamard();
  return KrausChannel({k0, k1, k2, k3});
}

QutritKrausResolution resolve_qutrit_th_channel(double p) {
  KrausChannel original = qutrit_th_channel(p, QutritKrausVariant::original);
  KrausChannel corrected = qutrit_th_channel(p, QutritKrausVariant::corrected);
  QutritKrausResolution r{QutritKrausVariant::corrected, original.completeness_error(),
                          corrected.completeness_error(), corrected};
  if (original.is_complete()) {
    r.used = QutritKrausVariant::original;
    r.channel = std::move(original);
  } else if (!corrected.is_complete()) {
    throw std::runtime_error("resolve_qutrit_th_channel: neither Kraus set is complete");
  }
  detail::logger().debug("qutrit Kraus set at p = {}: {} (original error {:.3e}, corrected {:.3e})",
                         p, to_string(r.used), r.original_completeness_error,
                         r.corrected_completeness_error);
  return r;
}

const char* to_string(QutritKrausVariant variant) {
  return variant == QutritKrausVariant::original ? "original" : "corrected";
}

DensityOperator plus_state(std::size_t d) {
  return DensityOperator::pure(Ket::Ones(static_cast<Eigen::Index>(d)));
}

}  // namespace magicswitch::models
