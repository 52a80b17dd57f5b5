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

#include "magicswitch/channels.hpp"

#include <cmath>

#include <fmt/format.h>

#include "magicswitch/gates.hpp"

namespace magicswitch {

KrausChannel identity_channel(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return KrausChannel({Operator::Identity(n, n)});
}

KrausChannel unitary_channel(const Operator& u) { return KrausChannel({u}); }

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.d_in() != inner.d_out()) {
    throw DimensionError(fmt::format("compose: outer d_in {} != inner d_out {}",
                                     outer.d_in(), inner.d_out()));
  }
  std::vector<Operator> kraus;
  kraus.reserve(outer.kraus_ops().size() * inner.kraus_ops().size());
  for (const Operator& a : outer.kraus_ops()) {
    for (const Operator& b : inner.kraus_ops()) kraus.push_back(a * b);
  }
  return KrausChannel(std::move(kraus));
}

std::vector<Operator> clock_shift_basis(std::size_t d) {
  if (d < 2) throw std::invalid_argument("clock_shift_basis: d must be >= 2");
  const Operator z = gates::clock(d);
  const Operator x = gates::shift(d);
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<Operator> basis;
  basis.reserve(d * d);
  Operator za = Operator::Identity(n, n);
  for (std::size_t a = 0; a < d; ++a) {
    Operator zx = za;
    for (std::size_t b = 0; b < d; ++b) {
      basis.push_back(zx);
      zx = zx * x;
    }
    za = za * z;
  }
  return basis;
}

KrausChannel depolarizing_channel(std::size_t d, double p) {
  const double d2 = static_cast<double>(d * d);
  const double p_max = d2 / (d2 - 1.0);
  if (!(p >= 0.0) || p > p_max + 1e-12) {
    throw std::invalid_argument(fmt::format(
        "depolarizing_channel: p = {} outside [0, {}]", p, p_max));
  }
  const std::vector<Operator> basis = clock_shift_basis(d);
  const double identity_weight = std::max(0.0, 1.0 - p * (d2 - 1.0) / d2);
  std::vector<Operator> kraus;
  kraus.reserve(basis.size());
  // Zero-weight operators are left out (identity at the upper end of the
  // range, everything else at p = 0).
  if (identity_weight > 0.0) kraus.push_back(std::sqrt(identity_weight) * basis.front());
  if (p > 0.0) {
    for (std::size_t i = 1; i < basis.size(); ++i) {
      kraus.push_back(std::sqrt(p) / static_cast<double>(d) * basis[i]);
    }
  }
  return KrausChannel(std::move(kraus));
}

Operator depolarize(const Operator& rho, double p) {
  const Eigen::Index n = rho.rows();
  return p * rho.trace() * Operator::Identity(n, n) / static_cast<double>(n) +
         (1.0 - p) * rho;
}

}  // namespace magicswitch
