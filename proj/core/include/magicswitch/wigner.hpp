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

#ifndef MAGICSWITCH_WIGNER_HPP_
#define MAGICSWITCH_WIGNER_HPP_

#include <cstddef>
#include <vector>

#include "magicswitch/operator.hpp"

namespace magicswitch {

// Mana below this counts as zero; the same bound is the default for
// negativity in is_cpwp.
inline constexpr double kManaZeroTol = 1e-9;

// Discrete phase space Z_d x Z_d of a single qudit, d an odd prime.
// Points u = (a1, a2) are indexed as a1 * d + a2.
//   T_u = tau^{-a1 a2} Z^{a1} X^{a2},  tau = e^{(d+1) pi i / d}
//   A_0 = (1/d) sum_u T_u,  A_u = T_u A_0 T_u^dagger
class PhaseSpaceFrame {
 public:
  std::size_t d() const { return d_; }
  std::size_t num_points() const { return d_ * d_; }
  std::size_t index(std::size_t a1, std::size_t a2) const { return a1 * d_ + a2; }
  Complex tau() const { return tau_; }
  const Operator& boost() const { return z_; }
  const Operator& shift() const { return x_; }
  const Operator& heisenberg_weyl(std::size_t a1, std::size_t a2) const {
    return heisenberg_weyl_.at(index(a1, a2));
  }
  const Operator& phase_point(std::size_t a1, std::size_t a2) const {
    return phase_points_.at(index(a1, a2));
  }
  const Operator& phase_point(std::size_t u) const { return phase_points_.at(u); }
  const std::vector<Operator>& phase_points() const { return phase_points_; }

 private:
  friend PhaseSpaceFrame build_frame(std::size_t d);
  PhaseSpaceFrame() = default;

  std::size_t d_ = 0;
  Complex tau_;
  Operator z_;
  Operator x_;
  std::vector<Operator> heisenberg_weyl_;
  std::vector<Operator> phase_points_;
};

// Throws std::invalid_argument unless d is an odd prime.
PhaseSpaceFrame build_frame(std::size_t d);

struct WignerFunction {
  std::size_t d = 0;
  std::vector<double> values;   // indexed like PhaseSpaceFrame points
  double max_imag = 0.0;        // largest discarded imaginary part

  double at(std::size_t a1, std::size_t a2) const { return values.at(a1 * d + a2); }
  double sum() const;
  double min() const;
  double l1_norm() const;       // Wigner trace norm sum_u |W(u)|
};

// W_O(u) = Tr[A_u O] / d for any Hermitian O.
WignerFunction wigner_of_operator(const Operator& hermitian, const PhaseSpaceFrame& frame);
// Requires a unit-trace state.
WignerFunction wigner_of_state(const DensityOperator& rho, const PhaseSpaceFrame& frame);

// M(rho) = ln sum_u |W_rho(u)|; unnormalized states are renormalized first.
double mana_state(const DensityOperator& rho, const PhaseSpaceFrame& frame);

// W_N(v|u) = (1/d_out) Tr[A_v N(A_u)], stored with v as row, u as column.
// Computed through the Choi operator as (1/d_out) Tr[(A_u^T (x) A_v) d_in J_N]
// and checked against the direct formula; the largest disagreement is kept.
struct ChannelWigner {
  std::size_t d_in = 0;
  std::size_t d_out = 0;
  Eigen::MatrixXd values;
  double cross_check_error = 0.0;

  double at(std::size_t v, std::size_t u) const {
    return values(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u));
  }
  double min() const { return values.minCoeff(); }
};

ChannelWigner wigner_of_channel(const KrausChannel& ch, const PhaseSpaceFrame& frame_in,
                                const PhaseSpaceFrame& frame_out);
Eigen::MatrixXd wigner_of_channel_direct(const KrausChannel& ch,
                                         const PhaseSpaceFrame& frame_in,
                                         const PhaseSpaceFrame& frame_out);

// M(N) = ln max_u sum_v |W_N(v|u)| for a channel on one qudit.
double mana_channel(const KrausChannel& ch, const PhaseSpaceFrame& frame);

struct CpwpResult {
  bool cpwp = false;
  double min_value = 0.0;  // smallest W_N(v|u)
};

CpwpResult is_cpwp(const KrausChannel& ch, const PhaseSpaceFrame& frame,
                   double tol = kManaZeroTol);

}  // namespace magicswitch

#endif  // MAGICSWITCH_WIGNER_HPP_
