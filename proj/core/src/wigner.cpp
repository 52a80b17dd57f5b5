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

#include "magicswitch/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "magicswitch/gates.hpp"

namespace magicswitch {
namespace {

bool is_odd_prime(std::size_t d) {
  if (d < 3 || d % 2 == 0) return false;
  for (std::size_t k = 3; k * k <= d; k += 2) {
    if (d % k == 0) return false;
  }
  return true;
}

// Tr[A B] without forming the product.
Complex trace_product(const Operator& a, const Operator& b) {
  return a.transpose().cwiseProduct(b).sum();
}

void require_frame_dim(std::size_t dim, const PhaseSpaceFrame& frame, const char* what) {
  if (dim != frame.d()) {
    throw DimensionError(fmt::format("{}: dimension {} vs frame dimension {}", what, dim,
                                     frame.d()));
  }
}

}  // namespace

PhaseSpaceFrame build_frame(std::size_t d) {
  if (!is_odd_prime(d)) {
    throw std::invalid_argument(fmt::format("build_frame: d = {} is not an odd prime", d));
  }
  PhaseSpaceFrame f;
  f.d_ = d;
  f.tau_ = std::polar(1.0, static_cast<double>(d + 1) * std::numbers::pi / static_cast<double>(d));
  f.z_ = gates::clock(d);
  f.x_ = gates::shift(d);

  const auto n = static_cast<Eigen::Index>(d);
  f.heisenberg_weyl_.reserve(d * d);
  Operator za = Operator::Identity(n, n);
  for (std::size_t a1 = 0; a1 < d; ++a1) {
    Operator zx = za;
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      // tau^{-a1 a2}; reduce the exponent mod 2d since tau^{2d} = 1.
      const auto k = static_cast<double>((a1 * a2) % (2 * d));
      const Complex phase = std::polar(
          1.0, -k * static_cast<double>(d + 1) * std::numbers::pi / static_cast<double>(d));
      f.heisenberg_weyl_.push_back(phase * zx);
      zx = zx * f.x_;
    }
    za = za * f.z_;
  }

  Operator a0 = Operator::Zero(n, n);
  for (const Operator& t : f.heisenberg_weyl_) a0 += t;
  a0 /= static_cast<double>(d);
  f.phase_points_.reserve(d * d);
  for (const Operator& t : f.heisenberg_weyl_) {
    f.phase_points_.push_back(t * a0 * t.adjoint());
  }
  return f;
}

double WignerFunction::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double WignerFunction::min() const { return *std::min_element(values.begin(), values.end()); }

double WignerFunction::l1_norm() const {
  double s = 0.0;
  for (double v : values) s += std::abs(v);
  return s;
}

WignerFunction wigner_of_operator(const Operator& hermitian, const PhaseSpaceFrame& frame) {
  require_frame_dim(static_cast<std::size_t>(hermitian.rows()), frame, "wigner");
  WignerFunction w;
  w.d = frame.d();
  w.values.reserve(frame.num_points());
  const double inv_d = 1.0 / static_cast<double>(frame.d());
  for (const Operator& a : frame.phase_points()) {
    const Complex v = trace_product(a, hermitian) * inv_d;
    w.values.push_back(v.real());
    w.max_imag = std::max(w.max_imag, std::abs(v.imag()));
  }
  return w;
}

WignerFunction wigner_of_state(const DensityOperator& rho, const PhaseSpaceFrame& frame) {
  if (!rho.normalized()) {
    throw std::invalid_argument("wigner_of_state: state is not normalized");
  }
  return wigner_of_operator(rho.op(), frame);
}

double mana_state(const DensityOperator& rho, const PhaseSpaceFrame& frame) {
  if (!rho.normalized()) {
    return std::log(wigner_of_state(renormalize(rho, "mana_state").state, frame).l1_norm());
  }
  return std::log(wigner_of_state(rho, frame).l1_norm());
}

Eigen::MatrixXd wigner_of_channel_direct(const KrausChannel& ch,
                                         const PhaseSpaceFrame& frame_in,
                                         const PhaseSpaceFrame& frame_out) {
  require_frame_dim(ch.d_in(), frame_in, "wigner_of_channel");
  require_frame_dim(ch.d_out(), frame_out, "wigner_of_channel");
  const auto pin = static_cast<Eigen::Index>(frame_in.num_points());
  const auto pout = static_cast<Eigen::Index>(frame_out.num_points());
  Eigen::MatrixXd w(pout, pin);
  const double inv_d = 1.0 / static_cast<double>(ch.d_out());
  for (Eigen::Index u = 0; u < pin; ++u) {
    const Operator image = apply_channel(ch, frame_in.phase_point(static_cast<std::size_t>(u)));
    for (Eigen::Index v = 0; v < pout; ++v) {
      w(v, u) = trace_product(frame_out.phase_point(static_cast<std::size_t>(v)), image).real() *
                inv_d;
    }
  }
  return w;
}

ChannelWigner wigner_of_channel(const KrausChannel& ch, const PhaseSpaceFrame& frame_in,
                                const PhaseSpaceFrame& frame_out) {
  require_frame_dim(ch.d_in(), frame_in, "wigner_of_channel");
  require_frame_dim(ch.d_out(), frame_out, "wigner_of_channel");
  const Operator unnormalized_choi =
      choi_of_channel(ch).op() * static_cast<double>(ch.d_in());

  ChannelWigner out;
  out.d_in = ch.d_in();
  out.d_out = ch.d_out();
  const auto pin = static_cast<Eigen::Index>(frame_in.num_points());
  const auto pout = static_cast<Eigen::Index>(frame_out.num_points());
  out.values.resize(pout, pin);
  const double inv_d = 1.0 / static_cast<double>(ch.d_out());
  for (Eigen::Index u = 0; u < pin; ++u) {
    const Operator a_in_t = frame_in.phase_point(static_cast<std::size_t>(u)).transpose();
    for (Eigen::Index v = 0; v < pout; ++v) {
      const Operator joint = tensor(a_in_t, frame_out.phase_point(static_cast<std::size_t>(v)));
      out.values(v, u) = trace_product(joint, unnormalized_choi).real() * inv_d;
    }
  }
  out.cross_check_error =
      (out.values - wigner_of_channel_direct(ch, frame_in, frame_out)).cwiseAbs().maxCoeff();
  return out;
}

double mana_channel(const KrausChannel& ch, const PhaseSpaceFrame& frame) {
  const Eigen::MatrixXd w = wigner_of_channel_direct(ch, frame, frame);
  const double worst = w.cwiseAbs().colwise().sum().maxCoeff();
  return std::log(worst);
}

CpwpResult is_cpwp(const KrausChannel& ch, const PhaseSpaceFrame& frame, double tol) {
  const ChannelWigner w = wigner_of_channel(ch, frame, frame);
  return {w.min() >= -tol, w.min()};
}

}  // namespace magicswitch
