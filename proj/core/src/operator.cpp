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

#include "magicswitch/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "logger.hpp"

namespace magicswitch {
namespace {

void require_same_shape(const Operator& a, const Operator& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(fmt::format("{}: shape {}x{} vs {}x{}", what, a.rows(),
                                     a.cols(), b.rows(), b.cols()));
  }
}

void require_square(const Operator& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(
        fmt::format("{}: expected nonempty square operator, got {}x{}", what,
                    a.rows(), a.cols()));
  }
}

// Mixed-radix digits of `index` for factor dimensions `dims` (first factor
// most significant).
void digits_of(std::size_t index, std::span<const std::size_t> dims,
               std::vector<std::size_t>& out) {
  out.resize(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
}

}  // namespace

bool approx_equal(const Operator& a, const Operator& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "max_abs_diff");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

Operator dagger(const Operator& a) { return a.adjoint(); }

Operator matmul(const Operator& a, const Operator& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError(fmt::format("matmul: {}x{} times {}x{}", a.rows(),
                                     a.cols(), b.rows(), b.cols()));
  }
  return a * b;
}

Complex trace(const Operator& a) {
  require_square(a, "trace");
  return a.trace();
}

Operator tensor(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator tensor(std::span<const Operator> factors) {
  if (factors.empty()) return Operator::Identity(1, 1);
  Operator out = factors.front();
  for (const Operator& f : factors.subspan(1)) out = tensor(out, f);
  return out;
}

Operator partial_trace(const Operator& op, std::span<const std::size_t> dims,
                       std::span<const std::size_t> keep) {
  require_square(op, "partial_trace");
  const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                            std::size_t{1}, std::multiplies<>());
  if (dims.empty() || total != static_cast<std::size_t>(op.rows())) {
    throw DimensionError(fmt::format(
        "partial_trace: operator dimension {} does not match factor product {}",
        op.rows(), total));
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw DimensionError(fmt::format("partial_trace: keep index {} out of range", k));
    }
    kept[k] = true;
  }
  std::size_t kept_dim = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (kept[k]) kept_dim *= dims[k];
  }

  // Flattened index of the kept digits, and a key for the traced digits.
  auto split = [&](const std::vector<std::size_t>& dig, std::size_t& kept_idx,
                   std::size_t& traced_idx) {
    kept_idx = 0;
    traced_idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (kept[k]) {
        kept_idx = kept_idx * dims[k] + dig[k];
      } else {
        traced_idx = traced_idx * dims[k] + dig[k];
      }
    }
  };

  std::vector<std::size_t> kept_of(total);
  std::vector<std::size_t> traced_of(total);
  std::vector<std::size_t> dig;
  for (std::size_t i = 0; i < total; ++i) {
    digits_of(i, dims, dig);
    split(dig, kept_of[i], traced_of[i]);
  }

  Operator out = Operator::Zero(static_cast<Eigen::Index>(kept_dim),
                                static_cast<Eigen::Index>(kept_dim));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (traced_of[i] == traced_of[j]) {
        out(static_cast<Eigen::Index>(kept_of[i]),
            static_cast<Eigen::Index>(kept_of[j])) +=
            op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Operator& a) {
  require_square(a, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Operator> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::vector<Complex> eigenvalues(const Operator& a) {
  require_square(a, "eigenvalues");
  Eigen::ComplexEigenSolver<Operator> solver(a, false);
  const Eigen::VectorXcd& ev = solver.eigenvalues();
  std::vector<Complex> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

bool is_hermitian(const Operator& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a, a.adjoint()) <= tol;
}

Ket basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError(fmt::format("basis_ket: index {} >= dim {}", index, dim));
  }
  Ket k = Ket::Zero(static_cast<Eigen::Index>(dim));
  k(static_cast<Eigen::Index>(index)) = 1.0;
  return k;
}

Operator ket_bra(std::size_t dim, std::size_t row, std::size_t col) {
  return basis_ket(dim, row) * basis_ket(dim, col).adjoint();
}

Operator projector(const Ket& psi) {
  const double norm2 = psi.squaredNorm();
  if (norm2 == 0.0) throw std::invalid_argument("projector: zero vector");
  return psi * psi.adjoint() / norm2;
}

// --- DensityOperator -------------------------------------------------------

DensityOperator DensityOperator::from_operator(const Operator& op,
                                               const Tolerances& tol) {
  require_square(op, "DensityOperator");
  if (!is_hermitian(op, tol.eq)) {
    throw std::invalid_argument(fmt::format(
        "DensityOperator: not Hermitian (deviation {:.3e})",
        max_abs_diff(op, op.adjoint())));
  }
  Operator herm = 0.5 * (op + op.adjoint());
  const Eigen::VectorXd ev = hermitian_eigenvalues(herm);
  if (ev.minCoeff() < -tol.eigen_floor) {
    throw std::invalid_argument(fmt::format(
        "DensityOperator: negative eigenvalue {:.3e}", ev.minCoeff()));
  }
  const double tr = herm.trace().real();
  return DensityOperator(std::move(herm), tr, std::abs(tr - 1.0) <= tol.eq);
}

DensityOperator DensityOperator::pure(const Ket& psi) {
  Operator p = projector(psi);
  return DensityOperator(std::move(p), 1.0, true);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(Operator::Identity(n, n) / static_cast<double>(dim), 1.0,
                         true);
}

DensityOperator DensityOperator::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(Operator::Zero(n, n), 0.0, false);
}

Eigen::VectorXd DensityOperator::eigenvalues() const {
  Eigen::VectorXd ev = hermitian_eigenvalues(op_);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return ev;
}

Renormalized renormalize(const DensityOperator& rho, std::string_view context) {
  const double scale = rho.trace();
  if (!(scale > 1e-14)) {
    throw std::domain_error(fmt::format(
        "renormalize({}): trace {:.3e} is too small to renormalize", context, scale));
  }
  detail::logger().info("renormalize {}: trace {:.12g}", context, scale);
  return {DensityOperator::from_operator(rho.op() / scale), scale};
}

// --- KrausChannel ----------------------------------------------------------

KrausChannel::KrausChannel(std::vector<Operator> kraus_ops)
    : kraus_(std::move(kraus_ops)) {
  if (kraus_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
  d_out_ = static_cast<std::size_t>(kraus_.front().rows());
  d_in_ = static_cast<std::size_t>(kraus_.front().cols());
  if (d_in_ == 0 || d_out_ == 0) throw DimensionError("KrausChannel: empty operator");
  for (const Operator& k : kraus_) {
    if (static_cast<std::size_t>(k.rows()) != d_out_ ||
        static_cast<std::size_t>(k.cols()) != d_in_) {
      throw DimensionError("KrausChannel: Kraus operators have different shapes");
    }
  }
}

double KrausChannel::completeness_error() const {
  const auto n = static_cast<Eigen::Index>(d_in_);
  Operator sum = Operator::Zero(n, n);
  for (const Operator& k : kraus_) sum += k.adjoint() * k;
  return max_abs_diff(sum, Operator::Identity(n, n));
}

bool KrausChannel::is_complete(double tol) const {
  return completeness_error() <= tol;
}

void KrausChannel::validate(double tol) const {
  const double err = completeness_error();
  if (err > tol) {
    throw std::invalid_argument(fmt::format(
        "KrausChannel: completeness violated by {:.3e} (tolerance {:.1e})", err, tol));
  }
}

Operator apply_channel(const KrausChannel& ch, const Operator& x) {
  if (static_cast<std::size_t>(x.rows()) != ch.d_in() ||
      static_cast<std::size_t>(x.cols()) != ch.d_in()) {
    throw DimensionError(fmt::format("apply_channel: input {}x{}, channel d_in {}",
                                     x.rows(), x.cols(), ch.d_in()));
  }
  const auto n = static_cast<Eigen::Index>(ch.d_out());
  Operator out = Operator::Zero(n, n);
  for (const Operator& k : ch.kraus_ops()) out.noalias() += k * x * k.adjoint();
  return out;
}

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho) {
  return DensityOperator::from_operator(apply_channel(ch, rho.op()));
}

// --- Choi ------------------------------------------------------------------

ChoiState ChoiState::from_operator(const Operator& op, std::size_t d_in,
                                   std::size_t d_out, const Tolerances& tol) {
  if (static_cast<std::size_t>(op.rows()) != d_in * d_out ||
      static_cast<std::size_t>(op.cols()) != d_in * d_out) {
    throw DimensionError("ChoiState: operator dimension must be d_in * d_out");
  }
  if (!is_hermitian(op, tol.psd)) {
    throw std::invalid_argument("ChoiState: not Hermitian");
  }
  Operator herm = 0.5 * (op + op.adjoint());
  if (hermitian_eigenvalues(herm).minCoeff() < -tol.psd) {
    throw std::invalid_argument("ChoiState: not positive semidefinite");
  }
  const std::size_t dims[] = {d_in, d_out};
  const std::size_t keep[] = {0};
  const auto n = static_cast<Eigen::Index>(d_in);
  const Operator marginal = partial_trace(herm, dims, keep);
  const Operator expected = Operator::Identity(n, n) / static_cast<double>(d_in);
  if (!approx_equal(marginal, expected, tol.psd)) {
    throw std::invalid_argument("ChoiState: input marginal is not I/d_in");
  }
  return ChoiState(std::move(herm), d_in, d_out);
}

ChoiState choi_of_channel(const KrausChannel& ch) {
  ch.validate();
  const std::size_t din = ch.d_in();
  const std::size_t dout = ch.d_out();
  const auto n = static_cast<Eigen::Index>(din * dout);
  Operator j = Operator::Zero(n, n);
  for (std::size_t a = 0; a < din; ++a) {
    for (std::size_t b = 0; b < din; ++b) {
      const Operator image = apply_channel(ch, ket_bra(din, a, b));
      j.block(static_cast<Eigen::Index>(a * dout), static_cast<Eigen::Index>(b * dout),
              static_cast<Eigen::Index>(dout), static_cast<Eigen::Index>(dout)) = image;
    }
  }
  j /= static_cast<double>(din);
  return ChoiState::from_operator(j, din, dout);
}

KrausChannel channel_from_choi(const ChoiState& choi) {
  const std::size_t din = choi.d_in();
  const std::size_t dout = choi.d_out();
  Eigen::SelfAdjointEigenSolver<Operator> solver(choi.op() * static_cast<double>(din));
  std::vector<Operator> kraus;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda <= kTolerances.psd) continue;
    const Ket v = std::sqrt(lambda) * solver.eigenvectors().col(k);
    Operator op(static_cast<Eigen::Index>(dout), static_cast<Eigen::Index>(din));
    for (std::size_t i = 0; i < din; ++i) {
      for (std::size_t a = 0; a < dout; ++a) {
        op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i)) =
            v(static_cast<Eigen::Index>(i * dout + a));
      }
    }
    kraus.push_back(std::move(op));
  }
  return KrausChannel(std::move(kraus));
}

// --- control measurement ---------------------------------------------------

MeasuredBranch measure_control(const DensityOperator& state,
                               std::size_t control_position,
                               FourierOutcome outcome) {
  if (control_position > 1) {
    throw std::invalid_argument(fmt::format(
        "measure_control: control position {} is not 0 or 1", control_position));
  }
  if (state.dim() < 2 || state.dim() % 2 != 0) {
    throw DimensionError(fmt::format(
        "measure_control: dimension {} does not factor as 2 x d", state.dim()));
  }
  const std::size_t dt = state.dim() / 2;
  const double sign = outcome == FourierOutcome::plus ? 1.0 : -1.0;
  Ket bra(2);
  bra << 1.0 / std::sqrt(2.0), sign / std::sqrt(2.0);
  const auto t = static_cast<Eigen::Index>(dt);
  const Operator id = Operator::Identity(t, t);
  const Operator row = bra.transpose();  // <±| has real entries
  const Operator m = control_position == 0 ? tensor(row, id) : tensor(id, row);
  Operator branch = m * state.op() * m.adjoint();
  branch = 0.5 * (branch + branch.adjoint());
  DensityOperator rho = DensityOperator::from_operator(branch);
  const double prob = rho.trace();
  return {std::move(rho), prob};
}

}  // namespace magicswitch
