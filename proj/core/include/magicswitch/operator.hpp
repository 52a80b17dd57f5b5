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

#ifndef MAGICSWITCH_OPERATOR_HPP_
#define MAGICSWITCH_OPERATOR_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace magicswitch {

using Complex = std::complex<double>;

// Dense complex matrix. Every quantum object in the library (gates, Kraus
// operators, states, Choi matrices, phase-point operators) is one of these.
using Operator = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

// All numerical thresholds live here so that callers can tighten or relax
// them in one place.
struct Tolerances {
  double eq = 1e-10;            // entrywise operator equality
  double psd = 1e-9;            // Choi positivity
  double completeness = 1e-9;   // sum_i K_i^dagger K_i = I
  double eigen_floor = 1e-10;   // density operator eigenvalue floor
};

inline constexpr Tolerances kTolerances{};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Multilinear algebra
// ---------------------------------------------------------------------------

bool approx_equal(const Operator& a, const Operator& b,
                  double tol = kTolerances.eq);

// Largest absolute entry of a - b. Throws DimensionError on shape mismatch.
double max_abs_diff(const Operator& a, const Operator& b);

Operator dagger(const Operator& a);
Operator matmul(const Operator& a, const Operator& b);
Complex trace(const Operator& a);
Operator tensor(const Operator& a, const Operator& b);
Operator tensor(std::span<const Operator> factors);

// Trace out every tensor factor not listed in `keep`. `dims` gives the
// factor dimensions in order; the kept factors stay in their original order.
Operator partial_trace(const Operator& op, std::span<const std::size_t> dims,
                       std::span<const std::size_t> keep);

// Ascending eigenvalues of a Hermitian operator.
Eigen::VectorXd hermitian_eigenvalues(const Operator& a);

// Eigenvalues of a general square operator, sorted by (real, imag).
std::vector<Complex> eigenvalues(const Operator& a);

bool is_hermitian(const Operator& a, double tol = kTolerances.eq);

Ket basis_ket(std::size_t dim, std::size_t index);
Operator ket_bra(std::size_t dim, std::size_t row, std::size_t col);
Operator projector(const Ket& psi);  // |psi><psi| / <psi|psi>

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

// Positive semidefinite Hermitian operator. Unit trace is not required:
// post-selected branches of a measurement are carried unnormalized and the
// `normalized()` flag tells them apart.
class DensityOperator {
 public:
  // Validates Hermiticity and the eigenvalue floor; throws
  // std::invalid_argument otherwise. The stored matrix is symmetrized.
  static DensityOperator from_operator(const Operator& op,
                                       const Tolerances& tol = kTolerances);
  static DensityOperator pure(const Ket& psi);
  static DensityOperator maximally_mixed(std::size_t dim);
  static DensityOperator zero(std::size_t dim);

  const Operator& op() const { return op_; }
  std::size_t dim() const { return static_cast<std::size_t>(op_.rows()); }
  double trace() const { return trace_; }
  bool normalized() const { return normalized_; }

  // Eigenvalues with values in [-eigen_floor, 0) clamped to zero.
  Eigen::VectorXd eigenvalues() const;

 private:
  DensityOperator(Operator op, double trace, bool normalized)
      : op_(std::move(op)), trace_(trace), normalized_(normalized) {}

  Operator op_;
  double trace_ = 0.0;
  bool normalized_ = false;
};

struct Renormalized {
  DensityOperator state;
  double scale;  // trace of the input; state = input / scale
};

// Rescales to unit trace and logs the factor at info level under `context`.
// Throws std::domain_error for a (numerically) zero-trace input.
Renormalized renormalize(const DensityOperator& rho, std::string_view context);

// ---------------------------------------------------------------------------
// Channels
// ---------------------------------------------------------------------------

class KrausChannel {
 public:
  // Requires a nonempty list of equally shaped operators. Completeness is
  // NOT enforced here; call validate() where a proper channel is required.
  explicit KrausChannel(std::vector<Operator> kraus_ops);

  const std::vector<Operator>& kraus_ops() const { return kraus_; }
  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }

  // max |sum_i K_i^dagger K_i - I|.
  double completeness_error() const;
  bool is_complete(double tol = kTolerances.completeness) const;
  // Throws std::invalid_argument when completeness fails beyond `tol`.
  void validate(double tol = kTolerances.completeness) const;

 private:
  std::vector<Operator> kraus_;
  std::size_t d_in_ = 0;
  std::size_t d_out_ = 0;
};

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho);
// Linear extension to arbitrary operators, e.g. N(|i><j|) or N(A_u).
Operator apply_channel(const KrausChannel& ch, const Operator& x);

// Choi-Jamiolkowski state J = (1/d_in) sum_ij |i><j| (x) N(|i><j|), with the
// reference (input) factor first.
class ChoiState {
 public:
  static ChoiState from_operator(const Operator& op, std::size_t d_in,
                                 std::size_t d_out,
                                 const Tolerances& tol = kTolerances);

  const Operator& op() const { return op_; }
  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }

 private:
  ChoiState(Operator op, std::size_t d_in, std::size_t d_out)
      : op_(std::move(op)), d_in_(d_in), d_out_(d_out) {}

  Operator op_;
  std::size_t d_in_ = 0;
  std::size_t d_out_ = 0;
};

ChoiState choi_of_channel(const KrausChannel& ch);
// Kraus set recovered from the eigendecomposition of d_in * J; eigenvalues
// below the psd tolerance are dropped.
KrausChannel channel_from_choi(const ChoiState& choi);

// ---------------------------------------------------------------------------
// Control measurement
// ---------------------------------------------------------------------------

enum class FourierOutcome { plus, minus };

struct MeasuredBranch {
  DensityOperator state;  // unnormalized target state <±|state|±>
  double probability;     // its trace
};

// Projects a qubit control factor onto |+> or |->. `control_position` is the
// tensor-factor index of the control (0: control (x) target, 1: target (x)
// control); the target dimension is state.dim() / 2.
MeasuredBranch measure_control(const DensityOperator& state,
                               std::size_t control_position,
                               FourierOutcome outcome);

}  // namespace magicswitch

#endif  // MAGICSWITCH_OPERATOR_HPP_
