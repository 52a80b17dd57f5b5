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

#ifndef MAGICSWITCH_L1_SOLVER_HPP_
#define MAGICSWITCH_L1_SOLVER_HPP_

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace magicswitch {

enum class LpStatus { optimal, infeasible, numerical_failure };

std::string_view to_string(LpStatus status);

// One additional equality row: sum_i coefficients[i] * q_i = rhs, where q_i
// is the (signed, if split) weight of atom i.
struct ExtraEquality {
  Eigen::VectorXd coefficients;
  double rhs = 0.0;
};

// minimize ||q||_1  subject to  sum_i q_i atoms[i] = target  and the extra
// equalities. With sign_split the q_i are free (q = q+ - q-); without it
// they are constrained to q_i >= 0.
struct AffineL1Problem {
  std::vector<Eigen::VectorXd> atoms;
  Eigen::VectorXd target;
  std::vector<ExtraEquality> extra_equalities;
  bool sign_split = true;

  // Throws std::invalid_argument when the problem is malformed.
  void check() const;
  std::size_t rows() const { return static_cast<std::size_t>(target.size()) + extra_equalities.size(); }
};

struct L1Solution {
  LpStatus status = LpStatus::numerical_failure;
  double value = 0.0;                 // optimal ||q||_1
  Eigen::VectorXd coefficients;       // q, one entry per atom
  double residual = 0.0;              // ||A q - b||_2 over all equality rows
  double duality_gap = 0.0;           // |c.x - b.y| at the final basis
  double dual_infeasibility = 0.0;    // max(0, -min reduced cost)
  std::size_t iterations = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-11;
  double cost_tol = 1e-11;
  double feasibility_tol = 1e-9;
  std::size_t max_iterations = 50000;
};

// Result of the standard-form LP  min c.x  s.t.  A x = b, x >= 0.
struct StandardFormResult {
  LpStatus status = LpStatus::numerical_failure;
  Eigen::VectorXd x;
  double objective = 0.0;
  Eigen::VectorXd dual;               // y for every row of A (0 on redundant rows)
  std::vector<Eigen::Index> basis;
  std::size_t iterations = 0;
};

// Dense two-phase tableau simplex with Bland's rule. Deterministic for a
// fixed column order; redundant equality rows are detected and dropped
// after phase one.
StandardFormResult solve_standard_form(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                       const Eigen::VectorXd& c,
                                       const SimplexOptions& options = {});

L1Solution solve_l1(const AffineL1Problem& problem, const SimplexOptions& options = {});

// The standard-form data solve_l1 hands to the simplex: columns are
// [q+ | q-] with sign_split, q otherwise; costs are all one.
void l1_standard_form(const AffineL1Problem& problem, Eigen::MatrixXd& a,
                      Eigen::VectorXd& b);

// Writes the problem in CPLEX LP text format for cross-checking with an
// external solver. Variables are qp<i>/qm<i> (split) or q<i>.
void write_lp_format(const AffineL1Problem& problem, std::ostream& out);

}  // namespace magicswitch

#endif  // MAGICSWITCH_L1_SOLVER_HPP_
