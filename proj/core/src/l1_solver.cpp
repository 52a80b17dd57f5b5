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

#include "magicswitch/l1_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "logger.hpp"

namespace magicswitch {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Tableau layout: rows 0..m-1 are constraints, row m holds reduced costs;
// the last column is the right-hand side (row m: minus the objective).
class Tableau {
 public:
  Tableau(const MatrixXd& a, const VectorXd& b) : m_(a.rows()), n_(a.cols()) {
    t_ = MatrixXd::Zero(m_ + 1, n_ + m_ + 1);
    t_.topLeftCorner(m_, n_) = a;
    t_.block(0, n_, m_, m_).setIdentity();
    t_.col(n_ + m_).head(m_) = b;
    basis_.resize(static_cast<std::size_t>(m_));
    for (Index r = 0; r < m_; ++r) basis_[static_cast<std::size_t>(r)] = n_ + r;
  }

  Index rows() const { return m_; }
  Index structural() const { return n_; }
  Index rhs_col() const { return n_ + m_; }
  const std::vector<Index>& basis() const { return basis_; }
  double rhs(Index r) const { return t_(r, rhs_col()); }
  double at(Index r, Index j) const { return t_(r, j); }

  // Installs the cost vector (over all n + m columns) and prices out the basis.
  void set_costs(const VectorXd& cost) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_ + m_) = cost.transpose();
    for (Index r = 0; r < m_; ++r) {
      const double cb = cost(basis_[static_cast<std::size_t>(r)]);
      if (cb != 0.0) t_.row(m_) -= cb * t_.row(r);
    }
  }

  double objective() const { return -t_(m_, rhs_col()); }

  void pivot(Index row, Index col) {
    t_.row(row) /= t_(row, col);
    for (Index r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const double f = t_(r, col);
      if (f != 0.0) t_.row(r) -= f * t_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  void drop_row(Index row) {
    MatrixXd next(t_.rows() - 1, t_.cols());
    next.topRows(row) = t_.topRows(row);
    next.bottomRows(t_.rows() - row - 1) = t_.bottomRows(t_.rows() - row - 1);
    t_ = std::move(next);
    basis_.erase(basis_.begin() + row);
    --m_;
  }

  // Bland's rule iterations restricted to columns < `column_limit`.
  // Returns optimal, or numerical_failure on iteration limit / unboundedness.
  LpStatus iterate(Index column_limit, const SimplexOptions& opt, std::size_t& iterations) {
    while (true) {
      Index entering = -1;
      for (Index j = 0; j < column_limit; ++j) {
        if (t_(m_, j) < -opt.cost_tol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return LpStatus::optimal;
      if (iterations >= opt.max_iterations) return LpStatus::numerical_failure;

      Index leaving = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Index r = 0; r < m_; ++r) {
        const double coef = t_(r, entering);
        if (coef <= opt.pivot_tol) continue;
        const double ratio = std::max(0.0, rhs(r)) / coef;
        const bool better = ratio < best - 1e-12;
        const bool tie = leaving >= 0 && std::abs(ratio - best) <= 1e-12 &&
                         basis_[static_cast<std::size_t>(r)] <
                             basis_[static_cast<std::size_t>(leaving)];
        if (leaving < 0 || better || tie) {
          best = ratio;
          leaving = r;
        }
      }
      if (leaving < 0) return LpStatus::numerical_failure;  // unbounded
      pivot(leaving, entering);
      ++iterations;
    }
  }

 private:
  Index m_;
  Index n_;
  MatrixXd t_;
  std::vector<Index> basis_;
};

}  // namespace

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

void AffineL1Problem::check() const {
  if (atoms.empty()) throw std::invalid_argument("AffineL1Problem: no atoms");
  for (const VectorXd& atom : atoms) {
    if (atom.size() != target.size()) {
      throw std::invalid_argument(fmt::format(
          "AffineL1Problem: atom length {} != target length {}", atom.size(), target.size()));
    }
  }
  for (const ExtraEquality& eq : extra_equalities) {
    if (static_cast<std::size_t>(eq.coefficients.size()) != atoms.size()) {
      throw std::invalid_argument("AffineL1Problem: extra equality needs one coefficient per atom");
    }
  }
}

StandardFormResult solve_standard_form(const MatrixXd& a, const VectorXd& b,
                                       const VectorXd& c, const SimplexOptions& options) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    throw std::invalid_argument("solve_standard_form: inconsistent dimensions");
  }
  const Index m = a.rows();
  const Index n = a.cols();

  // Flip rows so that b >= 0 and the artificial basis is feasible.
  MatrixXd a_pos = a;
  VectorXd b_pos = b;
  for (Index r = 0; r < m; ++r) {
    if (b_pos(r) < 0) {
      a_pos.row(r) *= -1.0;
      b_pos(r) *= -1.0;
    }
  }

  StandardFormResult result;
  Tableau tab(a_pos, b_pos);
  std::vector<Index> row_id(static_cast<std::size_t>(m));
  for (Index r = 0; r < m; ++r) row_id[static_cast<std::size_t>(r)] = r;

  // Phase one: minimize the sum of artificials.
  VectorXd phase1 = VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  tab.set_costs(phase1);
  LpStatus st = tab.iterate(n + m, options, result.iterations);
  if (st != LpStatus::optimal) {
    result.status = st;
    return result;
  }
  const double scale = std::max(1.0, b_pos.lpNorm<Eigen::Infinity>());
  if (tab.objective() > options.feasibility_tol * scale) {
    result.status = LpStatus::infeasible;
    return result;
  }

  // Pivot remaining artificials out of the basis; rows where that is
  // impossible are linear combinations of the others.
  for (Index r = tab.rows(); r-- > 0;) {
    if (tab.basis()[static_cast<std::size_t>(r)] < n) continue;
    Index col = -1;
    double best = options.pivot_tol * 1e3;
    for (Index j = 0; j < n; ++j) {
      if (std::abs(tab.at(r, j)) > best) {
        best = std::abs(tab.at(r, j));
        col = j;
      }
    }
    if (col >= 0) {
      tab.pivot(r, col);
    } else {
      tab.drop_row(r);
      row_id.erase(row_id.begin() + r);
    }
  }

  // Phase two over structural columns only.
  VectorXd phase2 = VectorXd::Zero(n + m);
  phase2.head(n) = c;
  tab.set_costs(phase2);
  st = tab.iterate(n, options, result.iterations);
  if (st != LpStatus::optimal) {
    result.status = st;
    return result;
  }

  // Recompute the basic solution and duals from the original data to shed
  // accumulated tableau round-off.
  const Index k = tab.rows();
  MatrixXd basis_matrix(k, k);
  VectorXd b_kept(k);
  VectorXd c_basis(k);
  for (Index r = 0; r < k; ++r) {
    const Index col = tab.basis()[static_cast<std::size_t>(r)];
    const Index orig_row = row_id[static_cast<std::size_t>(r)];
    b_kept(r) = b(orig_row);
    c_basis(r) = c(col);
    for (Index q = 0; q < k; ++q) {
      basis_matrix(q, r) = a(row_id[static_cast<std::size_t>(q)], col);
    }
  }
  result.status = LpStatus::optimal;
  Eigen::FullPivLU<MatrixXd> lu(basis_matrix);
  VectorXd x_basis;
  VectorXd y_kept;
  if (lu.isInvertible()) {
    x_basis = lu.solve(b_kept);
    y_kept = lu.transpose().solve(c_basis);
  } else {
    x_basis.resize(k);
    for (Index r = 0; r < k; ++r) x_basis(r) = tab.rhs(r);
    y_kept = VectorXd::Zero(k);
    result.status = LpStatus::numerical_failure;
  }

  result.x = VectorXd::Zero(n);
  for (Index r = 0; r < k; ++r) {
    const double v = x_basis(r);
    if (v < -options.feasibility_tol * scale) {
      result.status = LpStatus::numerical_failure;
    }
    result.x(tab.basis()[static_cast<std::size_t>(r)]) = std::max(0.0, v);
    result.basis.push_back(tab.basis()[static_cast<std::size_t>(r)]);
  }
  result.dual = VectorXd::Zero(m);
  for (Index r = 0; r < k; ++r) result.dual(row_id[static_cast<std::size_t>(r)]) = y_kept(r);
  result.objective = c.dot(result.x);
  return result;
}

void l1_standard_form(const AffineL1Problem& problem, MatrixXd& a, VectorXd& b) {
  problem.check();
  const Index rows = static_cast<Index>(problem.rows());
  const Index atoms = static_cast<Index>(problem.atoms.size());
  const Index target_rows = problem.target.size();
  MatrixXd signed_block(rows, atoms);
  for (Index i = 0; i < atoms; ++i) {
    signed_block.col(i).head(target_rows) = problem.atoms[static_cast<std::size_t>(i)];
    for (std::size_t e = 0; e < problem.extra_equalities.size(); ++e) {
      signed_block(target_rows + static_cast<Index>(e), i) =
          problem.extra_equalities[e].coefficients(i);
    }
  }
  b.resize(rows);
  b.head(target_rows) = problem.target;
  for (std::size_t e = 0; e < problem.extra_equalities.size(); ++e) {
    b(target_rows + static_cast<Index>(e)) = problem.extra_equalities[e].rhs;
  }
  if (problem.sign_split) {
    a.resize(rows, 2 * atoms);
    a.leftCols(atoms) = signed_block;
    a.rightCols(atoms) = -signed_block;
  } else {
    a = std::move(signed_block);
  }
}

L1Solution solve_l1(const AffineL1Problem& problem, const SimplexOptions& options) {
  MatrixXd a;
  VectorXd b;
  l1_standard_form(problem, a, b);
  const VectorXd cost = VectorXd::Ones(a.cols());
  const StandardFormResult sf = solve_standard_form(a, b, cost, options);

  L1Solution sol;
  sol.status = sf.status;
  sol.iterations = sf.iterations;
  const Index atoms = static_cast<Index>(problem.atoms.size());
  if (sf.status == LpStatus::infeasible) {
    detail::logger().info("solve_l1: infeasible ({} rows, {} atoms)", a.rows(), atoms);
    return sol;
  }
  if (sf.x.size() == 0) {
    detail::logger().warn("solve_l1: {} after {} iterations", to_string(sf.status), sf.iterations);
    return sol;
  }
  sol.coefficients = problem.sign_split ? VectorXd(sf.x.head(atoms) - sf.x.tail(atoms))
                                        : sf.x;
  sol.value = sf.objective;
  sol.residual = (a * sf.x - b).norm();
  sol.duality_gap = std::abs(sf.objective - b.dot(sf.dual));
  const VectorXd reduced = cost - a.transpose() * sf.dual;
  sol.dual_infeasibility = std::max(0.0, -reduced.minCoeff());
  detail::logger().debug("solve_l1: {} value {:.12g} residual {:.2e} gap {:.2e} ({} pivots)",
                         to_string(sol.status), sol.value, sol.residual, sol.duality_gap,
                         sol.iterations);
  return sol;
}

void write_lp_format(const AffineL1Problem& problem, std::ostream& out) {
  MatrixXd a;
  VectorXd b;
  l1_standard_form(problem, a, b);
  const Index atoms = static_cast<Index>(problem.atoms.size());
  auto var = [&](Index j) {
    if (!problem.sign_split) return fmt::format("q{}", j);
    return j < atoms ? fmt::format("qp{}", j) : fmt::format("qm{}", j - atoms);
  };
  // CPLEX LP readers limit line length, so terms are wrapped.
  auto write_terms = [&](auto coefficient) {
    int on_line = 0;
    bool first = true;
    for (Index j = 0; j < a.cols(); ++j) {
      const double v = coefficient(j);
      if (v == 0.0) continue;
      fmt::print(out, "{}{} {:.17g} {}", first ? "" : " ", v < 0 ? "-" : "+", std::abs(v), var(j));
      first = false;
      if (++on_line == 6) {
        out << "\n   ";
        on_line = 0;
      }
    }
    if (first) fmt::print(out, "0 {}", var(0));
  };

  out << "\\ minimum l1-norm affine decomposition\n";
  out << "Minimize\n obj: ";
  write_terms([](Index) { return 1.0; });
  out << "\nSubject To\n";
  for (Index r = 0; r < a.rows(); ++r) {
    fmt::print(out, " c{}: ", r);
    write_terms([&](Index j) { return a(r, j); });
    fmt::print(out, " = {:.17g}\n", b(r));
  }
  out << "End\n";
}

}  // namespace magicswitch
