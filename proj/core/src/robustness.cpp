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

#include "magicswitch/robustness.hpp"

#include <fmt/format.h>

#include "logger.hpp"
#include "magicswitch/pauli_basis.hpp"

namespace magicswitch {
namespace {

const PauliBasis& pauli_basis(std::size_t n_qubits) {
  static const PauliBasis bases[] = {PauliBasis(1), PauliBasis(2)};
  if (n_qubits == 0 || n_qubits > 2) {
    throw std::invalid_argument("pauli_basis: unsupported qubit count");
  }
  return bases[n_qubits - 1];
}

void log_solution(const char* what, const L1Solution& sol) {
  if (sol.status == LpStatus::optimal) {
    detail::logger().info("{}: {} value {:.12g} residual {:.2e}", what, to_string(sol.status),
                          sol.value, sol.residual);
  } else {
    detail::logger().warn("{}: {}", what, to_string(sol.status));
  }
}

}  // namespace

AffineL1Problem rom_problem(const Operator& rho, const StabilizerDictionary& dict) {
  if (static_cast<std::size_t>(rho.rows()) != dict.dim()) {
    throw DimensionError(fmt::format("rom: state dimension {} vs dictionary dimension {}",
                                     rho.rows(), dict.dim()));
  }
  const PauliBasis& basis = pauli_basis(dict.n_qubits);
  AffineL1Problem problem;
  problem.sign_split = true;
  problem.atoms.reserve(dict.size());
  for (const Operator& p : dict.projectors) problem.atoms.push_back(basis.vectorize(p));
  problem.target = basis.vectorize(rho);
  return problem;
}

RomResult rom_state(const DensityOperator& rho, const StabilizerDictionary& dict,
                    const SimplexOptions& options) {
  RomResult result;
  Operator state = rho.op();
  if (!rho.normalized()) {
    const Renormalized r = renormalize(rho, "rom_state");
    result.scale = r.scale;
    state = r.state.op();
  }
  result.solution = solve_l1(rom_problem(state, dict), options);
  log_solution("rom_state", result.solution);
  return result;
}

AffineL1Problem channel_robustness_problem(const KrausChannel& ch, const CspoAtoms& atoms) {
  const std::size_t d = std::size_t{1} << atoms.n_qubits;
  if (ch.d_in() != d || ch.d_out() != d) {
    throw DimensionError(fmt::format(
        "channel_robustness: channel is {}->{}, atoms describe {}-dimensional channels",
        ch.d_in(), ch.d_out(), d));
  }
  const ChoiState choi = choi_of_channel(ch);
  const PauliBasis& joint = pauli_basis(2 * atoms.n_qubits);
  const PauliBasis& marginal = pauli_basis(atoms.n_qubits);
  const std::size_t m = atoms.projectors.size();
  const std::size_t traceless = marginal.size() - 1;

  AffineL1Problem problem;
  problem.sign_split = false;
  problem.target = joint.vectorize(choi.op());
  problem.atoms.reserve(2 * m);
  std::vector<Eigen::VectorXd> joint_vecs;
  joint_vecs.reserve(m);
  for (const Operator& s : atoms.projectors) joint_vecs.push_back(joint.vectorize(s));
  for (std::size_t i = 0; i < m; ++i) problem.atoms.push_back(joint_vecs[i]);
  for (std::size_t i = 0; i < m; ++i) problem.atoms.push_back(-joint_vecs[i]);

  problem.extra_equalities.resize(traceless);
  for (auto& eq : problem.extra_equalities) {
    eq.coefficients = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * m));
    eq.rhs = 0.0;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Eigen::VectorXd mv = marginal.vectorize(atoms.marginals[i]);
    for (std::size_t k = 0; k < traceless; ++k) {
      problem.extra_equalities[k].coefficients(static_cast<Eigen::Index>(m + i)) =
          mv(static_cast<Eigen::Index>(k + 1));
    }
  }
  return problem;
}

L1Solution channel_robustness(const KrausChannel& ch, const CspoAtoms& atoms,
                              const SimplexOptions& options) {
  L1Solution sol = solve_l1(channel_robustness_problem(ch, atoms), options);
  log_solution("channel_robustness", sol);
  return sol;
}

}  // namespace magicswitch
