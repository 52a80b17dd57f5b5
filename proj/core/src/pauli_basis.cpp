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

#include "magicswitch/pauli_basis.hpp"

#include <cmath>

#include <fmt/format.h>

#include "magicswitch/gates.hpp"

namespace magicswitch {

PauliBasis::PauliBasis(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > 4) {
    throw std::invalid_argument(fmt::format("PauliBasis: n = {} unsupported", n_qubits));
  }
  const Operator single[4] = {Operator::Identity(2, 2), gates::pauli_x(),
                              gates::pauli_y(), gates::pauli_z()};
  const double norm = std::sqrt(static_cast<double>(dim()));
  const std::size_t count = std::size_t{1} << (2 * n_qubits);
  elements_.reserve(count);
  std::vector<Operator> factors(n_qubits);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t c = code;
    for (std::size_t w = n_qubits; w-- > 0;) {
      factors[w] = single[c % 4];
      c /= 4;
    }
    elements_.push_back(tensor(factors) / norm);
  }
}

Eigen::VectorXd PauliBasis::vectorize(const Operator& hermitian) const {
  if (static_cast<std::size_t>(hermitian.rows()) != dim() ||
      static_cast<std::size_t>(hermitian.cols()) != dim()) {
    throw DimensionError(fmt::format("PauliBasis::vectorize: expected {}x{}, got {}x{}",
                                     dim(), dim(), hermitian.rows(), hermitian.cols()));
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(size()));
  for (std::size_t k = 0; k < size(); ++k) {
    // Tr[P H] = sum_ij P_ij H_ji
    v(static_cast<Eigen::Index>(k)) =
        (elements_[k].transpose().cwiseProduct(hermitian)).sum().real();
  }
  return v;
}

Operator PauliBasis::devectorize(const Eigen::VectorXd& components) const {
  if (static_cast<std::size_t>(components.size()) != size()) {
    throw DimensionError("PauliBasis::devectorize: wrong component count");
  }
  const auto n = static_cast<Eigen::Index>(dim());
  Operator out = Operator::Zero(n, n);
  for (std::size_t k = 0; k < size(); ++k) {
    out += components(static_cast<Eigen::Index>(k)) * elements_[k];
  }
  return out;
}

}  // namespace magicswitch
