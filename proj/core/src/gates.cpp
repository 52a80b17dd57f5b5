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

#include "magicswitch/gates.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace magicswitch::gates {
namespace {

const Complex kI{0.0, 1.0};

Complex root_of_unity(std::size_t d, long long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(d);
  return std::polar(1.0, angle);
}

}  // namespace

Operator pauli_x() {
  Operator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Operator pauli_y() {
  Operator m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Operator pauli_z() {
  Operator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Operator hadamard() {
  Operator m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Operator phase_s() {
  Operator m = Operator::Identity(2, 2);
  m(1, 1) = kI;
  return m;
}

Operator t_gate() {
  Operator m = Operator::Identity(2, 2);
  m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
  return m;
}

Operator on_wire(const Operator& gate, std::size_t wire, std::size_t n_wires) {
  if (wire >= n_wires) throw DimensionError("on_wire: wire index out of range");
  const Eigen::Index d = gate.rows();
  std::vector<Operator> factors(n_wires, Operator::Identity(d, d));
  factors[wire] = gate;
  return tensor(factors);
}

Operator cnot(std::size_t control, std::size_t target, std::size_t n_qubits) {
  if (control >= n_qubits || target >= n_qubits || control == target) {
    throw DimensionError("cnot: invalid wire assignment");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  Operator m = Operator::Zero(static_cast<Eigen::Index>(dim),
                              static_cast<Eigen::Index>(dim));
  const std::size_t cbit = std::size_t{1} << (n_qubits - 1 - control);
  const std::size_t tbit = std::size_t{1} << (n_qubits - 1 - target);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t j = (i & cbit) ? (i ^ tbit) : i;
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return m;
}

Operator shift(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Operator m = Operator::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m((j + 1) % n, j) = 1.0;
  return m;
}

Operator clock(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Operator m = Operator::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = root_of_unity(d, j);
  return m;
}

Operator qutrit_hadamard() {
  Operator m(3, 3);
  for (Eigen::Index j = 0; j < 3; ++j) {
    for (Eigen::Index k = 0; k < 3; ++k) m(j, k) = root_of_unity(3, j * k);
  }
  return m / std::sqrt(3.0);
}

Operator qutrit_phase_s() {
  Operator m = Operator::Identity(3, 3);
  m(2, 2) = root_of_unity(3, 1);
  return m;
}

Operator qutrit_t_gate() {
  Operator m = Operator::Zero(3, 3);
  m(0, 0) = root_of_unity(9, 1);
  m(1, 1) = 1.0;
  m(2, 2) = root_of_unity(9, -1);
  return m;
}

}  // namespace magicswitch::gates
