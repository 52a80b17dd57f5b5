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

#ifndef MAGICSWITCH_PAULI_BASIS_HPP_
#define MAGICSWITCH_PAULI_BASIS_HPP_

#include <cstddef>
#include <vector>

#include "magicswitch/operator.hpp"

namespace magicswitch {

// Orthonormal basis of n-qubit Hermitian operators made of Pauli strings
// scaled by 2^{-n/2}. Component k of vectorize(H) is Tr[P_k H] / 2^{n/2},
// so the map is an isometry from (Herm, Tr[AB]) to (R^{4^n}, dot).
// Index k is the base-4 Pauli code with I=0, X=1, Y=2, Z=3 and the leftmost
// wire most significant; k = 0 is the identity (trace) component.
class PauliBasis {
 public:
  explicit PauliBasis(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  std::size_t size() const { return elements_.size(); }
  const Operator& element(std::size_t k) const { return elements_.at(k); }

  Eigen::VectorXd vectorize(const Operator& hermitian) const;
  Operator devectorize(const Eigen::VectorXd& components) const;

 private:
  std::size_t n_qubits_;
  std::vector<Operator> elements_;
};

}  // namespace magicswitch

#endif  // MAGICSWITCH_PAULI_BASIS_HPP_
