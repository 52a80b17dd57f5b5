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

#ifndef MAGICSWITCH_STABILIZER_HPP_
#define MAGICSWITCH_STABILIZER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "magicswitch/operator.hpp"

namespace magicswitch {

// Every pure n-qubit stabilizer state, stored as a projector, together with
// a canonical label built from its stabilizer group: the signed Pauli
// strings picked greedily in I < X < Y < Z lexicographic order, e.g. "+XX,+ZZ".
// Entries are sorted by label.
struct StabilizerDictionary {
  std::size_t n_qubits = 0;
  std::vector<Operator> projectors;
  std::vector<std::string> labels;

  std::size_t size() const { return projectors.size(); }
  std::size_t dim() const { return std::size_t{1} << n_qubits; }
};

// |pure STAB_n| = 2^n prod_{k=1..n} (2^k + 1).
std::size_t stabilizer_state_count(std::size_t n_qubits);

// Orbit of |0...0><0...0| under H and S on every wire and CNOT on every
// ordered wire pair. Supports n in {1, 2}; throws std::invalid_argument
// otherwise.
StabilizerDictionary enumerate_stabilizer_states(std::size_t n_qubits);

// Lazily built, process-wide copy of enumerate_stabilizer_states(n).
const StabilizerDictionary& stabilizer_dictionary(std::size_t n_qubits);

// Canonical generator label of a pure stabilizer projector. Throws if the
// operator is not stabilized by 2^n signed Pauli strings.
std::string stabilizer_label(const Operator& projector, std::size_t n_qubits);

// Membership via the robustness LP: true iff R(rho) <= 1 + tol. `rho` is
// renormalized first when it is not unit trace. Throws std::runtime_error if
// the LP is infeasible or fails.
bool is_stabilizer_state(const DensityOperator& rho,
                         const StabilizerDictionary& dict, double tol = 1e-6);

// Two-qubit-register stabilizer projectors used as Choi-space atoms for
// channels on n = dict.n_qubits / 2 qubits, paired with their marginals on
// the input (reference) factor.
struct CspoAtoms {
  std::size_t n_qubits = 0;           // channel input/output qubits
  std::vector<Operator> projectors;   // 2^{2n} x 2^{2n}
  std::vector<Operator> marginals;    // Tr_out, 2^n x 2^n
};

CspoAtoms cspo_choi_atoms(const StabilizerDictionary& dict_2n);

// {"n_qubits": n, "states": [{"label": ..., "rows": d, "cols": d,
//  "entries": [[re, im], ...]}]} with entries in row-major order.
std::string dictionary_to_json(const StabilizerDictionary& dict);

}  // namespace magicswitch

#endif  // MAGICSWITCH_STABILIZER_HPP_
