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

#include "magicswitch/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "magicswitch/gates.hpp"
#include "magicswitch/robustness.hpp"

namespace magicswitch {
namespace {

constexpr double kMatchTol = 1e-8;
constexpr double kHashGrid = 1e-6;

std::size_t projector_hash(const Operator& p) {
  std::size_t h = 0;
  auto mix = [&h](long long v) {
    h ^= std::hash<long long>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    mix(std::llround(p.data()[i].real() / kHashGrid));
    mix(std::llround(p.data()[i].imag() / kHashGrid));
  }
  return h;
}

// Pauli string encoded base 4 with I=0, X=1, Y=2, Z=3, leftmost wire most
// significant.
Operator pauli_string(std::size_t code, std::size_t n) {
  static const Operator single[4] = {Operator::Identity(2, 2), gates::pauli_x(),
                                     gates::pauli_y(), gates::pauli_z()};
  std::vector<Operator> factors(n);
  for (std::size_t w = n; w-- > 0;) {
    factors[w] = single[code % 4];
    code /= 4;
  }
  return tensor(factors);
}

std::string pauli_name(std::size_t code, std::size_t n) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string s(n, 'I');
  for (std::size_t w = n; w-- > 0;) {
    s[w] = kLetters[code % 4];
    code /= 4;
  }
  return s;
}

// Symplectic (x|z) bit pattern of a Pauli code, phases ignored.
std::size_t symplectic(std::size_t code, std::size_t n) {
  std::size_t x = 0;
  std::size_t z = 0;
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t letter = code % 4;
    code /= 4;
    if (letter == 1 || letter == 2) x |= std::size_t{1} << w;
    if (letter == 2 || letter == 3) z |= std::size_t{1} << w;
  }
  return x | (z << n);
}

}  // namespace

std::size_t stabilizer_state_count(std::size_t n_qubits) {
  std::size_t count = std::size_t{1} << n_qubits;
  for (std::size_t k = 1; k <= n_qubits; ++k) count *= (std::size_t{1} << k) + 1;
  return count;
}

std::string stabilizer_label(const Operator& projector, std::size_t n_qubits) {
  const std::size_t n_paulis = std::size_t{1} << (2 * n_qubits);
  std::vector<std::size_t> generated{0};  // symplectic patterns in the span
  std::vector<std::string> generators;
  for (std::size_t code = 1; code < n_paulis; ++code) {
    const double expectation = (pauli_string(code, n_qubits) * projector).trace().real();
    if (std::abs(std::abs(expectation) - 1.0) > kMatchTol) continue;
    const std::size_t pattern = symplectic(code, n_qubits);
    if (std::find(generated.begin(), generated.end(), pattern) != generated.end()) {
      continue;
    }
    generators.push_back((expectation > 0 ? "+" : "-") + pauli_name(code, n_qubits));
    const std::size_t existing = generated.size();
    for (std::size_t i = 0; i < existing; ++i) generated.push_back(generated[i] ^ pattern);
  }
  if (generators.size() != n_qubits) {
    throw std::invalid_argument("stabilizer_label: operator is not a pure stabilizer state");
  }
  std::string label;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) label += ',';
    label += generators[i];
  }
  return label;
}

StabilizerDictionary enumerate_stabilizer_states(std::size_t n_qubits) {
  if (n_qubits < 1 || n_qubits > 2) {
    throw std::invalid_argument(fmt::format(
        "enumerate_stabilizer_states: n = {} not supported (1 or 2)", n_qubits));
  }
  std::vector<Operator> generators;
  for (std::size_t w = 0; w < n_qubits; ++w) {
    generators.push_back(gates::on_wire(gates::hadamard(), w, n_qubits));
    generators.push_back(gates::on_wire(gates::phase_s(), w, n_qubits));
  }
  for (std::size_t c = 0; c < n_qubits; ++c) {
    for (std::size_t t = 0; t < n_qubits; ++t) {
      if (c != t) generators.push_back(gates::cnot(c, t, n_qubits));
    }
  }

  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Operator> found;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  auto insert = [&](Operator p) -> bool {
    auto& bucket = buckets[projector_hash(p)];
    for (std::size_t idx : bucket) {
      if (approx_equal(found[idx], p, kMatchTol)) return false;
    }
    bucket.push_back(found.size());
    found.push_back(std::move(p));
    return true;
  };

  std::deque<std::size_t> frontier;
  insert(projector(basis_ket(dim, 0)));
  frontier.push_back(0);
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const Operator& g : generators) {
      Operator next = g * found[idx] * g.adjoint();
      if (insert(std::move(next))) frontier.push_back(found.size() - 1);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(found.size());
  for (const Operator& p : found) labels.push_back(stabilizer_label(p, n_qubits));
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

  StabilizerDictionary dict;
  dict.n_qubits = n_qubits;
  for (std::size_t i : order) {
    dict.projectors.push_back(found[i]);
    dict.labels.push_back(labels[i]);
  }
  return dict;
}

const StabilizerDictionary& stabilizer_dictionary(std::size_t n_qubits) {
  static const StabilizerDictionary one = enumerate_stabilizer_states(1);
  static const StabilizerDictionary two = enumerate_stabilizer_states(2);
  if (n_qubits == 1) return one;
  if (n_qubits == 2) return two;
  throw std::invalid_argument("stabilizer_dictionary: only n = 1, 2 are available");
}

bool is_stabilizer_state(const DensityOperator& rho, const StabilizerDictionary& dict,
                         double tol) {
  const RomResult result = rom_state(rho, dict);
  if (result.solution.status != LpStatus::optimal) {
    throw std::runtime_error(fmt::format("is_stabilizer_state: LP {}",
                                         to_string(result.solution.status)));
  }
  return result.solution.value <= 1.0 + tol;
}

CspoAtoms cspo_choi_atoms(const StabilizerDictionary& dict_2n) {
  if (dict_2n.n_qubits % 2 != 0) {
    throw std::invalid_argument("cspo_choi_atoms: dictionary must cover 2n qubits");
  }
  CspoAtoms atoms;
  atoms.n_qubits = dict_2n.n_qubits / 2;
  const std::size_t half = std::size_t{1} << atoms.n_qubits;
  const std::size_t dims[] = {half, half};
  const std::size_t keep[] = {0};
  for (const Operator& p : dict_2n.projectors) {
    atoms.projectors.push_back(p);
    atoms.marginals.push_back(partial_trace(p, dims, keep));
  }
  return atoms;
}

std::string dictionary_to_json(const StabilizerDictionary& dict) {
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t i = 0; i < dict.size(); ++i) {
    const Operator& p = dict.projectors[i];
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < p.rows(); ++r) {
      for (Eigen::Index c = 0; c < p.cols(); ++c) {
        entries.push_back({p(r, c).real(), p(r, c).imag()});
      }
    }
    states.push_back({{"label", dict.labels[i]},
                      {"rows", p.rows()},
                      {"cols", p.cols()},
                      {"entries", std::move(entries)}});
  }
  nlohmann::json doc = {{"n_qubits", dict.n_qubits}, {"states", std::move(states)}};
  return doc.dump(2);
}

}  // namespace magicswitch
