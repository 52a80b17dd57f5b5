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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "magicswitch/gates.hpp"
#include "magicswitch/stabilizer.hpp"
#include "support/test_support.hpp"

namespace ms = magicswitch;

namespace {

std::vector<ms::Operator> clifford_generators(std::size_t n) {
  std::vector<ms::Operator> gens;
  for (std::size_t w = 0; w < n; ++w) {
    gens.push_back(ms::gates::on_wire(ms::gates::hadamard(), w, n));
    gens.push_back(ms::gates::on_wire(ms::gates::phase_s(), w, n));
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t t = 0; t < n; ++t) {
      if (c != t) gens.push_back(ms::gates::cnot(c, t, n));
    }
  }
  return gens;
}

std::ptrdiff_t find_in(const ms::StabilizerDictionary& dict, const ms::Operator& p) {
  for (std::size_t i = 0; i < dict.size(); ++i) {
    if (ms::max_abs_diff(dict.projectors[i], p) < 1e-9) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

class DictionaryTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DictionaryTest, CountMatchesFormula) {
  const std::size_t n = GetParam();
  EXPECT_EQ(ms::stabilizer_dictionary(n).size(), ms::stabilizer_state_count(n));
}

TEST_P(DictionaryTest, EntriesArePureAndDistinct) {
  const auto& dict = ms::stabilizer_dictionary(GetParam());
  for (std::size_t i = 0; i < dict.size(); ++i) {
    const ms::Operator& p = dict.projectors[i];
    EXPECT_LT(ms::max_abs_diff(p * p, p), 1e-12);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(ms::is_hermitian(p));
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GT(ms::max_abs_diff(p, dict.projectors[j]), 1e-3);
    }
  }
}

TEST_P(DictionaryTest, ClosedUnderCliffordGenerators) {
  const std::size_t n = GetParam();
  const auto& dict = ms::stabilizer_dictionary(n);
  for (const ms::Operator& g : clifford_generators(n)) {
    for (const ms::Operator& p : dict.projectors) {
      EXPECT_GE(find_in(dict, g * p * g.adjoint()), 0);
    }
  }
}

TEST_P(DictionaryTest, RandomCliffordWordsStayInside) {
  const std::size_t n = GetParam();
  const auto& dict = ms::stabilizer_dictionary(n);
  const auto gens = clifford_generators(n);
  testing_support::Rng rng(100 + n);
  for (int trial = 0; trial < 50; ++trial) {
    ms::Operator u = ms::Operator::Identity(dict.dim(), dict.dim());
    for (int step = 0; step < 30; ++step) u = gens[rng.index(gens.size())] * u;
    const ms::Operator p = u * dict.projectors[rng.index(dict.size())] * u.adjoint();
    EXPECT_GE(find_in(dict, p), 0);
  }
}

TEST_P(DictionaryTest, UniformMixtureIsMaximallyMixed) {
  const auto& dict = ms::stabilizer_dictionary(GetParam());
  ms::Operator sum = ms::Operator::Zero(dict.dim(), dict.dim());
  for (const ms::Operator& p : dict.projectors) sum += p;
  const ms::Operator expected = ms::Operator::Identity(dict.dim(), dict.dim()) *
                                (static_cast<double>(dict.size()) / static_cast<double>(dict.dim()));
  EXPECT_LT(ms::max_abs_diff(sum, expected), 1e-10);
}

TEST_P(DictionaryTest, LabelsAreCanonicalAndSorted) {
  const auto& dict = ms::stabilizer_dictionary(GetParam());
  EXPECT_TRUE(std::is_sorted(dict.labels.begin(), dict.labels.end()));
  EXPECT_EQ(std::set<std::string>(dict.labels.begin(), dict.labels.end()).size(), dict.size());
  for (std::size_t i = 0; i < dict.size(); ++i) {
    EXPECT_EQ(ms::stabilizer_label(dict.projectors[i], dict.n_qubits), dict.labels[i]);
  }
}

TEST_P(DictionaryTest, JsonRoundTrip) {
  const auto& dict = ms::stabilizer_dictionary(GetParam());
  const auto j = nlohmann::json::parse(ms::dictionary_to_json(dict));
  ASSERT_EQ(j["states"].size(), dict.size());
  for (std::size_t i = 0; i < dict.size(); ++i) {
    const auto& s = j["states"][i];
    EXPECT_EQ(s["label"], dict.labels[i]);
    const auto& e = s["entries"];
    const std::size_t d = dict.dim();
    for (std::size_t k = 0; k < d * d; ++k) {
      const ms::Complex v(e[k][0].get<double>(), e[k][1].get<double>());
      EXPECT_NEAR(std::abs(v - dict.projectors[i](k / d, k % d)), 0.0, 1e-15);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Qubits, DictionaryTest, ::testing::Values(1u, 2u));

TEST(Dictionary, KnownCounts) {
  EXPECT_EQ(ms::stabilizer_dictionary(1).size(), 6u);
  EXPECT_EQ(ms::stabilizer_dictionary(2).size(), 60u);
  EXPECT_EQ(ms::stabilizer_state_count(3), 1080u);
  EXPECT_THROW(ms::enumerate_stabilizer_states(3), std::invalid_argument);
}

TEST(Dictionary, SingleQubitLabels) {
  const std::vector<std::string> expected = {"+X", "+Y", "+Z", "-X", "-Y", "-Z"};
  std::vector<std::string> got = ms::stabilizer_dictionary(1).labels;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Dictionary, LabelRejectsMagicState) {
  const ms::Ket t = ms::gates::t_gate() * (ms::basis_ket(2, 0) + ms::basis_ket(2, 1)) / std::sqrt(2.0);
  EXPECT_THROW(ms::stabilizer_label(ms::projector(t), 1), std::invalid_argument);
}

TEST(Membership, MixturesInsideMagicOutside) {
  const auto& dict = ms::stabilizer_dictionary(2);
  testing_support::Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    ms::Operator mix = ms::Operator::Zero(4, 4);
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double w = rng.uniform();
      mix += w * dict.projectors[rng.index(dict.size())];
      total += w;
    }
    EXPECT_TRUE(ms::is_stabilizer_state(ms::DensityOperator::from_operator(mix / total), dict));
  }
  const ms::Ket t = ms::gates::t_gate() * (ms::basis_ket(2, 0) + ms::basis_ket(2, 1)) / std::sqrt(2.0);
  EXPECT_FALSE(ms::is_stabilizer_state(ms::DensityOperator::pure(t), ms::stabilizer_dictionary(1)));
}

TEST(CspoAtoms, MarginalsSplitIntoProductAndEntangled) {
  const ms::CspoAtoms atoms = ms::cspo_choi_atoms(ms::stabilizer_dictionary(2));
  ASSERT_EQ(atoms.projectors.size(), 60u);
  ASSERT_EQ(atoms.marginals.size(), 60u);
  int maximally_mixed = 0;
  int pure = 0;
  for (const ms::Operator& m : atoms.marginals) {
    EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
    if (ms::max_abs_diff(m, 0.5 * ms::Operator::Identity(2, 2)) < 1e-10) ++maximally_mixed;
    if (ms::max_abs_diff(m * m, m) < 1e-10) ++pure;
  }
  EXPECT_EQ(maximally_mixed, 24);
  EXPECT_EQ(pure, 36);
}

}  // namespace
