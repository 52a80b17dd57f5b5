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

#include <benchmark/benchmark.h>

#include "magicswitch/channels.hpp"
#include "magicswitch/experiments.hpp"
#include "magicswitch/gates.hpp"
#include "magicswitch/logging.hpp"
#include "magicswitch/models.hpp"
#include "magicswitch/qswitch.hpp"
#include "magicswitch/robustness.hpp"
#include "magicswitch/stabilizer.hpp"
#include "magicswitch/wigner.hpp"

namespace ms = magicswitch;

namespace {

void BM_EnumerateStabilizers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ms::enumerate_stabilizer_states(n));
}
BENCHMARK(BM_EnumerateStabilizers)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RomState(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto& dict = ms::stabilizer_dictionary(n);
  ms::Ket t = ms::gates::t_gate() * (ms::basis_ket(2, 0) + ms::basis_ket(2, 1)) / std::sqrt(2.0);
  const ms::Ket psi = n == 1 ? t : ms::Ket(ms::tensor(t, t).col(0));
  const auto rho = ms::DensityOperator::pure(psi);
  for (auto _ : state) benchmark::DoNotOptimize(ms::rom_state(rho, dict));
}
BENCHMARK(BM_RomState)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_ChannelRobustness(benchmark::State& state) {
  const ms::CspoAtoms atoms = ms::cspo_choi_atoms(ms::stabilizer_dictionary(2));
  const ms::KrausChannel ch = ms::models::noisy_th_channel(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(ms::channel_robustness(ch, atoms));
}
BENCHMARK(BM_ChannelRobustness)->Unit(benchmark::kMicrosecond);

void BM_SwitchConditionalOutputs(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const ms::KrausChannel dp = ms::depolarizing_channel(d, 0.3);
  const auto plus = ms::models::plus_state(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ms::conditional_outputs(ms::build_switch(dp, dp), plus));
  }
}
BENCHMARK(BM_SwitchConditionalOutputs)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_ManaChannel(benchmark::State& state) {
  const ms::PhaseSpaceFrame frame = ms::build_frame(3);
  const ms::KrausChannel ch = ms::models::resolve_qutrit_th_channel(0.3).channel;
  for (auto _ : state) benchmark::DoNotOptimize(ms::mana_channel(ch, frame));
}
BENCHMARK(BM_ManaChannel)->Unit(benchmark::kMicrosecond);

void BM_Fig2Sweep(benchmark::State& state) {
  ms::SweepConfig c = ms::SweepConfig::defaults(ms::Experiment::fig2_qubit_example);
  c.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ms::run_fig2(c));
}
BENCHMARK(BM_Fig2Sweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  ms::set_log_level(ms::LogLevel::off);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
