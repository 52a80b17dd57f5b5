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

// magic_switch: command-line front end for the sweeps, threshold finder and
// single-object magic measures.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

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

constexpr int kExitRuntime = 1;
constexpr int kExitNotFound = 3;

struct CommonOptions {
  std::string out = "-";
  std::string format = "csv";
  std::string grid;
  double tol = 1e-6;
  std::size_t jobs = 1;
  std::string config;
  double threshold_tol = 1e-4;
  std::optional<double> p;

  CLI::Option* out_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
  CLI::Option* threshold_tol_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool single_point) {
  o.out_opt = cmd->add_option("--out", o.out, "output file, '-' for stdout");
  o.format_opt = cmd->add_option("--format", o.format, "csv or json")
                     ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--grid", o.grid, "p grid as start:stop:step");
  o.tol_opt = cmd->add_option("--tol", o.tol, "LP tolerance for floors and thresholds");
  o.jobs_opt = cmd->add_option("--jobs", o.jobs, "worker threads (MAGIC_SWITCH_JOBS overrides)")
                   ->check(CLI::PositiveNumber);
  if (single_point) {
    cmd->add_option("--p", o.p, "single noise value instead of a grid")
        ->check(CLI::Range(0.0, 1.0))
        ->excludes("--grid");
  } else {
    cmd->add_option("--config", o.config, "key = value config file")->check(CLI::ExistingFile);
    o.threshold_tol_opt = cmd->add_option("--threshold-tol", o.threshold_tol, "bisection width");
  }
}

// Config file first, then any flag given on the command line.
ms::SweepConfig build_config(ms::Experiment experiment, const CommonOptions& o) {
  ms::SweepConfig c =
      o.config.empty() ? ms::SweepConfig::defaults(experiment) : ms::load_config(o.config);
  if (c.experiment != experiment) {
    throw std::invalid_argument(fmt::format("config file is for '{}', command is '{}'",
                                            ms::to_string(c.experiment),
                                            ms::to_string(experiment)));
  }
  if (!o.grid.empty()) c.grid = ms::parse_grid(o.grid);
  if (o.out_opt->count()) c.output_path = o.out;
  if (c.output_path.empty()) c.output_path = "-";
  if (o.format_opt->count()) c.format = *ms::parse_output_format(o.format);
  if (o.tol_opt->count()) c.tolerances.lp_tol = o.tol;
  if (o.threshold_tol_opt && o.threshold_tol_opt->count()) {
    c.tolerances.threshold_tol = o.threshold_tol;
  }
  if (o.jobs_opt->count()) c.jobs = o.jobs;
  c.jobs = ms::resolve_jobs(c.jobs);
  c.validate();
  return c;
}

std::vector<double> points_for(const CommonOptions& o) {
  if (o.p) return {*o.p};
  if (o.grid.empty()) return {0.0};
  const ms::Grid g = ms::parse_grid(o.grid);
  if (!(g.start >= 0.0 && g.start <= g.stop && g.stop <= 1.0 && g.step > 0.0)) {
    throw std::invalid_argument("grid must lie in [0, 1] with a positive step");
  }
  return g.points();
}

ms::OutputFormat format_of(const CommonOptions& o) { return *ms::parse_output_format(o.format); }

// --- presets ----------------------------------------------------------------

ms::Ket qubit_t_ket() {
  return ms::gates::t_gate() * ms::models::plus_state(2).op().col(0) * std::sqrt(2.0);
}

ms::Ket pure_ket(std::vector<ms::Complex> amps) {
  ms::Ket k(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) k(static_cast<Eigen::Index>(i)) = amps[i];
  return k.normalized();
}

ms::DensityOperator noisy(const ms::Ket& psi, double p) {
  return ms::DensityOperator::from_operator(ms::depolarize(ms::projector(psi), p));
}

ms::Ket qubit_state(const std::string& name) {
  const double c = std::cos(M_PI / 8.0);
  const double s = std::sin(M_PI / 8.0);
  if (name == "zero") return pure_ket({1.0, 0.0});
  if (name == "plus") return pure_ket({1.0, 1.0});
  if (name == "t") return qubit_t_ket();
  if (name == "h") return pure_ket({c, s});
  if (name == "t2") {
    const ms::Ket t = qubit_t_ket();
    return ms::tensor(t, t).col(0);
  }
  throw std::invalid_argument(fmt::format("unknown state '{}'", name));
}

ms::Ket qutrit_state(const std::string& name) {
  if (name == "zero") return pure_ket({1.0, 0.0, 0.0});
  if (name == "plus") return pure_ket({1.0, 1.0, 1.0});
  if (name == "t") return (ms::gates::qutrit_t_gate() * pure_ket({1.0, 1.0, 1.0})).eval();
  if (name == "strange") return pure_ket({0.0, 1.0, -1.0});
  throw std::invalid_argument(fmt::format("unknown qutrit state '{}'", name));
}

ms::KrausChannel qubit_channel(const std::string& name, double p) {
  const auto noisy_gate = [p](const ms::Operator& u) {
    return ms::compose(ms::depolarizing_channel(2, p), ms::unitary_channel(u));
  };
  if (name == "example1") return ms::models::noisy_th_channel(p);
  if (name == "t") return noisy_gate(ms::gates::t_gate());
  if (name == "h") return noisy_gate(ms::gates::hadamard());
  if (name == "s") return noisy_gate(ms::gates::phase_s());
  if (name == "sequential-t") return ms::models::sequential_depolarized_t(p);
  if (name == "switch-plus-t") return ms::effective_t_channels(p).plus.channel;
  if (name == "switch-minus-t") return ms::effective_t_channels(p).minus.channel;
  throw std::invalid_argument(fmt::format("unknown channel '{}'", name));
}

ms::KrausChannel qutrit_channel(const std::string& name, double p) {
  const auto noisy_gate = [p](const ms::Operator& u) {
    return ms::compose(ms::depolarizing_channel(3, p), ms::unitary_channel(u));
  };
  if (name == "qutrit-th") return ms::models::resolve_qutrit_th_channel(p).channel;
  if (name == "qutrit-t") return noisy_gate(ms::gates::qutrit_t_gate());
  if (name == "qutrit-s") return noisy_gate(ms::gates::qutrit_phase_s());
  if (name == "qutrit-h") return noisy_gate(ms::gates::qutrit_hadamard());
  throw std::invalid_argument(fmt::format("unknown qutrit channel '{}'", name));
}

ms::Measure robustness_measure(std::string name, const ms::L1Solution& sol) {
  ms::Measure m{std::move(name), ms::MeasureKind::robustness, sol.value, ms::ValueStatus::ok};
  if (sol.status != ms::LpStatus::optimal) {
    m.value = std::nan("");
    m.status = sol.status == ms::LpStatus::infeasible ? ms::ValueStatus::lp_infeasible
                                                      : ms::ValueStatus::lp_numerical_failure;
  }
  return m;
}

int emit_rows(const std::vector<ms::SweepRow>& rows, const CommonOptions& o) {
  ms::SweepTolerances tol;
  tol.lp_tol = o.tol;
  for (const ms::SweepRow& row : rows) {
    for (const std::string& problem : ms::row_violations(row, tol)) {
      fmt::print(stderr, "[warning] p = {:.6g}: {}\n", row.p, problem);
    }
  }
  ms::write_output(ms::format_rows(rows, format_of(o)), o.out);
  return 0;
}

std::size_t jobs_of(const CommonOptions& o) { return ms::resolve_jobs(o.jobs); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum SWITCH magic sweeps and magic measures"};
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "debug, info, warn, error or off")
      ->check(CLI::IsMember({"debug", "info", "warn", "error", "off"}));

  std::map<std::string, CommonOptions> opts;
  std::map<std::string, CLI::App*> cmds;
  const std::vector<std::pair<std::string, std::string>> sweeps = {
      {"fig2", "qubit example: channel robustness, branch RoMs and probabilities"},
      {"fig3", "depolarized T: sequential vs switched channel robustness"},
      {"figs1", "qutrit example: channel and branch mana"},
      {"appendix-c", "check p_plus < 2p - p^2 and the factored identity"},
      {"threshold", "bisect the free/non-free crossing of one sweep measure"}};
  for (const auto& [name, help] : sweeps) {
    cmds[name] = app.add_subcommand(name, help);
    add_common(cmds[name], opts[name], false);
  }

  std::string threshold_experiment = "fig2";
  std::string threshold_measure = "channel_robustness";
  cmds["threshold"]->add_option("--experiment", threshold_experiment, "fig2, fig3 or figs1");
  cmds["threshold"]->add_option("--measure", threshold_measure, "column name of the sweep");

  std::vector<std::size_t> bound_dims = {2, 3, 5, 10};
  cmds["appendix-c"]->add_option("--dims", bound_dims, "target dimensions")->delimiter(',');

  cmds["rom"] = app.add_subcommand("rom", "robustness of magic of a (depolarized) state");
  add_common(cmds["rom"], opts["rom"], true);
  std::string rom_state_name = "t";
  std::vector<double> bloch;
  cmds["rom"]->add_option("--state", rom_state_name, "zero, plus, t, h or t2");
  cmds["rom"]->add_option("--bloch", bloch, "single-qubit Bloch vector x,y,z")
      ->delimiter(',')
      ->expected(3);

  cmds["channel-robustness"] =
      app.add_subcommand("channel-robustness", "channel robustness of a qubit channel");
  add_common(cmds["channel-robustness"], opts["channel-robustness"], true);
  std::string qubit_channel_name = "example1";
  cmds["channel-robustness"]->add_option(
      "--channel", qubit_channel_name,
      "example1, t, h, s, sequential-t, switch-plus-t or switch-minus-t");

  cmds["mana"] = app.add_subcommand("mana", "mana of a qutrit state or channel");
  add_common(cmds["mana"], opts["mana"], true);
  std::string mana_state_name;
  std::string mana_channel_name;
  auto* mana_state_opt =
      cmds["mana"]->add_option("--state", mana_state_name, "zero, plus, t or strange");
  cmds["mana"]
      ->add_option("--channel", mana_channel_name, "qutrit-th, qutrit-t, qutrit-s or qutrit-h")
      ->excludes(mana_state_opt);

  cmds["stabilizers"] = app.add_subcommand("stabilizers", "dump the pure stabilizer states");
  std::size_t stab_qubits = 1;
  std::string stab_out = "-";
  cmds["stabilizers"]->add_option("--qubits", stab_qubits, "1 or 2")->check(CLI::Range(1, 2));
  cmds["stabilizers"]->add_option("--out", stab_out, "output file, '-' for stdout");

  CLI11_PARSE(app, argc, argv);

  const std::map<std::string, ms::LogLevel> levels = {{"debug", ms::LogLevel::debug},
                                                      {"info", ms::LogLevel::info},
                                                      {"warn", ms::LogLevel::warn},
                                                      {"error", ms::LogLevel::error},
                                                      {"off", ms::LogLevel::off}};
  ms::set_log_level(levels.at(log_level));

  try {
    for (const char* name : {"fig2", "fig3", "figs1"}) {
      if (!cmds[name]->parsed()) continue;
      const ms::SweepConfig c = build_config(*ms::parse_experiment(name), opts[name]);
      ms::write_output(ms::format_rows(ms::run_sweep(c), c.format), c.output_path);
      return 0;
    }

    if (cmds["appendix-c"]->parsed()) {
      ms::SweepConfig c = build_config(ms::Experiment::appendix_c_inequality, opts["appendix-c"]);
      const ms::AppendixCReport report = ms::run_appendix_c(bound_dims, c.grid);
      ms::write_output(ms::format_appendix_c(report, c.format), c.output_path);
      return report.inequality_holds && report.identity_holds ? 0 : kExitNotFound;
    }

    if (cmds["threshold"]->parsed()) {
      const auto experiment = ms::parse_experiment(threshold_experiment);
      if (!experiment || *experiment == ms::Experiment::appendix_c_inequality) {
        throw std::invalid_argument(
            fmt::format("--experiment '{}' has no threshold measures", threshold_experiment));
      }
      const ms::SweepConfig c = build_config(*experiment, opts["threshold"]);
      const ms::ThresholdResult r = ms::find_threshold(threshold_measure, c);
      ms::write_output(ms::format_threshold(threshold_measure, r, c.format), c.output_path);
      return r.found ? 0 : kExitNotFound;
    }

    if (cmds["rom"]->parsed()) {
      const CommonOptions& o = opts["rom"];
      ms::Ket psi;
      if (!bloch.empty()) {
        // Depolarizing a Bloch vector only rescales it, so the state is built
        // directly at each p.
        const double r2 = bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2];
        if (r2 > 1.0 + 1e-12) throw std::invalid_argument("--bloch vector longer than 1");
      } else {
        psi = qubit_state(rom_state_name);
      }
      const auto row_at = [&](double p) {
        ms::DensityOperator rho = ms::DensityOperator::maximally_mixed(2);
        if (!bloch.empty()) {
          const double k = 1.0 - p;
          const ms::Operator op =
              0.5 * (ms::Operator::Identity(2, 2) + k * bloch[0] * ms::gates::pauli_x() +
                     k * bloch[1] * ms::gates::pauli_y() + k * bloch[2] * ms::gates::pauli_z());
          rho = ms::DensityOperator::from_operator(op);
        } else {
          rho = noisy(psi, p);
        }
        const std::size_t n = rho.dim() == 2 ? 1 : 2;
        ms::SweepRow row{p, {}};
        row.measures.push_back(
            robustness_measure("rom", ms::rom_state(rho, ms::stabilizer_dictionary(n)).solution));
        return row;
      };
      return emit_rows(ms::evaluate_rows(points_for(o), jobs_of(o), row_at), o);
    }

    if (cmds["channel-robustness"]->parsed()) {
      const CommonOptions& o = opts["channel-robustness"];
      const ms::CspoAtoms atoms = ms::cspo_choi_atoms(ms::stabilizer_dictionary(2));
      const auto row_at = [&](double p) {
        ms::SweepRow row{p, {}};
        row.measures.push_back(robustness_measure(
            "channel_robustness", ms::channel_robustness(qubit_channel(qubit_channel_name, p), atoms)));
        return row;
      };
      return emit_rows(ms::evaluate_rows(points_for(o), jobs_of(o), row_at), o);
    }

    if (cmds["mana"]->parsed()) {
      const CommonOptions& o = opts["mana"];
      const ms::PhaseSpaceFrame frame = ms::build_frame(3);
      const bool channel = !mana_channel_name.empty();
      const ms::Ket psi = channel ? ms::Ket() : qutrit_state(mana_state_name.empty() ? "t" : mana_state_name);
      if (channel) qutrit_channel(mana_channel_name, 0.0);  // reject unknown names early
      const auto row_at = [&](double p) {
        const double v = channel ? ms::mana_channel(qutrit_channel(mana_channel_name, p), frame)
                                 : ms::mana_state(noisy(psi, p), frame);
        ms::SweepRow row{p, {}};
        row.measures.push_back({"mana", ms::MeasureKind::mana, v, ms::ValueStatus::ok});
        return row;
      };
      return emit_rows(ms::evaluate_rows(points_for(o), jobs_of(o), row_at), o);
    }

    if (cmds["stabilizers"]->parsed()) {
      ms::write_output(ms::dictionary_to_json(ms::stabilizer_dictionary(stab_qubits)) + "\n",
                       stab_out);
      return 0;
    }
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitRuntime;
  }
  return 0;
}
