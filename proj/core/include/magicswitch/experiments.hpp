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

#ifndef MAGICSWITCH_EXPERIMENTS_HPP_
#define MAGICSWITCH_EXPERIMENTS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magicswitch {

enum class Experiment {
  fig2_qubit_example,     // noisy T H channel under the switch, robustness LPs
  fig3_depolarized_t,     // T gate behind switched vs sequential depolarizing noise
  figs1_qutrit_example,   // qutrit channel under the switch, mana
  appendix_c_inequality,  // p_plus < 2p - p^2
};

std::string_view to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);

enum class OutputFormat { csv, json };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_output_format(std::string_view name);

// Inclusive arithmetic grid start, start + step, ..., <= stop.
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;

  std::vector<double> points() const;
};

// Parses "start:stop:step". Throws std::invalid_argument.
Grid parse_grid(std::string_view text);

struct SweepTolerances {
  double lp_tol = 1e-6;
  double threshold_tol = 1e-4;
};

struct SweepConfig {
  Experiment experiment = Experiment::fig2_qubit_example;
  Grid grid;
  SweepTolerances tolerances;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  std::size_t jobs = 1;

  // Throws std::invalid_argument if 0 <= start < stop <= 1, step > 0 or
  // threshold_tol >= 1e-4 is violated.
  void validate() const;

  // Default grids: fig2 [0, 1] / 0.01, fig3 [0, 0.45] / 0.005,
  // figs1 (0, 1] / 0.01, appendix-c (0, 1] / 1e-4.
  static SweepConfig defaults(Experiment e);
};

// Key-value text, one `key = value` per line, '#' starts a comment.
// Keys: experiment, p_start, p_stop, p_step, lp_tol, threshold_tol,
// output_path, format, jobs. Missing keys keep the experiment defaults.
SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::string& path);

// Worker count: MAGIC_SWITCH_JOBS when set to a positive integer, otherwise
// `requested`; never less than one.
std::size_t resolve_jobs(std::size_t requested);

enum class MeasureKind { robustness, mana, probability, parameter };

enum class ValueStatus { ok, zero_probability, lp_infeasible, lp_numerical_failure, invalid };

std::string_view to_string(ValueStatus s);

struct Measure {
  std::string name;
  MeasureKind kind = MeasureKind::parameter;
  double value = 0.0;  // NaN unless status is ok
  ValueStatus status = ValueStatus::ok;
};

struct SweepRow {
  double p = 0.0;
  std::vector<Measure> measures;

  // Throws std::out_of_range for unknown names.
  const Measure& get(std::string_view name) const;
  double value(std::string_view name) const { return get(name).value; }
};

// Evaluates `row_at` at each point with `jobs` worker threads. Output keeps
// the order of `points`; the first exception thrown by a worker is rethrown.
std::vector<SweepRow> evaluate_rows(const std::vector<double>& points, std::size_t jobs,
                                    const std::function<SweepRow(double)>& row_at);

// Rows are computed by `config.jobs` workers and returned in grid order.
// LP failures are recorded per value; the sweep continues.
std::vector<SweepRow> run_fig2(const SweepConfig& config);
std::vector<SweepRow> run_fig3(const SweepConfig& config);
std::vector<SweepRow> run_figs1(const SweepConfig& config);
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Single-point rows, as used by the sweeps.
SweepRow fig2_row(double p);
SweepRow fig3_row(double p);
SweepRow figs1_row(double p);

// Floors: robustness >= 1 - lp_tol, mana >= -1e-9, probabilities in [0, 1]
// with +/- pairs summing to 1 within 1e-9, every ok value finite.
std::vector<std::string> row_violations(const SweepRow& row, const SweepTolerances& tol);

// Bisection on the predicate "measure <= floor + tol" (floor 1 and tol
// lp_tol for robustness, floor 0 and tol 1e-9 for mana) over the bracket
// [grid.start, grid.stop]. Only the endpoints of the grid are used.
struct ThresholdResult {
  bool found = false;
  double threshold = 0.0;   // midpoint of the final bracket
  double lo = 0.0;
  double hi = 0.0;
  bool free_above = true;   // predicate holds on the hi side
  std::size_t evaluations = 0;
  std::string message;
};

ThresholdResult find_threshold(std::string_view measure, const SweepConfig& config);
// Generic form over an arbitrary scalar function.
ThresholdResult find_threshold(const std::function<double(double)>& f, double floor,
                               double tol, double lo, double hi, double threshold_tol);

struct AppendixCRow {
  std::size_t d = 0;
  std::size_t points = 0;
  double max_difference = 0.0;     // max_p p_plus - (2p - p^2)
  double argmax_p = 0.0;
  double max_identity_error = 0.0; // factored-identity residual
};

struct AppendixCReport {
  std::vector<AppendixCRow> rows;
  bool inequality_holds = false;   // every max_difference < 0
  bool identity_holds = false;     // every identity error <= 1e-12
};

AppendixCReport run_appendix_c(const std::vector<std::size_t>& dims, const Grid& grid);

// Output. Floats use 12 significant digits; NaN prints as "nan" (CSV) or
// null (JSON). The CSV has a header row, one row per p and a trailing
// status column ("ok" or "name=status;..."); JSON is an array of objects.
std::string format_csv(const std::vector<SweepRow>& rows);
std::string format_json(const std::vector<SweepRow>& rows);
std::string format_rows(const std::vector<SweepRow>& rows, OutputFormat format);
std::string format_appendix_c(const AppendixCReport& report, OutputFormat format);
std::string format_threshold(std::string_view measure, const ThresholdResult& r,
                             OutputFormat format);

// Writes to `path`, or stdout when empty.
void write_output(const std::string& text, const std::string& path);

}  // namespace magicswitch

#endif  // MAGICSWITCH_EXPERIMENTS_HPP_
