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

#include "magicswitch/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "logger.hpp"
#include "magicswitch/channels.hpp"
#include "magicswitch/models.hpp"
#include "magicswitch/qswitch.hpp"
#include "magicswitch/robustness.hpp"
#include "magicswitch/stabilizer.hpp"
#include "magicswitch/wigner.hpp"

namespace magicswitch {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kZeroProbability = 1e-12;

const CspoAtoms& qubit_channel_atoms() {
  static const CspoAtoms atoms = cspo_choi_atoms(stabilizer_dictionary(2));
  return atoms;
}

const PhaseSpaceFrame& qutrit_frame() {
  static const PhaseSpaceFrame frame = build_frame(3);
  return frame;
}

Measure from_solution(std::string name, const L1Solution& sol) {
  Measure m{std::move(name), MeasureKind::robustness, sol.value, ValueStatus::ok};
  if (sol.status == LpStatus::infeasible) {
    m.status = ValueStatus::lp_infeasible;
    m.value = kNaN;
  } else if (sol.status == LpStatus::numerical_failure) {
    m.status = ValueStatus::lp_numerical_failure;
    m.value = kNaN;
  }
  return m;
}

Measure missing(std::string name, MeasureKind kind) {
  return {std::move(name), kind, kNaN, ValueStatus::zero_probability};
}

Measure plain(std::string name, MeasureKind kind, double value) {
  return {std::move(name), kind, value, ValueStatus::ok};
}

Measure rom_of_branch(std::string name, const DensityOperator& branch, double prob) {
  if (prob <= kZeroProbability) return missing(std::move(name), MeasureKind::robustness);
  return from_solution(std::move(name), rom_state(branch, stabilizer_dictionary(1)).solution);
}

Measure mana_of_branch(std::string name, const DensityOperator& branch, double prob) {
  if (prob <= kZeroProbability) return missing(std::move(name), MeasureKind::mana);
  return plain(std::move(name), MeasureKind::mana, mana_state(branch, qutrit_frame()));
}

std::vector<SweepRow> checked_sweep(const SweepConfig& config, SweepRow (*row_at)(double)) {
  config.validate();
  std::vector<SweepRow> rows = evaluate_rows(config.grid.points(), config.jobs, row_at);
  for (SweepRow& row : rows) {
    for (const std::string& problem : row_violations(row, config.tolerances)) {
      detail::logger().warn("{} p = {:.6g}: {}", to_string(config.experiment), row.p, problem);
    }
  }
  return rows;
}

double parse_double(std::string_view text, std::string_view what) {
  std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument(fmt::format("{}: cannot parse '{}' as a number", what, text));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.12g}", v);
}

std::string json_double(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.12g}", v);
}

}  // namespace

std::vector<SweepRow> evaluate_rows(const std::vector<double>& points, std::size_t jobs,
                                    const std::function<SweepRow(double)>& row_at) {
  std::vector<SweepRow> rows(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        rows[i] = row_at(points[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t n = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, points.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

// --- enums -----------------------------------------------------------------

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::fig2_qubit_example: return "fig2";
    case Experiment::fig3_depolarized_t: return "fig3";
    case Experiment::figs1_qutrit_example: return "figs1";
    case Experiment::appendix_c_inequality: return "appendix-c";
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  if (name == "fig2" || name == "fig2_qubit_example") return Experiment::fig2_qubit_example;
  if (name == "fig3" || name == "fig3_depolarized_T" || name == "fig3_depolarized_t") {
    return Experiment::fig3_depolarized_t;
  }
  if (name == "figs1" || name == "figS1_qutrit_example" || name == "figs1_qutrit_example") {
    return Experiment::figs1_qutrit_example;
  }
  if (name == "appendix-c" || name == "appendixC_inequality" || name == "appendix_c_inequality") {
    return Experiment::appendix_c_inequality;
  }
  return std::nullopt;
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string_view to_string(ValueStatus s) {
  switch (s) {
    case ValueStatus::ok: return "ok";
    case ValueStatus::zero_probability: return "zero_probability";
    case ValueStatus::lp_infeasible: return "lp_infeasible";
    case ValueStatus::lp_numerical_failure: return "lp_numerical_failure";
    case ValueStatus::invalid: return "invalid";
  }
  return "unknown";
}

// --- grid and config -------------------------------------------------------

std::vector<double> Grid::points() const {
  std::vector<double> out;
  if (!(step > 0.0) || stop < start) return out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(std::min(stop, start + static_cast<double>(k) * step));
  }
  return out;
}

Grid parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw std::invalid_argument(fmt::format("grid '{}' is not start:stop:step", text));
  }
  return {parse_double(trim(text.substr(0, first)), "grid start"),
          parse_double(trim(text.substr(first + 1, second - first - 1)), "grid stop"),
          parse_double(trim(text.substr(second + 1)), "grid step")};
}

void SweepConfig::validate() const {
  if (!(grid.start >= 0.0 && grid.start < grid.stop && grid.stop <= 1.0)) {
    throw std::invalid_argument(fmt::format(
        "grid [{}, {}] must satisfy 0 <= start < stop <= 1", grid.start, grid.stop));
  }
  if (!(grid.step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (!(tolerances.threshold_tol >= 1e-4)) {
    throw std::invalid_argument("threshold_tol must be at least 1e-4");
  }
  if (!(tolerances.lp_tol > 0.0)) throw std::invalid_argument("lp_tol must be positive");
}

SweepConfig SweepConfig::defaults(Experiment e) {
  SweepConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::fig2_qubit_example: c.grid = {0.0, 1.0, 0.01}; break;
    case Experiment::fig3_depolarized_t: c.grid = {0.0, 0.45, 0.005}; break;
    case Experiment::figs1_qutrit_example: c.grid = {0.01, 1.0, 0.01}; break;
    case Experiment::appendix_c_inequality: c.grid = {1e-4, 1.0, 1e-4}; break;
  }
  return c;
}

SweepConfig parse_config(std::string_view text) {
  struct Entry {
    std::string key;
    std::string value;
    int line;
  };
  std::vector<Entry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<Experiment> experiment;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(fmt::format("config line {}: expected key = value", line_no));
    }
    Entry e{std::string(trim(view.substr(0, eq))), std::string(trim(view.substr(eq + 1))), line_no};
    if (e.key == "experiment") {
      experiment = parse_experiment(e.value);
      if (!experiment) {
        throw std::invalid_argument(fmt::format("config line {}: unknown experiment '{}'", line_no, e.value));
      }
    }
    entries.push_back(std::move(e));
  }

  SweepConfig c = SweepConfig::defaults(experiment.value_or(Experiment::fig2_qubit_example));
  for (const Entry& e : entries) {
    const std::string what = fmt::format("config line {} ({})", e.line, e.key);
    if (e.key == "experiment") {
      continue;
    } else if (e.key == "p_start") {
      c.grid.start = parse_double(e.value, what);
    } else if (e.key == "p_stop") {
      c.grid.stop = parse_double(e.value, what);
    } else if (e.key == "p_step") {
      c.grid.step = parse_double(e.value, what);
    } else if (e.key == "lp_tol") {
      c.tolerances.lp_tol = parse_double(e.value, what);
    } else if (e.key == "threshold_tol") {
      c.tolerances.threshold_tol = parse_double(e.value, what);
    } else if (e.key == "output_path") {
      c.output_path = e.value;
    } else if (e.key == "format") {
      const auto f = parse_output_format(e.value);
      if (!f) throw std::invalid_argument(fmt::format("{}: unknown format '{}'", what, e.value));
      c.format = *f;
    } else if (e.key == "jobs") {
      const double j = parse_double(e.value, what);
      if (!(j >= 1.0) || j != std::floor(j)) {
        throw std::invalid_argument(fmt::format("{}: jobs must be a positive integer", what));
      }
      c.jobs = static_cast<std::size_t>(j);
    } else {
      throw std::invalid_argument(fmt::format("config line {}: unknown key '{}'", e.line, e.key));
    }
  }
  c.validate();
  return c;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open config file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::size_t resolve_jobs(std::size_t requested) {
  if (const char* env = std::getenv("MAGIC_SWITCH_JOBS")) {
    std::size_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
    detail::logger().warn("ignoring MAGIC_SWITCH_JOBS='{}'", env);
  }
  return std::max<std::size_t>(1, requested);
}

// --- rows ------------------------------------------------------------------

const Measure& SweepRow::get(std::string_view name) const {
  for (const Measure& m : measures) {
    if (m.name == name) return m;
  }
  throw std::out_of_range(fmt::format("SweepRow: no measure '{}'", name));
}

SweepRow fig2_row(double p) {
  const KrausChannel channel = models::noisy_th_channel(p);
  const ConditionalOutputs out =
      conditional_outputs(build_switch(channel, channel), models::plus_state(2));
  SweepRow row{p, {}};
  row.measures.push_back(
      from_solution("channel_robustness", channel_robustness(channel, qubit_channel_atoms())));
  row.measures.push_back(rom_of_branch("rom_plus", out.rho_plus, out.prob_plus));
  row.measures.push_back(rom_of_branch("rom_minus", out.rho_minus, out.prob_minus));
  row.measures.push_back(plain("prob_plus", MeasureKind::probability, out.prob_plus));
  row.measures.push_back(plain("prob_minus", MeasureKind::probability, out.prob_minus));
  return row;
}

SweepRow fig3_row(double p) {
  const EffectiveTChannels eff = effective_t_channels(p);
  const EffectiveDepolarizingSwitch sw = effective_depolarizing_switch(2, p);
  SweepRow row{p, {}};
  row.measures.push_back(from_solution(
      "robustness_sequential",
      channel_robustness(models::sequential_depolarized_t(p), qubit_channel_atoms())));
  row.measures.push_back(from_solution("robustness_switch_plus",
                                       channel_robustness(eff.plus.channel, qubit_channel_atoms())));
  row.measures.push_back(from_solution(
      "robustness_switch_minus", channel_robustness(eff.minus.channel, qubit_channel_atoms())));
  row.measures.push_back(plain("weight_plus", MeasureKind::probability, sw.weight_plus));
  row.measures.push_back(plain("weight_minus", MeasureKind::probability, sw.weight_minus));
  row.measures.push_back(plain("p_plus", MeasureKind::parameter, sw.p_plus));
  return row;
}

SweepRow figs1_row(double p) {
  const models::QutritKrausResolution kraus = models::resolve_qutrit_th_channel(p);
  const ConditionalOutputs out =
      conditional_outputs(build_switch(kraus.channel, kraus.channel), models::plus_state(3));
  SweepRow row{p, {}};
  row.measures.push_back(
      plain("mana_channel", MeasureKind::mana, mana_channel(kraus.channel, qutrit_frame())));
  row.measures.push_back(mana_of_branch("mana_plus", out.rho_plus, out.prob_plus));
  row.measures.push_back(mana_of_branch("mana_minus", out.rho_minus, out.prob_minus));
  row.measures.push_back(plain("prob_plus", MeasureKind::probability, out.prob_plus));
  row.measures.push_back(plain("prob_minus", MeasureKind::probability, out.prob_minus));
  return row;
}

std::vector<SweepRow> run_fig2(const SweepConfig& config) { return checked_sweep(config, &fig2_row); }
std::vector<SweepRow> run_fig3(const SweepConfig& config) { return checked_sweep(config, &fig3_row); }

std::vector<SweepRow> run_figs1(const SweepConfig& config) {
  const models::QutritKrausResolution kraus = models::resolve_qutrit_th_channel(config.grid.stop);
  detail::logger().info(
      "figs1: qutrit Kraus set '{}' (original set completeness error {:.3e}, corrected {:.3e})",
      models::to_string(kraus.used), kraus.original_completeness_error,
      kraus.corrected_completeness_error);
  return checked_sweep(config, &figs1_row);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  switch (config.experiment) {
    case Experiment::fig2_qubit_example: return run_fig2(config);
    case Experiment::fig3_depolarized_t: return run_fig3(config);
    case Experiment::figs1_qutrit_example: return run_figs1(config);
    case Experiment::appendix_c_inequality: break;
  }
  throw std::invalid_argument("run_sweep: appendix-c produces a report, use run_appendix_c");
}

std::vector<std::string> row_violations(const SweepRow& row, const SweepTolerances& tol) {
  std::vector<std::string> problems;
  for (const Measure& m : row.measures) {
    if (m.status != ValueStatus::ok) continue;
    if (!std::isfinite(m.value)) {
      problems.push_back(fmt::format("{} is not finite", m.name));
      continue;
    }
    switch (m.kind) {
      case MeasureKind::robustness:
        if (m.value < 1.0 - tol.lp_tol) {
          problems.push_back(fmt::format("{} = {:.12g} below 1", m.name, m.value));
        }
        break;
      case MeasureKind::mana:
        if (m.value < -kManaZeroTol) {
          problems.push_back(fmt::format("{} = {:.12g} below 0", m.name, m.value));
        }
        break;
      case MeasureKind::probability:
        if (m.value < -1e-12 || m.value > 1.0 + 1e-12) {
          problems.push_back(fmt::format("{} = {:.12g} outside [0, 1]", m.name, m.value));
        }
        break;
      case MeasureKind::parameter: break;
    }
  }
  for (const char* prefix : {"prob", "weight"}) {
    const std::string plus = std::string(prefix) + "_plus";
    const std::string minus = std::string(prefix) + "_minus";
    const auto has = [&](const std::string& n) {
      return std::any_of(row.measures.begin(), row.measures.end(),
                         [&](const Measure& m) { return m.name == n; });
    };
    if (has(plus) && has(minus)) {
      const double total = row.value(plus) + row.value(minus);
      if (std::abs(total - 1.0) > 1e-9) {
        problems.push_back(fmt::format("{} + {} = {:.12g}", plus, minus, total));
      }
    }
  }
  return problems;
}

// --- thresholds ------------------------------------------------------------

ThresholdResult find_threshold(const std::function<double(double)>& f, double floor, double tol,
                               double lo, double hi, double threshold_tol) {
  ThresholdResult r;
  r.lo = lo;
  r.hi = hi;
  const auto free_at = [&](double p, bool& ok) {
    const double v = f(p);
    ++r.evaluations;
    ok = !std::isnan(v);
    return v <= floor + tol;
  };
  bool ok_lo = true;
  bool ok_hi = true;
  const bool pred_lo = free_at(lo, ok_lo);
  const bool pred_hi = free_at(hi, ok_hi);
  if (!ok_lo || !ok_hi) {
    r.message = "measure undefined at a bracket endpoint";
    return r;
  }
  if (pred_lo == pred_hi) {
    r.message = fmt::format("no crossing on [{}, {}]: measure is {} at both ends", lo, hi,
                            pred_lo ? "free" : "above its floor");
    return r;
  }
  r.free_above = pred_hi;
  while (r.hi - r.lo > threshold_tol) {
    const double mid = 0.5 * (r.lo + r.hi);
    bool ok = true;
    const bool pred_mid = free_at(mid, ok);
    if (!ok) {
      r.message = fmt::format("measure undefined at p = {}", mid);
      return r;
    }
    if (pred_mid == pred_lo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  r.found = true;
  r.threshold = 0.5 * (r.lo + r.hi);
  r.message = "ok";
  return r;
}

ThresholdResult find_threshold(std::string_view measure, const SweepConfig& config) {
  config.validate();
  SweepRow (*row_at)(double) = nullptr;
  switch (config.experiment) {
    case Experiment::fig2_qubit_example: row_at = &fig2_row; break;
    case Experiment::fig3_depolarized_t: row_at = &fig3_row; break;
    case Experiment::figs1_qutrit_example: row_at = &figs1_row; break;
    case Experiment::appendix_c_inequality:
      throw std::invalid_argument("find_threshold: appendix-c has no threshold measures");
  }
  const SweepRow probe = row_at(config.grid.stop);
  const Measure& m = probe.get(measure);  // throws for unknown names
  double floor = 0.0;
  double tol = 0.0;
  if (m.kind == MeasureKind::robustness) {
    floor = 1.0;
    tol = config.tolerances.lp_tol;
  } else if (m.kind == MeasureKind::mana) {
    floor = 0.0;
    tol = kManaZeroTol;
  } else {
    throw std::invalid_argument(fmt::format("find_threshold: '{}' is not a magic measure", measure));
  }
  const std::string name(measure);
  const auto f = [&](double p) {
    const Measure& v = row_at(p).get(name);
    return v.status == ValueStatus::ok ? v.value : kNaN;
  };
  ThresholdResult r = find_threshold(f, floor, tol, config.grid.start, config.grid.stop,
                                     config.tolerances.threshold_tol);
  detail::logger().info("threshold {}: {} [{:.6g}, {:.6g}] after {} evaluations", measure,
                        r.message, r.lo, r.hi, r.evaluations);
  return r;
}

// --- switched-parameter bound ---------------------------------------------

AppendixCReport run_appendix_c(const std::vector<std::size_t>& dims, const Grid& grid) {
  AppendixCReport report;
  report.inequality_holds = true;
  report.identity_holds = true;
  const std::vector<double> points = grid.points();
  for (std::size_t d : dims) {
    AppendixCRow row;
    row.d = d;
    row.points = points.size();
    row.max_difference = -std::numeric_limits<double>::infinity();
    const double d2 = static_cast<double>(d) * static_cast<double>(d);
    for (double p : points) {
      const EffectiveDepolarizingSwitch e = effective_depolarizing_switch(d, p);
      const double sequential = 2.0 * p - p * p;
      const double diff = e.p_plus - sequential;
      if (diff > row.max_difference) {
        row.max_difference = diff;
        row.argmax_p = p;
      }
      const double lhs = (2.0 * d2 - (d2 - 1.0) * p * p) * (sequential - e.p_plus);
      const double rhs = p * p * (d2 - (d2 - 1.0) * p * (2.0 - p));
      row.max_identity_error = std::max(row.max_identity_error, std::abs(lhs - rhs));
    }
    report.inequality_holds = report.inequality_holds && row.max_difference < 0.0;
    report.identity_holds = report.identity_holds && row.max_identity_error <= 1e-12;
    report.rows.push_back(row);
  }
  return report;
}

// --- output ----------------------------------------------------------------

namespace {

std::string row_status(const SweepRow& row) {
  std::string s;
  for (const Measure& m : row.measures) {
    if (m.status == ValueStatus::ok) continue;
    if (!s.empty()) s += ';';
    s += m.name + "=" + std::string(to_string(m.status));
  }
  return s.empty() ? "ok" : s;
}

}  // namespace

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out = "p";
  if (!rows.empty()) {
    for (const Measure& m : rows.front().measures) out += "," + m.name;
  }
  out += ",status\n";
  for (const SweepRow& row : rows) {
    out += fmt_double(row.p);
    for (const Measure& m : row.measures) out += "," + fmt_double(m.value);
    out += "," + row_status(row) + "\n";
  }
  return out;
}

std::string format_json(const std::vector<SweepRow>& rows) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = rows[i];
    out += "  {\"p\": " + json_double(row.p);
    for (const Measure& m : row.measures) out += ", \"" + m.name + "\": " + json_double(m.value);
    out += ", \"status\": {";
    for (std::size_t k = 0; k < row.measures.size(); ++k) {
      if (k) out += ", ";
      out += "\"" + row.measures[k].name + "\": \"" + std::string(to_string(row.measures[k].status)) + "\"";
    }
    out += "}}";
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string format_rows(const std::vector<SweepRow>& rows, OutputFormat format) {
  return format == OutputFormat::csv ? format_csv(rows) : format_json(rows);
}

std::string format_appendix_c(const AppendixCReport& report, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "d,points,max_difference,argmax_p,max_identity_error\n";
    for (const AppendixCRow& r : report.rows) {
      out += fmt::format("{},{},{},{},{}\n", r.d, r.points, fmt_double(r.max_difference),
                         fmt_double(r.argmax_p), fmt_double(r.max_identity_error));
    }
    return out;
  }
  std::string out = fmt::format("{{\"inequality_holds\": {}, \"identity_holds\": {}, \"rows\": [",
                                report.inequality_holds, report.identity_holds);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const AppendixCRow& r = report.rows[i];
    out += fmt::format(
        "{}{{\"d\": {}, \"points\": {}, \"max_difference\": {}, \"argmax_p\": {}, "
        "\"max_identity_error\": {}}}",
        i ? ", " : "", r.d, r.points, json_double(r.max_difference), json_double(r.argmax_p),
        json_double(r.max_identity_error));
  }
  out += "]}\n";
  return out;
}

std::string format_threshold(std::string_view measure, const ThresholdResult& r,
                             OutputFormat format) {
  if (format == OutputFormat::csv) {
    return fmt::format("measure,found,threshold,lo,hi,free_above,evaluations,message\n"
                       "{},{},{},{},{},{},{},\"{}\"\n",
                       measure, r.found, fmt_double(r.threshold), fmt_double(r.lo),
                       fmt_double(r.hi), r.free_above, r.evaluations, r.message);
  }
  return fmt::format(
      "{{\"measure\": \"{}\", \"found\": {}, \"threshold\": {}, \"lo\": {}, \"hi\": {}, "
      "\"free_above\": {}, \"evaluations\": {}, \"message\": \"{}\"}}\n",
      measure, r.found, json_double(r.threshold), json_double(r.lo), json_double(r.hi),
      r.free_above, r.evaluations, r.message);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out << text;
}

}  // namespace magicswitch
