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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "magicswitch/experiments.hpp"
#include "magicswitch/logging.hpp"

namespace ms = magicswitch;

namespace {

class QuietLogs : public ::testing::Environment {
 public:
  void SetUp() override { ms::set_log_level(ms::LogLevel::error); }
};
const auto* const kQuiet = ::testing::AddGlobalTestEnvironment(new QuietLogs);

ms::SweepConfig small(ms::Experiment e, double start, double stop, double step) {
  ms::SweepConfig c = ms::SweepConfig::defaults(e);
  c.grid = {start, stop, step};
  return c;
}

TEST(Grid, PointsIncludeBothEnds) {
  const auto pts = ms::Grid{0.0, 1.0, 0.01}.points();
  ASSERT_EQ(pts.size(), 101u);
  EXPECT_DOUBLE_EQ(pts.front(), 0.0);
  EXPECT_DOUBLE_EQ(pts.back(), 1.0);
  EXPECT_EQ((ms::Grid{0.0, 0.45, 0.005}.points().size()), 91u);
  EXPECT_EQ((ms::Grid{1e-4, 1.0, 1e-4}.points().size()), 10000u);
}

TEST(Grid, Parse) {
  const ms::Grid g = ms::parse_grid("0.1:0.9:0.2");
  EXPECT_DOUBLE_EQ(g.start, 0.1);
  EXPECT_DOUBLE_EQ(g.stop, 0.9);
  EXPECT_DOUBLE_EQ(g.step, 0.2);
  EXPECT_THROW(ms::parse_grid("0.1:0.9"), std::invalid_argument);
  EXPECT_THROW(ms::parse_grid("a:b:c"), std::invalid_argument);
}

TEST(Config, DefaultsPerExperiment) {
  EXPECT_DOUBLE_EQ(ms::SweepConfig::defaults(ms::Experiment::fig3_depolarized_t).grid.stop, 0.45);
  EXPECT_DOUBLE_EQ(ms::SweepConfig::defaults(ms::Experiment::figs1_qutrit_example).grid.start, 0.01);
  EXPECT_DOUBLE_EQ(ms::SweepConfig::defaults(ms::Experiment::fig2_qubit_example).grid.step, 0.01);
}

TEST(Config, ValidationRejectsBadValues) {
  ms::SweepConfig c = ms::SweepConfig::defaults(ms::Experiment::fig2_qubit_example);
  c.grid = {0.5, 0.5, 0.1};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.grid = {0.0, 1.2, 0.1};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.grid = {0.0, 1.0, 0.0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.grid = {0.0, 1.0, 0.1};
  c.tolerances.threshold_tol = 1e-5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, ParseKeyValueText) {
  const ms::SweepConfig c = ms::parse_config(
      "# sweep settings\n"
      "experiment = fig3\n"
      "p_start = 0.1\n"
      "p_stop = 0.3   # inline comment\n"
      "p_step = 0.05\n"
      "lp_tol = 1e-7\n"
      "threshold_tol = 0.001\n"
      "output_path = out.csv\n"
      "format = json\n"
      "jobs = 3\n");
  EXPECT_EQ(c.experiment, ms::Experiment::fig3_depolarized_t);
  EXPECT_DOUBLE_EQ(c.grid.start, 0.1);
  EXPECT_DOUBLE_EQ(c.grid.stop, 0.3);
  EXPECT_DOUBLE_EQ(c.grid.step, 0.05);
  EXPECT_DOUBLE_EQ(c.tolerances.lp_tol, 1e-7);
  EXPECT_DOUBLE_EQ(c.tolerances.threshold_tol, 1e-3);
  EXPECT_EQ(c.output_path, "out.csv");
  EXPECT_EQ(c.format, ms::OutputFormat::json);
  EXPECT_EQ(c.jobs, 3u);
}

TEST(Config, ParseErrorsNameTheLine) {
  try {
    ms::parse_config("experiment = fig2\nbogus = 1\n");
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(ms::parse_config("experiment = fig9\n"), std::invalid_argument);
  EXPECT_THROW(ms::parse_config("p_step\n"), std::invalid_argument);
  EXPECT_THROW(ms::parse_config("jobs = 1.5\n"), std::invalid_argument);
  EXPECT_THROW(ms::parse_config("p_start = 0.9\np_stop = 0.1\n"), std::invalid_argument);
}

TEST(Config, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "magic_switch_config_test.txt";
  {
    std::ofstream out(path);
    out << "experiment = figs1\np_step = 0.1\n";
  }
  const ms::SweepConfig c = ms::load_config(path.string());
  EXPECT_EQ(c.experiment, ms::Experiment::figs1_qutrit_example);
  EXPECT_DOUBLE_EQ(c.grid.step, 0.1);
  std::filesystem::remove(path);
  EXPECT_THROW(ms::load_config(path.string()), std::runtime_error);
}

TEST(Config, EnvironmentOverridesJobs) {
  ::unsetenv("MAGIC_SWITCH_JOBS");
  EXPECT_EQ(ms::resolve_jobs(4), 4u);
  EXPECT_EQ(ms::resolve_jobs(0), 1u);
  ::setenv("MAGIC_SWITCH_JOBS", "2", 1);
  EXPECT_EQ(ms::resolve_jobs(4), 2u);
  ::setenv("MAGIC_SWITCH_JOBS", "zero", 1);
  EXPECT_EQ(ms::resolve_jobs(4), 4u);
  ::unsetenv("MAGIC_SWITCH_JOBS");
}

TEST(Experiments, NamesRoundTrip) {
  for (auto e : {ms::Experiment::fig2_qubit_example, ms::Experiment::fig3_depolarized_t,
                 ms::Experiment::figs1_qutrit_example, ms::Experiment::appendix_c_inequality}) {
    EXPECT_EQ(ms::parse_experiment(ms::to_string(e)), e);
  }
  EXPECT_EQ(ms::parse_experiment("figS1_qutrit_example"), ms::Experiment::figs1_qutrit_example);
  EXPECT_FALSE(ms::parse_experiment("fig4").has_value());
}

TEST(Sweep, RowsKeepGridOrderAcrossWorkers) {
  ms::SweepConfig c = small(ms::Experiment::fig2_qubit_example, 0.0, 0.2, 0.05);
  c.jobs = 3;
  const auto rows = ms::run_fig2(c);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_NEAR(rows[i].p, 0.05 * static_cast<double>(i), 1e-12);
}

TEST(Sweep, CsvIsDeterministicAcrossJobCounts) {
  ms::SweepConfig a = small(ms::Experiment::fig3_depolarized_t, 0.0, 0.3, 0.05);
  ms::SweepConfig b = a;
  a.jobs = 1;
  b.jobs = 4;
  const std::string first = ms::format_csv(ms::run_fig3(a));
  EXPECT_EQ(first, ms::format_csv(ms::run_fig3(b)));
  EXPECT_EQ(first, ms::format_csv(ms::run_fig3(a)));
  EXPECT_EQ(first.substr(0, first.find('\n')),
            "p,robustness_sequential,robustness_switch_plus,robustness_switch_minus,weight_plus,"
            "weight_minus,p_plus,status");
}

TEST(Sweep, ZeroProbabilityBranchIsMarked) {
  const ms::SweepRow row = ms::fig2_row(0.0);
  const ms::Measure& minus = row.get("rom_minus");
  EXPECT_EQ(minus.status, ms::ValueStatus::zero_probability);
  EXPECT_TRUE(std::isnan(minus.value));
  const std::string csv = ms::format_csv({row});
  EXPECT_NE(csv.find("rom_minus=zero_probability"), std::string::npos);
  EXPECT_NE(csv.find(",nan,"), std::string::npos);
  EXPECT_TRUE(ms::row_violations(row, {}).empty());
  EXPECT_THROW(row.get("nope"), std::out_of_range);
}

TEST(Sweep, JsonIsWellFormed) {
  const auto rows = ms::run_figs1(small(ms::Experiment::figs1_qutrit_example, 0.1, 0.3, 0.1));
  const auto j = nlohmann::json::parse(ms::format_json(rows));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_NEAR(j[1]["p"].get<double>(), 0.2, 1e-12);
  EXPECT_EQ(j[1]["status"]["mana_plus"], "ok");
  EXPECT_GT(j[0]["mana_channel"].get<double>(), 0.0);
  const auto fig2 = nlohmann::json::parse(ms::format_json({ms::fig2_row(0.0)}));
  EXPECT_TRUE(fig2[0]["rom_minus"].is_null());
}

TEST(Sweep, ViolationsAreDetected) {
  ms::SweepRow row{0.5, {{"rob", ms::MeasureKind::robustness, 0.9, ms::ValueStatus::ok},
                         {"mana", ms::MeasureKind::mana, -0.1, ms::ValueStatus::ok},
                         {"prob_plus", ms::MeasureKind::probability, 0.7, ms::ValueStatus::ok},
                         {"prob_minus", ms::MeasureKind::probability, 0.2, ms::ValueStatus::ok}}};
  EXPECT_EQ(ms::row_violations(row, {}).size(), 3u);
}

TEST(Threshold, GenericBisection) {
  const auto f = [](double p) { return std::max(1.0, 2.0 - 3.0 * p); };
  const ms::ThresholdResult r = ms::find_threshold(f, 1.0, 1e-9, 0.0, 1.0, 1e-6);
  ASSERT_TRUE(r.found);
  EXPECT_NEAR(r.threshold, 1.0 / 3.0, 1e-6);
  EXPECT_TRUE(r.free_above);
  EXPECT_LE(r.hi - r.lo, 1e-6);
}

TEST(Threshold, NoCrossingIsReported) {
  const auto f = [](double) { return 2.0; };
  const ms::ThresholdResult r = ms::find_threshold(f, 1.0, 1e-9, 0.0, 1.0, 1e-4);
  EXPECT_FALSE(r.found);
  EXPECT_NE(r.message.find("no crossing"), std::string::npos);
  EXPECT_EQ(r.evaluations, 2u);
}

TEST(Threshold, IndependentOfGridStep) {
  ms::SweepConfig coarse = small(ms::Experiment::fig3_depolarized_t, 0.0, 0.45, 0.05);
  ms::SweepConfig fine = coarse;
  fine.grid.step = 0.001;
  const auto a = ms::find_threshold("robustness_sequential", coarse);
  const auto b = ms::find_threshold("robustness_sequential", fine);
  ASSERT_TRUE(a.found);
  EXPECT_DOUBLE_EQ(a.threshold, b.threshold);
}

TEST(Threshold, RejectsNonMagicMeasures) {
  const ms::SweepConfig c = small(ms::Experiment::fig2_qubit_example, 0.0, 1.0, 0.01);
  EXPECT_THROW(ms::find_threshold("prob_plus", c), std::invalid_argument);
  EXPECT_THROW(ms::find_threshold("unknown", c), std::out_of_range);
}

TEST(ParameterBound, ReportAndFormats) {
  const ms::AppendixCReport r = ms::run_appendix_c({2, 3}, {0.01, 1.0, 0.01});
  EXPECT_TRUE(r.inequality_holds);
  EXPECT_TRUE(r.identity_holds);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].points, 100u);
  EXPECT_LT(r.rows[0].max_difference, 0.0);
  const auto j = nlohmann::json::parse(ms::format_appendix_c(r, ms::OutputFormat::json));
  EXPECT_TRUE(j["inequality_holds"].get<bool>());
  const std::string csv = ms::format_appendix_c(r, ms::OutputFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,points,max_difference,argmax_p,max_identity_error");
}

TEST(Output, WriteFile) {
  const auto path = std::filesystem::temp_directory_path() / "magic_switch_output_test.csv";
  ms::write_output("a,b\n1,2\n", path.string());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "a,b\n1,2\n");
  std::filesystem::remove(path);
}

}  // namespace
