/*
 * Copyright 2026 The dolphin-los Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end.
//
//   dolphin_los run      [--config FILE] [--out DIR] [--seed N]
//   dolphin_los sweep    [--config FILE] [--out DIR] [--jobs N] [--seed N]
//   dolphin_los path     [--config FILE] [--out DIR]
//   dolphin_los validate [--config FILE] [--print]
//
// Exit status: 0 success, 1 configuration error, 2 trial divergence,
// 3 I/O error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dolphin/config.hpp"
#include "dolphin/csv.hpp"
#include "dolphin/errors.hpp"
#include "dolphin/metrics.hpp"
#include "dolphin/pathgen.hpp"
#include "dolphin/simcore.hpp"
#include "dolphin/svg_plot.hpp"
#include "dolphin/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitDivergence = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string config;
  std::string out = "out";
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  bool wall_time = false;
  bool print = false;
};

dolphin::SweepSpec load(const Options& opt) {
  dolphin::SweepSpec spec =
      opt.config.empty() ? dolphin::parse_config("", "<defaults>") : dolphin::load_config(opt.config);
  if (opt.seed) spec.base.rng_seed = *opt.seed;
  return spec;
}

int run_single(const Options& opt) {
  const dolphin::SweepSpec spec = load(opt);
  const dolphin::SimConfig& config = spec.base;
  const dolphin::TrialResult result = dolphin::run_trial(config);
  const std::filesystem::path dir = opt.out;

  std::ostringstream csv;
  dolphin::write_trial_log_csv(csv, result.log);
  dolphin::write_text_file(dir / "trajectory.csv", csv.str());

  const std::vector<dolphin::ComparisonRow> rows = {
      {config.guidance.mode, config.mapping.amplitude_mode, config.delta_multiple(), result.rmse,
       result.mae, result.completed, result.sim_time, result.wall_time,
       result.failure.value_or("")}};
  std::ostringstream metrics;
  dolphin::write_metrics_csv(metrics, rows, opt.wall_time);
  dolphin::write_text_file(dir / "metrics.csv", metrics.str());

  const std::vector<dolphin::Vector2<double>> reference = dolphin::generate_waypoints(config.path);
  const std::vector<dolphin::PlotTrace> traces = {dolphin::trace_from_log(
      std::string(dolphin::to_string(config.guidance.mode)) + " / " +
          std::string(dolphin::to_string(config.mapping.amplitude_mode)),
      result.log)};
  dolphin::emit_plot(dir / "trajectory.svg", reference, traces, "Single trial");

  dolphin::write_metrics_table(std::cout, rows);
  if (result.failure) {
    std::cerr << "error: " << *result.failure << '\n';
    return kExitDivergence;
  }
  return kExitOk;
}

int run_sweep(const Options& opt) {
  const dolphin::SweepSpec spec = load(opt);
  const dolphin::SweepResult result = dolphin::run_sweep(spec, opt.jobs);
  dolphin::SweepOutputOptions output;
  output.include_wall_time = opt.wall_time;
  dolphin::write_sweep_outputs(opt.out, result, output);
  dolphin::write_metrics_table(std::cout, result.rows);
  for (const dolphin::ComparisonRow& row : result.rows) {
    if (!row.failure.empty()) return kExitDivergence;
  }
  return kExitOk;
}

int run_path(const Options& opt) {
  const dolphin::SweepSpec spec = load(opt);
  std::ostringstream csv;
  dolphin::write_waypoints_csv(csv, dolphin::generate_waypoints(spec.base.path));
  const std::filesystem::path file = std::filesystem::path(opt.out) / "waypoints.csv";
  dolphin::write_text_file(file, csv.str());
  std::cout << "wrote " << file.string() << '\n';
  return kExitOk;
}

int run_validate(const Options& opt) {
  const dolphin::SweepSpec spec = load(opt);
  if (opt.print) {
    std::cout << dolphin::serialize_config(spec);
  } else {
    std::cout << "ok\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop path following for a CPG-driven robotic dolphin"};
  app.require_subcommand(1);
  Options opt;

  auto add_config = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config, "YAML configuration file");
  };
  auto add_out = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Output directory")->capture_default_str();
  };
  auto add_seed = [&opt](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed", [&opt](const std::uint64_t& s) { opt.seed = s; }, "Seed recorded with the run");
  };

  CLI::App* run = app.add_subcommand("run", "Run one trial with the configured modes");
  add_config(run);
  add_out(run);
  add_seed(run);
  run->add_flag("--wall-time", opt.wall_time, "Write measured wall time to metrics.csv");

  CLI::App* sweep = app.add_subcommand("sweep", "Run the look-ahead and mode grid");
  add_config(sweep);
  add_out(sweep);
  add_seed(sweep);
  sweep->add_option("--jobs", opt.jobs, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  sweep->add_flag("--wall-time", opt.wall_time, "Write measured wall time to metrics.csv");

  CLI::App* path = app.add_subcommand("path", "Write the reference waypoints");
  add_config(path);
  add_out(path);

  CLI::App* validate = app.add_subcommand("validate", "Check a configuration file");
  add_config(validate);
  add_seed(validate);
  validate->add_flag("--print", opt.print, "Print the resolved configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return run_single(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (path->parsed()) return run_path(opt);
    return run_validate(opt);
  } catch (const dolphin::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dolphin::GeometryError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dolphin::DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const dolphin::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
}
