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

#include "dolphin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "dolphin/csv.hpp"
#include "dolphin/errors.hpp"
#include "dolphin/pathgen.hpp"
#include "dolphin/svg_plot.hpp"

namespace dolphin {
namespace {

std::string mode_label(GuidanceMode g, AmplitudeMode a) {
  std::string label = g == GuidanceMode::kAdaptive ? "ALOS" : "LOS";
  if (a == AmplitudeMode::kControlled) label += " + amplitude control";
  return label;
}

std::string multiple_tag(double m) { return "d" + format_double(m, 6); }

}  // namespace

void SweepSpec::validate() const {
  if (delta_multiples.empty()) throw ConfigError("sweep.delta_multiples must not be empty");
  if (guidance_modes.empty()) throw ConfigError("sweep.guidance_modes must not be empty");
  if (amplitude_modes.empty()) throw ConfigError("sweep.amplitude_modes must not be empty");
  for (double m : delta_multiples) {
    if (!(std::isfinite(m) && m > 0.0)) throw ConfigError("sweep.delta_multiples must be > 0");
  }
  base.validate();
}

std::vector<SweepCell> expand(const SweepSpec& spec) {
  std::vector<SweepCell> cells;
  for (double m : spec.delta_multiples) {
    for (GuidanceMode g : spec.guidance_modes) {
      for (AmplitudeMode a : spec.amplitude_modes) {
        SweepCell cell{g, a, m, spec.base};
        cell.config.guidance.mode = g;
        cell.config.mapping.amplitude_mode = a;
        cell.config.guidance.delta = m * spec.base.body.total_length();
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

std::string cell_name(const SweepCell& cell) {
  return std::string(to_string(cell.guidance_mode)) + "_" +
         std::string(to_string(cell.amplitude_mode)) + "_" + multiple_tag(cell.delta_multiple);
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  spec.validate();
  SweepResult out;
  out.cells = expand(spec);
  out.trials.resize(out.cells.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&out, &next]() {
    for (std::size_t i = next++; i < out.cells.size(); i = next++) {
      try {
        out.trials[i] = run_trial(out.cells[i].config);
      } catch (const std::exception& e) {
        out.trials[i] = TrialResult{};
        out.trials[i].failure = e.what();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(static_cast<std::size_t>(jobs), 1, out.cells.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<ComparisonRow> rows;
  rows.reserve(out.cells.size());
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    const SweepCell& c = out.cells[i];
    const TrialResult& t = out.trials[i];
    rows.push_back({c.guidance_mode, c.amplitude_mode, c.delta_multiple, t.rmse, t.mae,
                    t.completed, t.sim_time, t.wall_time, t.failure.value_or("")});
  }
  out.rows = aggregate(std::move(rows));
  return out;
}

void write_sweep_outputs(const std::filesystem::path& dir, const SweepResult& result,
                         const SweepOutputOptions& options) {
  std::ostringstream metrics;
  write_metrics_csv(metrics, result.rows, options.include_wall_time);
  write_text_file(dir / "metrics.csv", metrics.str());

  if (options.write_trajectories) {
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
      std::ostringstream csv;
      write_trial_log_csv(csv, result.trials[i].log);
      write_text_file(dir / "trajectories" / (cell_name(result.cells[i]) + ".csv"), csv.str());
    }
  }

  if (options.write_plots) {
    std::map<double, std::vector<std::size_t>> by_multiple;
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
      by_multiple[result.cells[i].delta_multiple].push_back(i);
    }
    for (const auto& [multiple, indices] : by_multiple) {
      std::vector<PlotTrace> traces;
      for (std::size_t i : indices) {
        const SweepCell& c = result.cells[i];
        traces.push_back(trace_from_log(mode_label(c.guidance_mode, c.amplitude_mode),
                                        result.trials[i].log));
      }
      const std::vector<Vector2<double>> reference =
          generate_waypoints(result.cells[indices.front()].config.path);
      emit_plot(dir / "plots" / ("trajectory_" + multiple_tag(multiple) + ".svg"), reference,
                traces, "Look-ahead distance " + format_double(multiple, 6) + " L");
    }
  }
}

}  // namespace dolphin
