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

#ifndef DOLPHIN_METRICS_HPP_
#define DOLPHIN_METRICS_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dolphin/cpg.hpp"
#include "dolphin/guidance.hpp"

namespace dolphin {

struct LogRow;

/// Root-mean-square of the samples. Throws std::invalid_argument if empty.
double rmse(std::span<const double> samples);

/// Mean absolute value of the samples. Throws std::invalid_argument if empty.
double mae(std::span<const double> samples);

/// Cross-track errors of the logged rows at or after `warmup` seconds.
std::vector<double> error_series(std::span<const LogRow> log, double warmup = 0.0);

/// One row of the mode comparison table.
struct ComparisonRow {
  GuidanceMode guidance_mode = GuidanceMode::kTraditional;
  AmplitudeMode amplitude_mode = AmplitudeMode::kMax;
  double delta_multiple = 0.0;
  double rmse = 0.0;
  double mae = 0.0;
  bool completed = false;
  double sim_seconds = 0.0;
  double wall_seconds = 0.0;
  std::string failure;  // empty for a successful trial
};

/// Sorts rows by (guidance mode, amplitude mode, delta multiple), traditional
/// before adaptive and max before controlled.
std::vector<ComparisonRow> aggregate(std::vector<ComparisonRow> rows);

/// Metrics CSV. `include_wall_time` writes measured wall-clock seconds;
/// otherwise the column holds `NA` so the file is reproducible byte for byte.
void write_metrics_csv(std::ostream& out, std::span<const ComparisonRow> rows,
                       bool include_wall_time);

inline constexpr const char* kMetricsHeader =
    "guidance_mode,amplitude_mode,delta_multiple,rmse_m,mae_m,completed,sim_seconds,wall_seconds";

/// Aligned plain-text version of the comparison table.
void write_metrics_table(std::ostream& out, std::span<const ComparisonRow> rows);

}  // namespace dolphin

#endif  // DOLPHIN_METRICS_HPP_
