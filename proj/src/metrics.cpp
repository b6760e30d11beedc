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

#include "dolphin/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "dolphin/csv.hpp"
#include "dolphin/simcore.hpp"

namespace dolphin {

double rmse(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("rmse of an empty error series");
  double sum = 0.0;
  for (double e : samples) sum += e * e;
  return std::sqrt(sum / static_cast<double>(samples.size()));
}

double mae(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("mae of an empty error series");
  double sum = 0.0;
  for (double e : samples) sum += std::abs(e);
  return sum / static_cast<double>(samples.size());
}

std::vector<double> error_series(std::span<const LogRow> log, double warmup) {
  std::vector<double> out;
  out.reserve(log.size());
  for (const LogRow& row : log) {
    if (row.t >= warmup) out.push_back(row.cross_track);
  }
  return out;
}

std::vector<ComparisonRow> aggregate(std::vector<ComparisonRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    return std::tuple(a.guidance_mode, a.amplitude_mode, a.delta_multiple) <
           std::tuple(b.guidance_mode, b.amplitude_mode, b.delta_multiple);
  });
  return rows;
}

void write_metrics_csv(std::ostream& out, std::span<const ComparisonRow> rows,
                       bool include_wall_time) {
  out << kMetricsHeader << '\n';
  for (const ComparisonRow& r : rows) {
    out << to_string(r.guidance_mode) << ',' << to_string(r.amplitude_mode) << ','
        << format_double(r.delta_multiple) << ',' << format_double(r.rmse) << ','
        << format_double(r.mae) << ',' << (r.completed ? "true" : "false") << ','
        << format_double(r.sim_seconds) << ','
        << (include_wall_time ? format_double(r.wall_seconds, 4) : std::string("NA")) << '\n';
  }
}

void write_metrics_table(std::ostream& out, std::span<const ComparisonRow> rows) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %-11s %6s %10s %10s %9s %8s\n", "guidance",
                "amplitude", "delta", "rmse [m]", "mae [m]", "completed", "sim [s]");
  out << line;
  for (const ComparisonRow& r : rows) {
    std::snprintf(line, sizeof(line), "%-12s %-11s %5.2fL %10.4f %10.4f %9s %8.2f\n",
                  std::string(to_string(r.guidance_mode)).c_str(),
                  std::string(to_string(r.amplitude_mode)).c_str(), r.delta_multiple, r.rmse,
                  r.mae, r.completed ? "yes" : "no", r.sim_seconds);
    out << line;
    if (!r.failure.empty()) out << "    failed: " << r.failure << '\n';
  }
}

}  // namespace dolphin
