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

// Experiment grid over look-ahead distance, guidance mode and amplitude mode.
// Trials run on a worker pool; every file is written afterwards from the
// calling thread so outputs do not depend on scheduling.

#ifndef DOLPHIN_SWEEP_HPP_
#define DOLPHIN_SWEEP_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "dolphin/metrics.hpp"
#include "dolphin/simcore.hpp"

namespace dolphin {

struct SweepSpec {
  std::vector<double> delta_multiples = {1.5, 1.75, 2.0};  // of the body length
  std::vector<GuidanceMode> guidance_modes = {GuidanceMode::kTraditional,
                                              GuidanceMode::kAdaptive};
  std::vector<AmplitudeMode> amplitude_modes = {AmplitudeMode::kMax,
                                                AmplitudeMode::kControlled};
  SimConfig base;

  /// Non-empty axes, positive finite multiples and a valid base config.
  /// Throws ConfigError.
  void validate() const;
};

/// One cell of the grid.
struct SweepCell {
  GuidanceMode guidance_mode = GuidanceMode::kTraditional;
  AmplitudeMode amplitude_mode = AmplitudeMode::kMax;
  double delta_multiple = 0.0;
  SimConfig config;
};

/// Cross product in (delta, guidance, amplitude) order.
std::vector<SweepCell> expand(const SweepSpec& spec);

struct SweepResult {
  std::vector<SweepCell> cells;
  std::vector<TrialResult> trials;  // parallel to `cells`
  std::vector<ComparisonRow> rows;  // aggregated and sorted
};

/// Runs every cell on up to `jobs` threads. A failing trial is recorded in
/// its row and does not stop the others.
SweepResult run_sweep(const SweepSpec& spec, int jobs);

struct SweepOutputOptions {
  bool include_wall_time = false;
  bool write_trajectories = true;
  bool write_plots = true;
};

/// Writes metrics.csv, one trajectory CSV per cell and one SVG per delta
/// multiple under `dir`. Throws IoError.
void write_sweep_outputs(const std::filesystem::path& dir, const SweepResult& result,
                         const SweepOutputOptions& options = {});

/// File stem shared by a cell's trajectory CSV, e.g. "adaptive_controlled_d1.75".
std::string cell_name(const SweepCell& cell);

}  // namespace dolphin

#endif  // DOLPHIN_SWEEP_HPP_
