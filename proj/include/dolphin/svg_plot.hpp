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

// Self-contained SVG trajectory plots. Data points are written in meters
// inside a group whose transform maps the world frame onto the canvas, so
// the polyline coordinates can be compared directly against the logs.

#ifndef DOLPHIN_SVG_PLOT_HPP_
#define DOLPHIN_SVG_PLOT_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dolphin/simcore.hpp"

namespace dolphin {

struct PlotTrace {
  std::string label;
  std::vector<Vector2<double>> points;  // [m]
};

/// (x, y) of every logged row.
PlotTrace trace_from_log(std::string label, const TrialLog& log);

/// Reference path as a dashed polyline plus one polyline per trace, with a
/// legend, metre-scaled axes and equal aspect.
void write_svg_plot(std::ostream& out, std::span<const Vector2<double>> reference,
                    std::span<const PlotTrace> traces, const std::string& title);

/// write_svg_plot to a file. Throws IoError.
void emit_plot(const std::filesystem::path& path, std::span<const Vector2<double>> reference,
               std::span<const PlotTrace> traces, const std::string& title);

}  // namespace dolphin

#endif  // DOLPHIN_SVG_PLOT_HPP_
