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

#include "dolphin/pathgen.hpp"

#include <cmath>
#include <ostream>

#include "dolphin/csv.hpp"
#include "dolphin/errors.hpp"

namespace dolphin {

void SinusoidSpec::validate() const {
  if (!(std::isfinite(length) && length > 0.0)) throw ConfigError("path.length must be > 0");
  if (!(std::isfinite(amplitude) && amplitude >= 0.0)) {
    throw ConfigError("path.amplitude must be >= 0");
  }
  if (points < 2) throw ConfigError("path.points must be >= 2");
  if (!std::isfinite(periods)) throw ConfigError("path.periods must be finite");
  if (!std::isfinite(heading)) throw ConfigError("path.heading must be finite");
  if (!origin.allFinite()) throw ConfigError("path.origin must be finite");
}

std::vector<Vector2<double>> generate_waypoints(const SinusoidSpec& spec) {
  spec.validate();
  const double c = std::cos(spec.heading);
  const double s = std::sin(spec.heading);
  const double last = static_cast<double>(spec.points - 1);
  std::vector<Vector2<double>> out;
  out.reserve(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i) {
    const double along = spec.length * i / last;
    const double lateral = spec.amplitude * std::sin(2.0 * kPi<double> * spec.periods * i / last);
    out.emplace_back(along * c - lateral * s + spec.origin.x(),
                     along * s + lateral * c + spec.origin.y());
  }
  return out;
}

WaypointPath generate(const SinusoidSpec& spec) { return WaypointPath(generate_waypoints(spec)); }

void write_waypoints_csv(std::ostream& out, std::span<const Vector2<double>> points) {
  out << "index,x_m,y_m\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << i << ',' << format_double(points[i].x()) << ',' << format_double(points[i].y())
        << '\n';
  }
}

}  // namespace dolphin
