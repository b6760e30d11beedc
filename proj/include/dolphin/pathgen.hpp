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

#ifndef DOLPHIN_PATHGEN_HPP_
#define DOLPHIN_PATHGEN_HPP_

#include <iosfwd>
#include <vector>

#include "dolphin/guidance.hpp"

namespace dolphin {

/// Sinusoid laid along a chord of length `length` at heading `heading`
/// starting from `origin`.
struct SinusoidSpec {
  double amplitude = 0.5;  // A [m]
  double periods = 3.0;    // N
  double length = 10.0;    // L [m]
  double heading = 0.0;    // theta [rad]
  int points = 61;         // n
  Vector2<double> origin = Vector2<double>::Zero();

  void validate() const;
};

/// Waypoint i at chord coordinate s_i = i L / (n - 1) with lateral offset
/// A sin(2 pi N i / (n - 1)), rotated by `heading` about `origin`.
std::vector<Vector2<double>> generate_waypoints(const SinusoidSpec& spec);

/// generate_waypoints wrapped in a WaypointPath.
WaypointPath generate(const SinusoidSpec& spec);

/// CSV with header `index,x_m,y_m`.
void write_waypoints_csv(std::ostream& out, std::span<const Vector2<double>> points);

}  // namespace dolphin

#endif  // DOLPHIN_PATHGEN_HPP_
