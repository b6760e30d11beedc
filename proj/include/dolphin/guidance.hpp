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

// Waypoint geometry and line-of-sight heading laws (traditional and adaptive).

#ifndef DOLPHIN_GUIDANCE_HPP_
#define DOLPHIN_GUIDANCE_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "dolphin/angles.hpp"
#include "dolphin/vehicle.hpp"

namespace dolphin {

/// Angle of the segment a -> b. Throws GeometryError for coincident points.
double path_tangential_angle(const Vector2<double>& a, const Vector2<double>& b);

/// Ordered waypoints with cached per-segment tangent angle and length.
class WaypointPath {
 public:
  /// Throws GeometryError if fewer than two points or any segment shorter
  /// than kMinSegmentLength.
  explicit WaypointPath(std::vector<Vector2<double>> points);

  static constexpr double kMinSegmentLength = 1e-9;

  std::size_t size() const { return points_.size(); }
  std::size_t segment_count() const { return points_.size() - 1; }
  std::span<const Vector2<double>> points() const { return points_; }
  const Vector2<double>& point(std::size_t i) const { return points_[i]; }
  double tangent_angle(std::size_t segment) const { return tangent_[segment]; }
  double segment_length(std::size_t segment) const { return length_[segment]; }

 private:
  std::vector<Vector2<double>> points_;
  std::vector<double> tangent_;
  std::vector<double> length_;
};

enum class GuidanceMode { kTraditional, kAdaptive };

std::string_view to_string(GuidanceMode mode);
GuidanceMode parse_guidance_mode(std::string_view text);

struct GuidanceParams {
  double delta = 1.75 * 0.758;  // look-ahead distance [m]
  double gamma = 0.2;            // sideslip adaptation gain [1/s]
  GuidanceMode mode = GuidanceMode::kAdaptive;
  double switch_radius = 0.35;  // waypoint acceptance distance [m]

  void validate() const;
};

struct GuidanceState {
  std::size_t active_segment = 0;
  double beta_hat = 0.0;
  double cross_track = 0.0;
  bool path_complete = false;
};

/// Origin of the path-tangential frame (foot point on the segment line) and
/// the signed cross-track error, positive to the left of the segment.
struct CrossTrack {
  Vector2<double> foot = Vector2<double>::Zero();
  double error = 0.0;
};

/// Closed-form rotation into the path-tangential frame of segment a -> b.
CrossTrack cross_track_solve(const Vector2<double>& p, const Vector2<double>& a,
                             const Vector2<double>& b);

/// Same quantity obtained by solving the 3x3 linear system that maps the NED
/// position into the path-tangential frame. The system contains tan(pi_p)
/// and is singular for vertical segments; when |cos(pi_p)| falls below
/// `min_cos` the closed form is returned instead.
CrossTrack cross_track_linear_solve(const Vector2<double>& p, const Vector2<double>& a,
                                    const Vector2<double>& b, double min_cos = 1e-6);

/// chi_d = pi_p - atan(y_e / delta), wrapped.
template <typename Scalar>
Scalar los_heading(Scalar path_angle, Scalar cross_track, Scalar delta) {
  using std::atan;
  return wrap_angle(path_angle - atan(cross_track / delta));
}

/// chi_d = pi_p - beta_hat - atan(y_e / delta), wrapped.
template <typename Scalar>
Scalar alos_heading(Scalar path_angle, Scalar cross_track, Scalar beta_hat, Scalar delta) {
  using std::atan;
  return wrap_angle(path_angle - beta_hat - atan(cross_track / delta));
}

/// Right-hand side of the sideslip estimator,
/// gamma * delta / sqrt(delta^2 + y_e^2) * y_e.
template <typename Scalar>
Scalar sideslip_rate(Scalar cross_track, Scalar delta, Scalar gamma) {
  using std::hypot;
  return gamma * delta / hypot(delta, cross_track) * cross_track;
}

/// One explicit-Euler step of the sideslip estimator.
template <typename Scalar>
Scalar sideslip_update(Scalar beta_hat, Scalar cross_track, Scalar delta, Scalar gamma,
                       Scalar dt) {
  return beta_hat + dt * sideslip_rate(cross_track, delta, gamma);
}

/// Advances the active segment while the vehicle is past
/// (segment length - switch_radius) along-track or within switch_radius of
/// the segment's end point. Never retreats. On the final segment the index is
/// clamped and `path_complete` is raised instead.
GuidanceState update_waypoint(GuidanceState state, const Vector2<double>& position,
                              const WaypointPath& path, const GuidanceParams& params);

/// Heading command for the active segment given the current position.
/// Updates `state.cross_track` and, in adaptive mode, integrates `beta_hat`
/// over `dt` before forming the command.
double guidance_command(GuidanceState& state, const Vector2<double>& position,
                        const WaypointPath& path, const GuidanceParams& params, double dt);

}  // namespace dolphin

#endif  // DOLPHIN_GUIDANCE_HPP_
