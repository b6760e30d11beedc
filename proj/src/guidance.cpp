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

#include "dolphin/guidance.hpp"

#include <string>
#include <utility>

#include <Eigen/LU>

#include "dolphin/errors.hpp"

namespace dolphin {

double path_tangential_angle(const Vector2<double>& a, const Vector2<double>& b) {
  const Vector2<double> d = b - a;
  if (d.norm() <= WaypointPath::kMinSegmentLength) {
    throw GeometryError("degenerate segment: coincident waypoints");
  }
  // atan2 returns [-pi, pi]; fold -pi onto pi.
  return wrap_angle(std::atan2(d.y(), d.x()));
}

WaypointPath::WaypointPath(std::vector<Vector2<double>> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw GeometryError("a path needs at least two waypoints");
  tangent_.reserve(points_.size() - 1);
  length_.reserve(points_.size() - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const double len = (points_[i + 1] - points_[i]).norm();
    if (!(len > kMinSegmentLength)) {
      throw GeometryError("degenerate segment " + std::to_string(i) +
                          ": consecutive waypoints coincide");
    }
    tangent_.push_back(path_tangential_angle(points_[i], points_[i + 1]));
    length_.push_back(len);
  }
}

std::string_view to_string(GuidanceMode mode) {
  return mode == GuidanceMode::kAdaptive ? "adaptive" : "traditional";
}

GuidanceMode parse_guidance_mode(std::string_view text) {
  if (text == "adaptive" || text == "alos") return GuidanceMode::kAdaptive;
  if (text == "traditional" || text == "los") return GuidanceMode::kTraditional;
  throw ConfigError("unknown guidance mode '" + std::string(text) +
                    "' (expected traditional or adaptive)");
}

void GuidanceParams::validate() const {
  if (!(std::isfinite(delta) && delta > 0.0)) {
    throw ConfigError("guidance.delta: look-ahead distance must be > 0");
  }
  if (!(std::isfinite(gamma) && gamma >= 0.0)) {
    throw ConfigError("guidance.gamma: adaptation gain must be >= 0");
  }
  if (mode == GuidanceMode::kAdaptive && !(gamma > 0.0)) {
    throw ConfigError("guidance.gamma: adaptive mode requires gamma > 0");
  }
  if (!(std::isfinite(switch_radius) && switch_radius > 0.0)) {
    throw ConfigError("guidance.switch_radius must be > 0");
  }
}

CrossTrack cross_track_solve(const Vector2<double>& p, const Vector2<double>& a,
                             const Vector2<double>& b) {
  const double pi_p = path_tangential_angle(a, b);
  const double c = std::cos(pi_p);
  const double s = std::sin(pi_p);
  const Vector2<double> d = p - a;
  const double along = c * d.x() + s * d.y();
  CrossTrack out;
  out.error = -s * d.x() + c * d.y();
  out.foot = a + along * Vector2<double>(c, s);
  return out;
}

CrossTrack cross_track_linear_solve(const Vector2<double>& p, const Vector2<double>& a,
                                    const Vector2<double>& b, double min_cos) {
  const double pi_p = path_tangential_angle(a, b);
  const double c = std::cos(pi_p);
  const double s = std::sin(pi_p);
  if (std::abs(c) < min_cos) return cross_track_solve(p, a, b);
  const double t = s / c;

  // Unknowns [x_p, y_p, y_e]: the foot shares the vehicle's along-track
  // coordinate, the vehicle's lateral coordinate is the foot's plus y_e, and
  // the foot lies on the line through the segment end point.
  Matrix3<double> lhs;
  lhs << c, s, 0.0,  //
      -s, c, 1.0,    //
      t, -1.0, 0.0;
  const Vector3<double> rhs(c * p.x() + s * p.y(), -s * p.x() + c * p.y(),
                            t * b.x() - b.y());
  const Vector3<double> sol = lhs.partialPivLu().solve(rhs);
  CrossTrack out;
  out.foot = sol.head<2>();
  out.error = sol.z();
  return out;
}

GuidanceState update_waypoint(GuidanceState state, const Vector2<double>& position,
                              const WaypointPath& path, const GuidanceParams& params) {
  const std::size_t last = path.segment_count() - 1;
  if (state.active_segment > last) state.active_segment = last;
  while (!state.path_complete) {
    const std::size_t k = state.active_segment;
    const Vector2<double>& a = path.point(k);
    const Vector2<double>& b = path.point(k + 1);
    const double pi_p = path.tangent_angle(k);
    const double along = (position - a).dot(Vector2<double>(std::cos(pi_p), std::sin(pi_p)));
    const bool reached = along > path.segment_length(k) - params.switch_radius ||
                         (b - position).norm() < params.switch_radius;
    if (!reached) break;
    if (k == last) {
      state.path_complete = true;
    } else {
      ++state.active_segment;
    }
  }
  return state;
}

double guidance_command(GuidanceState& state, const Vector2<double>& position,
                        const WaypointPath& path, const GuidanceParams& params, double dt) {
  const std::size_t k = state.active_segment;
  const double pi_p = path.tangent_angle(k);
  state.cross_track = cross_track_solve(position, path.point(k), path.point(k + 1)).error;
  if (params.mode == GuidanceMode::kAdaptive) {
    state.beta_hat =
        sideslip_update(state.beta_hat, state.cross_track, params.delta, params.gamma, dt);
    return alos_heading(pi_p, state.cross_track, state.beta_hat, params.delta);
  }
  return los_heading(pi_p, state.cross_track, params.delta);
}

}  // namespace dolphin
