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

#include "dolphin/vehicle.hpp"

#include <cmath>
#include <string>

#include "dolphin/errors.hpp"

namespace dolphin {
namespace {

// 2-D cross product of a scalar angular rate with a planar offset.
Vector2<double> cross(double rate, const Vector2<double>& offset) {
  return {-rate * offset.y(), rate * offset.x()};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void HydroParams::validate() const {
  require(std::isfinite(mass) && mass > 0.0, "vehicle.mass must be positive");
  require(std::isfinite(inertia_zz) && inertia_zz > 0.0,
          "vehicle.inertia_zz must be positive");
  const Vector3<double> m = mass_diagonal();
  require(m.allFinite(), "vehicle: non-finite added-mass derivative");
  require(m.x() > 0.0, "vehicle.xu_dot: effective surge mass m - Xu_dot must be positive");
  require(m.y() > 0.0, "vehicle.yv_dot: effective sway mass m - Yv_dot must be positive");
  require(m.z() > 0.0, "vehicle.nr_dot: effective yaw inertia Izz - Nr_dot must be positive");
  require(std::isfinite(xu) && xu <= 0.0, "vehicle.xu must be <= 0");
  require(std::isfinite(yv) && yv <= 0.0, "vehicle.yv must be <= 0");
  require(std::isfinite(nr) && nr <= 0.0, "vehicle.nr must be <= 0");
  require(std::isfinite(water_density) && water_density > 0.0,
          "vehicle.water_density must be positive");
}

double BodyGeometry::total_length() const {
  double sum = 0.0;
  for (const Link& link : links) sum += link.length;
  return sum;
}

void BodyGeometry::validate() const {
  for (std::size_t i = 0; i < kNumJoints; ++i) {
    const Link& link = links[i];
    const std::string name = "vehicle.links[" + std::to_string(i) + "]";
    require(link.axis == kJointAxes[i], name + ": joint axis sequence must be "
                                               "yaw, pitch, yaw, yaw, pitch, pitch, pitch");
    require(std::isfinite(link.length) && link.length > 0.0, name + ": length must be positive");
    require(std::isfinite(link.area) && link.area >= 0.0, name + ": area must be >= 0");
    require(std::isfinite(link.drag_coefficient) && link.drag_coefficient >= 0.0,
            name + ": drag coefficient must be >= 0");
  }
}

BodyGeometry BodyGeometry::default_dolphin() {
  // Head, neck, two yaw trunk segments, peduncle and fluke. Lengths sum to
  // 0.758 m; areas are the projections normal to each joint's swing plane.
  // The coefficients are lumped surrogate gains calibrated for a cruise speed
  // of about 0.2 m/s rather than measured drag coefficients.
  BodyGeometry g;
  g.links = {{
      {0.200, 0.0240, 0.30, JointAxis::kYaw},
      {0.100, 0.0130, 0.33, JointAxis::kPitch},
      {0.100, 0.0120, 0.30, JointAxis::kYaw},
      {0.100, 0.0110, 0.30, JointAxis::kYaw},
      {0.090, 0.0080, 0.33, JointAxis::kPitch},
      {0.080, 0.0060, 0.33, JointAxis::kPitch},
      {0.088, 0.0220, 0.33, JointAxis::kPitch},
  }};
  return g;
}

GeneralizedForce compute_tau(const JointVectord& joint_angles,
                             const JointVectord& joint_rates,
                             const Vector3<double>& relative_velocity,
                             const BodyGeometry& geometry, double water_density) {
  GeneralizedForce tau = GeneralizedForce::Zero();
  const Vector2<double> body_linear = relative_velocity.head<2>();
  const double body_yaw_rate = relative_velocity.z();

  // In-plane chain. A positive yaw joint angle rotates the trailing links
  // clockwise about the joint, i.e. swings them towards +y.
  std::array<Vector2<double>, kNumJoints> yaw_pivot;
  std::array<double, kNumJoints> yaw_pivot_rate{};
  std::size_t yaw_count = 0;
  Vector2<double> planar_joint = Vector2<double>::Zero();
  double planar_bend = 0.0;

  // Vertical-plane chain along the body (s forward, z up).
  std::array<Vector2<double>, kNumJoints> pitch_pivot;
  std::array<double, kNumJoints> pitch_pivot_rate{};
  std::size_t pitch_count = 0;
  Vector2<double> vertical_joint = Vector2<double>::Zero();
  double inclination = 0.0;

  for (std::size_t i = 0; i < kNumJoints; ++i) {
    const Link& link = geometry.links[i];
    const double half_rho_cda = 0.5 * water_density * link.drag_coefficient * link.area;

    if (link.axis == JointAxis::kYaw) {
      planar_bend += joint_angles[i];
      yaw_pivot[yaw_count] = planar_joint;
      yaw_pivot_rate[yaw_count] = -joint_rates[i];
      ++yaw_count;
    } else {
      inclination += joint_angles[i];
      pitch_pivot[pitch_count] = vertical_joint;
      pitch_pivot_rate[pitch_count] = joint_rates[i];
      ++pitch_count;
    }

    // Planar geometry of this link: rearward unit vector and centre.
    const Vector2<double> rearward(-std::cos(planar_bend), std::sin(planar_bend));
    const Vector2<double> centre = planar_joint + 0.5 * link.length * rearward;

    if (link.axis == JointAxis::kYaw) {
      Vector2<double> velocity = body_linear + cross(body_yaw_rate, centre);
      for (std::size_t j = 0; j < yaw_count; ++j) {
        velocity += cross(yaw_pivot_rate[j], centre - yaw_pivot[j]);
      }
      const Vector2<double> normal(-rearward.y(), rearward.x());
      const double vn = velocity.dot(normal);
      const Vector2<double> force = -half_rho_cda * std::abs(vn) * vn * normal;
      tau.x() += force.x();
      tau.y() += force.y();
      tau.z() += centre.x() * force.y() - centre.y() * force.x();
    } else {
      const Vector2<double> rearward_v(-std::cos(inclination), -std::sin(inclination));
      const Vector2<double> centre_v = vertical_joint + 0.5 * link.length * rearward_v;
      Vector2<double> heave = Vector2<double>::Zero();
      for (std::size_t j = 0; j < pitch_count; ++j) {
        heave += cross(pitch_pivot_rate[j], centre_v - pitch_pivot[j]);
      }
      const Vector2<double> normal(-rearward_v.y(), rearward_v.x());
      const double wn = heave.dot(normal);
      tau.x() += half_rho_cda * wn * wn * std::abs(std::sin(inclination));
    }

    planar_joint += link.length * rearward;
    const Vector2<double> rearward_v(-std::cos(inclination), -std::sin(inclination));
    vertical_joint += link.length * rearward_v;
  }
  return tau;
}

}  // namespace dolphin
