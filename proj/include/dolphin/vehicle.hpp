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

// Planar surge/sway/yaw rigid-body model of the multi-link dolphin and the
// quasi-steady per-link propulsion surrogate that produces its generalized
// force.
//
// Frames: the earth frame is the planar north-east projection, heading psi is
// measured from north towards east. The body frame has x forward and y to
// port-of-centreline in the same handedness, with its origin on the
// centreline at the head end of the first link. All moments are taken about
// that origin.

#ifndef DOLPHIN_VEHICLE_HPP_
#define DOLPHIN_VEHICLE_HPP_

#include <array>
#include <cstddef>

#include <Eigen/Core>

namespace dolphin {

inline constexpr std::size_t kNumJoints = 7;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using JointVector = Eigen::Matrix<Scalar, static_cast<int>(kNumJoints), 1>;

using JointVectord = JointVector<double>;

/// Earth-fixed pose [x, y, psi] and body-fixed velocity [u, v, r].
template <typename Scalar>
struct BasicVehicleState {
  Vector3<Scalar> pose = Vector3<Scalar>::Zero();
  Vector3<Scalar> velocity = Vector3<Scalar>::Zero();

  Scalar x() const { return pose.x(); }
  Scalar y() const { return pose.y(); }
  Scalar psi() const { return pose.z(); }
  Scalar u() const { return velocity.x(); }
  Scalar v() const { return velocity.y(); }
  Scalar r() const { return velocity.z(); }
  Vector2<Scalar> position() const { return pose.template head<2>(); }
};

using VehicleState = BasicVehicleState<double>;

/// Surge force X, sway force Y and yaw moment N, stored as [X, Y, N].
using GeneralizedForce = Vector3<double>;

/// Rigid-body and hydrodynamic derivatives in SNAME notation. Added-mass
/// derivatives are negative by convention, linear drag derivatives must be
/// non-positive.
struct HydroParams {
  double mass = 6.0;
  double inertia_zz = 0.29;
  double xu_dot = -0.6;
  double yv_dot = -4.8;
  double nr_dot = -0.145;
  double xu = -2.0;
  double yv = -1.7;
  double nr = -0.045;
  double water_density = 1000.0;

  /// Diagonal of the mass matrix [m - Xu_dot, m - Yv_dot, Izz - Nr_dot].
  Vector3<double> mass_diagonal() const {
    return {mass - xu_dot, mass - yv_dot, inertia_zz - nr_dot};
  }
  Matrix3<double> mass_matrix() const { return mass_diagonal().asDiagonal(); }
  Matrix3<double> damping_matrix() const {
    return Vector3<double>(-xu, -yv, -nr).asDiagonal();
  }

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// J(psi): body velocity to earth-frame pose rate.
template <typename Scalar>
Matrix3<Scalar> rotation_matrix(Scalar psi) {
  using std::cos;
  using std::sin;
  const Scalar c = cos(psi);
  const Scalar s = sin(psi);
  Matrix3<Scalar> j;
  j << c, -s, Scalar(0),  //
      s, c, Scalar(0),    //
      Scalar(0), Scalar(0), Scalar(1);
  return j;
}

/// Pose rate J(psi) nu.
template <typename Scalar>
Vector3<Scalar> kinematics(const BasicVehicleState<Scalar>& state) {
  return rotation_matrix(state.psi()) * state.velocity;
}

/// Body acceleration M^-1 (tau - D nu). The Coriolis term is neglected and M
/// is diagonal, so this reduces to three divisions. `velocity` is the
/// velocity relative to the surrounding water.
template <typename Scalar>
Vector3<Scalar> dynamics_rate(const Vector3<Scalar>& velocity,
                              const Vector3<Scalar>& tau,
                              const HydroParams& hp) {
  const Vector3<Scalar> damping(Scalar(-hp.xu) * velocity.x(),
                                Scalar(-hp.yv) * velocity.y(),
                                Scalar(-hp.nr) * velocity.z());
  return (tau - damping).cwiseQuotient(hp.mass_diagonal().template cast<Scalar>());
}

/// Kinetic-energy proxy 1/2 nu^T M nu.
template <typename Scalar>
Scalar kinetic_energy(const Vector3<Scalar>& velocity, const HydroParams& hp) {
  return Scalar(0.5) *
         velocity.dot(hp.mass_diagonal().template cast<Scalar>().cwiseProduct(velocity));
}

enum class JointAxis { kYaw, kPitch };

struct Link {
  double length = 0.0;            // [m]
  double area = 0.0;              // projected area normal to the joint's swing [m^2]
  double drag_coefficient = 1.0;  // lumped force coefficient [-]
  JointAxis axis = JointAxis::kYaw;
};

/// Seven links head to tail. Joint i sits at the head end of link i; joint 1
/// coincides with the body origin. Positive yaw joint angles swing the
/// trailing links towards +y, positive pitch angles swing them downwards.
struct BodyGeometry {
  std::array<Link, kNumJoints> links;

  double total_length() const;

  /// Checks the joint-axis sequence (yaw, pitch, yaw, yaw, pitch, pitch,
  /// pitch) and positive dimensions. Throws ConfigError.
  void validate() const;

  static BodyGeometry default_dolphin();
};

inline constexpr std::array<JointAxis, kNumJoints> kJointAxes = {
    JointAxis::kYaw,   JointAxis::kPitch, JointAxis::kYaw,  JointAxis::kYaw,
    JointAxis::kPitch, JointAxis::kPitch, JointAxis::kPitch};

/// Generalized force produced by the body's joint motion.
///
/// Yaw-tagged links see the in-plane flow from the body velocity plus the
/// chain of yaw joint rates, and receive a quasi-steady resistive force
/// F = -1/2 rho Cd A |v_n| v_n normal to the link, accumulated as X, Y and the
/// moment N about the body origin. Pitch-tagged links are evaluated with the
/// same law in the vertical plane using the heave velocity from the pitch
/// joint rates; the force magnitude is projected onto surge through the link
/// inclination and is always forward (rectified), so they only contribute X.
///
/// `relative_velocity` is the body velocity relative to the water.
GeneralizedForce compute_tau(const JointVectord& joint_angles,
                             const JointVectord& joint_rates,
                             const Vector3<double>& relative_velocity,
                             const BodyGeometry& geometry, double water_density);

}  // namespace dolphin

#endif  // DOLPHIN_VEHICLE_HPP_
