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

#include <gtest/gtest.h>

#include "dolphin/angles.hpp"
#include "dolphin/cpg.hpp"
#include "dolphin/errors.hpp"
#include "dolphin/integrator.hpp"
#include "dolphin/simcore.hpp"
#include "properties.hpp"

namespace dolphin {
namespace {

TEST(RotationMatrix, ZeroIsIdentity) {
  EXPECT_EQ(rotation_matrix(0.0), Matrix3<double>::Identity());
}

TEST(RotationMatrix, QuarterTurn) {
  Matrix3<double> expected;
  expected << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  EXPECT_TRUE(rotation_matrix(kPi<double> / 2).isApprox(expected, 1e-15));
}

TEST(RotationMatrix, OrthonormalForRandomHeadings) {
  const auto rep = dolphin_test::rotation_orthonormality(dolphin_test::kPropertyCases);
  EXPECT_TRUE(rep.ok()) << rep.failures << " failures, worst " << rep.worst;
}

TEST(Kinematics, ZeroVelocityGivesZeroRate) {
  VehicleState s;
  s.pose << 1.0, 2.0, 0.3;
  EXPECT_EQ(kinematics(s), Vector3<double>::Zero());
}

TEST(Kinematics, SurgeAlongHeading) {
  VehicleState s;
  s.velocity << 1.0, 0.0, 0.0;
  EXPECT_TRUE(kinematics(s).isApprox(Vector3<double>(1, 0, 0)));
  s.pose.z() = kPi<double> / 2;
  EXPECT_NEAR(kinematics(s).x(), 0.0, 1e-15);
  EXPECT_NEAR(kinematics(s).y(), 1.0, 1e-15);
  EXPECT_EQ(kinematics(s).z(), 0.0);
}

TEST(Dynamics, EquilibriumAtRest) {
  const HydroParams hp;
  EXPECT_EQ(dynamics_rate(Vector3<double>::Zero().eval(), Vector3<double>::Zero().eval(), hp),
            Vector3<double>::Zero());
}

TEST(Dynamics, SteadySurgeSpeed) {
  const HydroParams hp;
  const double x_force = 0.8;
  Vector3<double> nu = Vector3<double>::Zero();
  const Vector3<double> tau(x_force, 0.0, 0.0);
  for (int k = 0; k < 20000; ++k) {
    nu = rk4_step(nu, 0.01, [&](const Vector3<double>& v) { return dynamics_rate(v, tau, hp); });
  }
  EXPECT_NEAR(nu.x(), x_force / -hp.xu, 1e-9);
  EXPECT_NEAR(dynamics_rate(Vector3<double>(x_force / -hp.xu, 0, 0), tau, hp).norm(), 0.0, 1e-15);
}

TEST(Dynamics, DragFreeSurgeIsLinearInTime) {
  HydroParams hp;
  hp.xu = 0.0;
  const double u0 = 0.3;
  const double x_force = 1.5;
  const Vector3<double> tau(x_force, 0.0, 0.0);
  Vector3<double> nu(u0, 0.0, 0.0);
  for (int k = 0; k < 500; ++k) {
    nu = rk4_step(nu, 0.01, [&](const Vector3<double>& v) { return dynamics_rate(v, tau, hp); });
  }
  EXPECT_NEAR(nu.x(), u0 + x_force * 5.0 / (hp.mass - hp.xu_dot), 1e-12);
}

TEST(Dynamics, UnforcedMotionIsDissipative) {
  const auto rep = dolphin_test::dissipativity(dolphin_test::kPropertyCases);
  EXPECT_TRUE(rep.ok()) << rep.failures << " failures, worst gain " << rep.worst;
}

TEST(HydroParams, DefaultAddedMassRatios) {
  const HydroParams hp;
  EXPECT_DOUBLE_EQ(hp.mass, 6.0);
  EXPECT_DOUBLE_EQ(hp.xu_dot, -0.1 * hp.mass);
  EXPECT_DOUBLE_EQ(hp.yv_dot, -0.8 * hp.mass);
  EXPECT_DOUBLE_EQ(hp.nr_dot, -0.5 * hp.inertia_zz);
  EXPECT_DOUBLE_EQ(hp.water_density, 1000.0);
  EXPECT_NO_THROW(hp.validate());
}

TEST(HydroParams, NonInvertibleMassIsAConfigError) {
  HydroParams hp;
  hp.xu_dot = hp.mass;
  EXPECT_THROW(hp.validate(), ConfigError);
  hp = HydroParams();
  hp.inertia_zz = 0.0;
  hp.nr_dot = 0.0;
  EXPECT_THROW(hp.validate(), ConfigError);
}

TEST(HydroParams, PositiveDampingDerivativeRejected) {
  HydroParams hp;
  hp.yv = 0.5;
  EXPECT_THROW(hp.validate(), ConfigError);
}

TEST(BodyGeometry, DefaultTotalLength) {
  const BodyGeometry g = BodyGeometry::default_dolphin();
  EXPECT_NEAR(g.total_length(), 0.758, 1e-12);
  EXPECT_NO_THROW(g.validate());
  for (std::size_t i = 0; i < kNumJoints; ++i) EXPECT_EQ(g.links[i].axis, kJointAxes[i]);
}

TEST(BodyGeometry, WrongAxisSequenceRejected) {
  BodyGeometry g = BodyGeometry::default_dolphin();
  g.links[1].axis = JointAxis::kYaw;
  EXPECT_THROW(g.validate(), ConfigError);
  g = BodyGeometry::default_dolphin();
  g.links[3].length = 0.0;
  EXPECT_THROW(g.validate(), ConfigError);
}

TEST(ComputeTau, StillWaterNoMotionGivesZero) {
  const GeneralizedForce tau = compute_tau(JointVectord::Zero(), JointVectord::Zero(),
                                           Vector3<double>::Zero(),
                                           BodyGeometry::default_dolphin(), 1000.0);
  EXPECT_EQ(tau, GeneralizedForce::Zero());
}

TEST(ComputeTau, PitchOscillationIsLaterallySymmetric) {
  const BodyGeometry g = BodyGeometry::default_dolphin();
  dolphin_test::Sampler s(11);
  for (int i = 0; i < 1000; ++i) {
    JointVectord angles = JointVectord::Zero();
    JointVectord rates = JointVectord::Zero();
    for (std::size_t j : kFlukeJoints) {
      angles[j] = s.uniform(-1.0, 1.0);
      rates[j] = s.uniform(-5.0, 5.0);
    }
    angles[1] = s.uniform(-0.3, 0.3);
    rates[1] = s.uniform(-1.0, 1.0);
    const Vector3<double> nu(s.uniform(0.0, 0.5), 0.0, 0.0);
    const GeneralizedForce tau = compute_tau(angles, rates, nu, g, 1000.0);
    ASSERT_EQ(tau.y(), 0.0);
    ASSERT_EQ(tau.z(), 0.0);
  }
}

TEST(ComputeTau, MirroredYawGivesMirroredForce) {
  const BodyGeometry g = BodyGeometry::default_dolphin();
  dolphin_test::Sampler s(12);
  for (int i = 0; i < 1000; ++i) {
    JointVectord angles, rates;
    for (int j = 0; j < 7; ++j) {
      angles[j] = s.uniform(-0.8, 0.8);
      rates[j] = s.uniform(-3.0, 3.0);
    }
    const Vector3<double> nu(s.uniform(-0.5, 0.5), s.uniform(-0.2, 0.2), s.uniform(-0.5, 0.5));
    JointVectord ma = angles, mr = rates;
    for (std::size_t j : kYawJoints) {
      ma[j] = -angles[j];
      mr[j] = -rates[j];
    }
    const GeneralizedForce a = compute_tau(angles, rates, nu, g, 1000.0);
    const GeneralizedForce b =
        compute_tau(ma, mr, Vector3<double>(nu.x(), -nu.y(), -nu.z()), g, 1000.0);
    ASSERT_NEAR(a.x(), b.x(), 1e-12);
    ASSERT_NEAR(a.y(), -b.y(), 1e-12);
    ASSERT_NEAR(a.z(), -b.z(), 1e-12);
  }
}

TEST(ComputeTau, ContinuousInJointRates) {
  const BodyGeometry g = BodyGeometry::default_dolphin();
  dolphin_test::Sampler s(13);
  for (int i = 0; i < 1000; ++i) {
    JointVectord angles, rates;
    for (int j = 0; j < 7; ++j) {
      angles[j] = s.uniform(-1.0, 1.0);
      rates[j] = s.uniform(-3.0, 3.0);
    }
    const Vector3<double> nu(s.uniform(-0.5, 0.5), s.uniform(-0.2, 0.2), s.uniform(-0.5, 0.5));
    const GeneralizedForce base = compute_tau(angles, rates, nu, g, 1000.0);
    ASSERT_EQ(base, compute_tau(angles, rates, nu, g, 1000.0));
    for (int j = 0; j < 7; ++j) {
      JointVectord bumped = rates;
      bumped[j] += 1e-8;
      const GeneralizedForce moved = compute_tau(angles, bumped, nu, g, 1000.0);
      ASSERT_LT((moved - base).cwiseAbs().maxCoeff(), 1e-4);
    }
  }
}

TEST(ComputeTau, PositiveYawOffsetTurnsTowardsPositiveYaw) {
  // A body swimming forward with its tail bent towards +y gets a positive
  // yaw moment.
  JointVectord angles = JointVectord::Zero();
  angles[3] = 0.3;
  const GeneralizedForce tau = compute_tau(angles, JointVectord::Zero(),
                                           Vector3<double>(0.25, 0.0, 0.0),
                                           BodyGeometry::default_dolphin(), 1000.0);
  EXPECT_GT(tau.z(), 0.0);
}

// Mean surge force over one gait period with the oscillators settled on
// their targets.
double mean_thrust(double fluke_amplitude) {
  CpgParams params = SimConfig().cpg;
  params.amplitude_target[4] = deg_to_rad(20.0);
  params.amplitude_target[5] = deg_to_rad(40.0);
  params.amplitude_target[6] = fluke_amplitude;
  CpgState state;
  state.amplitude() = params.amplitude_target;
  const double dt = 0.001;
  for (int k = 0; k < 10000; ++k) state = cpg_step(state, params, dt);
  const BodyGeometry g = BodyGeometry::default_dolphin();
  const long steps = std::lround(1.0 / 0.6 / dt);
  double sum = 0.0;
  for (long k = 0; k < steps; ++k) {
    const JointVectord rates = output_angle_rates(state.packed, cpg_rate(state.packed, params));
    sum += compute_tau(output_angles(state), rates, Vector3<double>::Zero(), g, 1000.0).x();
    state = cpg_step(state, params, dt);
  }
  return sum / static_cast<double>(steps);
}

TEST(ComputeTau, MeanThrustIncreasesWithFlukeAmplitude) {
  double previous = mean_thrust(deg_to_rad(10.0));
  EXPECT_GT(previous, 0.0);
  for (double deg = 20.0; deg <= 60.0; deg += 10.0) {
    const double current = mean_thrust(deg_to_rad(deg));
    EXPECT_GT(current, previous) << "at " << deg << " deg";
    previous = current;
  }
}

}  // namespace
}  // namespace dolphin
