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

// Randomized invariant suites shared by the unit tests and the acceptance
// runner. Each returns the number of cases checked and the number that
// failed, with the worst observed error for reporting.

#ifndef DOLPHIN_TESTS_PROPERTIES_HPP_
#define DOLPHIN_TESTS_PROPERTIES_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Geometry>

#include "dolphin/cpg.hpp"
#include "dolphin/guidance.hpp"
#include "dolphin/integrator.hpp"
#include "dolphin/metrics.hpp"
#include "dolphin/pathgen.hpp"
#include "dolphin/simcore.hpp"
#include "dolphin/vehicle.hpp"
#include "oracles.hpp"

namespace dolphin_test {

inline constexpr int kPropertyCases = 1000;

struct PropertyReport {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0.0;

  bool ok() const { return cases > 0 && failures == 0; }
  void record(bool pass, double error = 0.0) {
    ++cases;
    if (!pass) ++failures;
    worst = std::max(worst, error);
  }
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng_); }
  Eigen::Vector2d point(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

 private:
  std::mt19937_64 rng_;
};

// J(psi) orthonormal with unit determinant.
inline PropertyReport rotation_orthonormality(int cases, std::uint64_t seed = 1) {
  PropertyReport rep{"rotation orthonormality"};
  Sampler s(seed);
  for (int i = 0; i < cases; ++i) {
    const dolphin::Matrix3<double> j = dolphin::rotation_matrix(s.uniform(-20.0, 20.0));
    const double ortho = (j.transpose() * j - dolphin::Matrix3<double>::Identity()).cwiseAbs().maxCoeff();
    const double det = std::abs(j.determinant() - 1.0);
    const double err = std::max(ortho, det);
    rep.record(err < 1e-12, err);
  }
  return rep;
}

// Unforced motion never gains kinetic energy across an RK4 step.
inline PropertyReport dissipativity(int cases, std::uint64_t seed = 2) {
  PropertyReport rep{"dissipativity"};
  Sampler s(seed);
  for (int i = 0; i < cases; ++i) {
    dolphin::HydroParams hp;
    hp.mass = s.uniform(1.0, 20.0);
    hp.inertia_zz = s.uniform(0.05, 2.0);
    hp.xu_dot = -s.uniform(0.0, 5.0);
    hp.yv_dot = -s.uniform(0.0, 10.0);
    hp.nr_dot = -s.uniform(0.0, 1.0);
    hp.xu = -s.uniform(0.0, 10.0);
    hp.yv = -s.uniform(0.0, 10.0);
    hp.nr = -s.uniform(0.0, 2.0);
    dolphin::Vector3<double> nu(s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0), s.uniform(-3.0, 3.0));
    const dolphin::Vector3<double> tau = dolphin::Vector3<double>::Zero();
    bool pass = true;
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double before = dolphin::kinetic_energy(nu, hp);
      nu = dolphin::rk4_step(nu, 0.01, [&](const dolphin::Vector3<double>& v) {
        return dolphin::dynamics_rate(v, tau, hp);
      });
      const double gain = dolphin::kinetic_energy(nu, hp) - before;
      worst = std::max(worst, gain);
      pass = pass && gain <= 1e-9;
    }
    rep.record(pass, std::max(worst, 0.0));
  }
  return rep;
}

inline PropertyReport rmse_dominates_mae(int cases, std::uint64_t seed = 3) {
  PropertyReport rep{"rmse >= mae"};
  Sampler s(seed);
  for (int i = 0; i < cases; ++i) {
    std::vector<double> e(static_cast<std::size_t>(s.integer(1, 200)));
    const double scale = std::pow(10.0, s.uniform(-6.0, 3.0));
    for (double& x : e) x = scale * s.uniform(-1.0, 1.0);
    if (s.integer(0, 9) == 0) std::fill(e.begin(), e.end(), e.front());
    const double r = dolphin::rmse(e);
    const double m = dolphin::mae(e);
    const double slack = 1e-14 * r;
    rep.record(r + slack >= m, std::max(0.0, m - r));
  }
  return rep;
}

// |Xbar| <= X_i with the sign of the error, 0 < Rbar <= R_i, and the
// assembled targets respect the same bounds.
inline PropertyReport mapping_saturation(int cases, std::uint64_t seed = 4) {
  PropertyReport rep{"mapping saturation bounds"};
  Sampler s(seed);
  for (int i = 0; i < cases; ++i) {
    dolphin::MappingParams mp;
    mp.k = s.uniform(0.01, 20.0);
    for (int j = 0; j < 3; ++j) {
      mp.gaussian_width[j] = s.uniform(0.05, 3.0);
      mp.gaussian_center[j] = s.uniform(-0.5, 0.5);
      mp.max_amplitude[j] = s.uniform(0.0, 1.5);
      mp.max_yaw_offset[j] = s.uniform(0.0, 1.0);
    }
    mp.amplitude_mode =
        s.integer(0, 1) ? dolphin::AmplitudeMode::kControlled : dolphin::AmplitudeMode::kMax;
    const double e = s.uniform(-M_PI, M_PI);
    bool pass = true;
    for (std::size_t slot = 0; slot < 3; ++slot) {
      const double x = dolphin::map_yaw_offset(e, mp, slot);
      const double r = dolphin::map_amplitude(e, mp, slot);
      pass = pass && std::abs(x) <= mp.max_yaw_offset[slot];
      pass = pass && (e == 0.0 || x == 0.0 || (x > 0.0) == (e > 0.0));
      pass = pass && r >= 0.0 && r <= mp.max_amplitude[slot];
      if (mp.amplitude_mode == dolphin::AmplitudeMode::kMax) pass = pass && r == mp.max_amplitude[slot];
    }
    dolphin::CpgParams params;
    params.amplitude_target.setConstant(9.0);
    params.bias_target.setConstant(9.0);
    dolphin::apply_guidance(e, mp, params);
    for (std::size_t slot = 0; slot < 3; ++slot) {
      pass = pass && std::abs(params.bias_target[dolphin::kYawJoints[slot]]) <= mp.max_yaw_offset[slot];
      pass = pass && params.amplitude_target[dolphin::kFlukeJoints[slot]] <= mp.max_amplitude[slot];
    }
    rep.record(pass);
  }
  return rep;
}

// Rotating and translating the sinusoid parameters moves every waypoint rigidly,
// and each lateral offset from the chord is A sin(2 pi N i / (n - 1)).
inline PropertyReport pathgen_equivariance(int cases, std::uint64_t seed = 5) {
  PropertyReport rep{"pathgen SE(2) equivariance"};
  Sampler s(seed);
  for (int i = 0; i < cases; ++i) {
    dolphin::SinusoidSpec base;
    base.amplitude = s.uniform(0.0, 3.0);
    base.periods = s.uniform(0.5, 6.0);
    base.length = s.uniform(1.0, 50.0);
    base.points = s.integer(2, 200);
    base.heading = 0.0;
    base.origin.setZero();
    dolphin::SinusoidSpec moved = base;
    moved.heading = s.uniform(-M_PI, M_PI);
    moved.origin = s.point(100.0);
    const auto p0 = dolphin::generate_waypoints(base);
    const auto p1 = dolphin::generate_waypoints(moved);
    const Eigen::Rotation2Dd rot(moved.heading);
    const Eigen::Vector2d chord(std::cos(moved.heading), std::sin(moved.heading));
    const Eigen::Vector2d normal(-chord.y(), chord.x());
    double err = 0.0;
    for (std::size_t k = 0; k < p0.size(); ++k) {
      err = std::max(err, (moved.origin + rot * p0[k] - p1[k]).norm());
      const double lateral = (p1[k] - moved.origin).dot(normal);
      const double expected = moved.amplitude *
          std::sin(2.0 * M_PI * moved.periods * static_cast<double>(k) / (moved.points - 1));
      err = std::max(err, std::abs(lateral - expected));
    }
    rep.record(p0.size() == p1.size() && err < 1e-9 * (1.0 + moved.length + moved.origin.norm()),
               err);
  }
  return rep;
}

// Rigid motion of the plant: one RK4 step from a rotated and translated
// pose lands on the rotated and translated result of the original step.
inline PropertyReport plant_equivariance(int cases, std::uint64_t seed = 6) {
  PropertyReport rep{"plant SE(2) equivariance"};
  Sampler s(seed);
  dolphin::SimConfig config;
  config.current.setZero();
  const dolphin::ClosedLoop loop(config);
  for (int i = 0; i < cases; ++i) {
    dolphin::PlantVector x;
    for (int k = 0; k < dolphin::kPlantSize; ++k) x[k] = s.uniform(-0.5, 0.5);
    x.head<2>() = s.point(10.0);
    x[2] = s.uniform(-M_PI, M_PI);
    x.segment<3>(3) << s.uniform(-0.5, 0.5), s.uniform(-0.2, 0.2), s.uniform(-0.5, 0.5);
    dolphin::CpgParams targets = config.cpg;
    dolphin::apply_guidance(s.uniform(-1.0, 1.0), config.mapping, targets);

    const double angle = s.uniform(-M_PI, M_PI);
    const Eigen::Vector2d shift = s.point(10.0);
    const Eigen::Rotation2Dd rot(angle);
    dolphin::PlantVector y = x;
    y.head<2>() = rot * x.head<2>() + shift;
    y[2] = x[2] + angle;

    auto rate = [&](const dolphin::PlantVector& v) { return loop.plant_rate(v, targets); };
    const dolphin::PlantVector nx = dolphin::rk4_step(x, 0.01, rate);
    const dolphin::PlantVector ny = dolphin::rk4_step(y, 0.01, rate);
    double err = (rot * nx.head<2>() + shift - ny.head<2>()).norm();
    err = std::max(err, std::abs(nx[2] + angle - ny[2]));
    err = std::max(err, (nx.tail<dolphin::kPlantSize - 3>() - ny.tail<dolphin::kPlantSize - 3>())
                            .cwiseAbs()
                            .maxCoeff());
    rep.record(err < 1e-9, err);
  }
  return rep;
}

inline PropertyReport alos_reduces_to_los(int cases, std::uint64_t seed = 7) {
  PropertyReport rep{"ALOS equals LOS at zero sideslip"};
  Sampler s(seed);
  for (int i = 0; i < cases; ++i) {
    const double pi_p = s.uniform(-M_PI, M_PI);
    const double y_e = std::pow(10.0, s.uniform(-6.0, 3.0)) * (s.integer(0, 1) ? 1.0 : -1.0);
    const double delta = s.uniform(0.01, 10.0);
    const double a = dolphin::alos_heading(pi_p, y_e, 0.0, delta);
    const double l = dolphin::los_heading(pi_p, y_e, delta);
    rep.record(a == l, std::abs(a - l));
  }
  return rep;
}

inline std::vector<PropertyReport> all_invariant_suites(int cases = kPropertyCases) {
  return {rotation_orthonormality(cases), dissipativity(cases),      rmse_dominates_mae(cases),
          mapping_saturation(cases),      pathgen_equivariance(cases), plant_equivariance(cases),
          alos_reduces_to_los(cases)};
}

}  // namespace dolphin_test

#endif  // DOLPHIN_TESTS_PROPERTIES_HPP_
