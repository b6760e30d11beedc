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

// Independent reference computations used as test oracles. None of these
// call into the library's implementation of the quantity being checked.

#ifndef DOLPHIN_TESTS_ORACLES_HPP_
#define DOLPHIN_TESTS_ORACLES_HPP_

#include <cmath>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace dolphin_test {

struct CrossTrackOracle {
  Eigen::Vector2d foot;
  double error;
};

// Signed distance from the 2-D cross product, foot from the dot product.
inline CrossTrackOracle cross_track_oracle(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                                           const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const double len = d.norm();
  const Eigen::Vector2d w = p - a;
  const double cross = d.x() * w.y() - d.y() * w.x();
  return {a + d * (d.dot(w) / (len * len)), cross / len};
}

// Orientation test: +1 when p lies to the left of a -> b, -1 to the right.
inline int orientation(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                       const Eigen::Vector2d& b) {
  const double cross = (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
  return (cross > 0.0) - (cross < 0.0);
}

// Closed-form response of r'' = a (a/4 (R - r) - r') from rest at r0.
inline double critically_damped(double r0, double target, double a, double t) {
  const double s = 0.5 * a;
  return target + (r0 - target) * (1.0 + s * t) * std::exp(-s * t);
}

struct SecondOrderSample {
  double t;
  double r;
};

// Fine-step classical RK4 of the same equation, written out by hand.
inline std::vector<SecondOrderSample> second_order_reference(double r0, double target, double a,
                                                             double dt, double t_end,
                                                             double sample_every) {
  auto f = [&](double r, double v, double& dr, double& dv) {
    dr = v;
    dv = a * (0.25 * a * (target - r) - v);
  };
  std::vector<SecondOrderSample> out;
  double r = r0;
  double v = 0.0;
  const long steps = std::lround(t_end / dt);
  const long every = std::max(1L, std::lround(sample_every / dt));
  out.push_back({0.0, r});
  for (long k = 1; k <= steps; ++k) {
    double k1r, k1v, k2r, k2v, k3r, k3v, k4r, k4v;
    f(r, v, k1r, k1v);
    f(r + 0.5 * dt * k1r, v + 0.5 * dt * k1v, k2r, k2v);
    f(r + 0.5 * dt * k2r, v + 0.5 * dt * k2v, k3r, k3v);
    f(r + dt * k3r, v + dt * k3v, k4r, k4v);
    r += dt / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (k % every == 0) out.push_back({static_cast<double>(k) * dt, r});
  }
  return out;
}

// Waypoints written straight from the sinusoid definition.
inline std::vector<Eigen::Vector2d> sinusoid_oracle(double amplitude, double periods,
                                                    double length, double heading, int n,
                                                    const Eigen::Vector2d& origin) {
  const Eigen::Rotation2Dd rot(heading);
  std::vector<Eigen::Vector2d> out;
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    const Eigen::Vector2d local(length * s, amplitude * std::sin(2.0 * M_PI * periods * s));
    out.push_back(origin + rot * local);
  }
  return out;
}

}  // namespace dolphin_test

#endif  // DOLPHIN_TESTS_ORACLES_HPP_
