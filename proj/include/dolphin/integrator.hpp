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

#ifndef DOLPHIN_INTEGRATOR_HPP_
#define DOLPHIN_INTEGRATOR_HPP_

#include <utility>

namespace dolphin {

/// Classical fourth-order Runge-Kutta step for an autonomous system
/// x' = rate(x). `State` is a scalar or a fixed-size Eigen vector.
template <typename State, typename Scalar, typename RateFn>
State rk4_step(const State& x, Scalar dt, RateFn&& rate) {
  const Scalar half = dt / Scalar(2);
  const State k1 = rate(x);
  const State k2 = rate(State(x + half * k1));
  const State k3 = rate(State(x + half * k2));
  const State k4 = rate(State(x + dt * k3));
  return State(x + (dt / Scalar(6)) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4));
}

}  // namespace dolphin

#endif  // DOLPHIN_INTEGRATOR_HPP_
