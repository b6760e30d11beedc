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

#ifndef DOLPHIN_ANGLES_HPP_
#define DOLPHIN_ANGLES_HPP_

#include <cmath>
#include <numbers>

namespace dolphin {

template <typename Scalar>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

/// Wraps an angle into (-pi, pi].
template <typename Scalar>
Scalar wrap_angle(Scalar angle) {
  Scalar wrapped = std::remainder(angle, Scalar(2) * kPi<Scalar>);
  if (wrapped <= -kPi<Scalar>) wrapped += Scalar(2) * kPi<Scalar>;
  return wrapped;
}

/// Wrapped difference `a - b` in (-pi, pi].
template <typename Scalar>
Scalar angle_difference(Scalar a, Scalar b) {
  return wrap_angle(a - b);
}

template <typename Scalar>
constexpr Scalar deg_to_rad(Scalar degrees) {
  return degrees * kPi<Scalar> / Scalar(180);
}

template <typename Scalar>
constexpr Scalar rad_to_deg(Scalar radians) {
  return radians * Scalar(180) / kPi<Scalar>;
}

}  // namespace dolphin

#endif  // DOLPHIN_ANGLES_HPP_
