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

// Seven-oscillator central pattern generator and the mapping functions that
// turn a heading-error command into oscillator setpoints.
//
// Each oscillator i carries a phase phi_i, an amplitude r_i and a bias chi_i:
//
//   phi_i'  = 2 pi f_i + sum_j w_ij sin(phi_j - phi_i - dphi_ij)
//   r_i''   = a_i (a_i / 4 (R_i - r_i) - r_i')
//   chi_i'' = b_i (b_i / 4 (X_i - chi_i) - chi_i')
//   theta_i = chi_i + r_i sin(phi_i)
//
// The amplitude and bias equations are critically damped second-order
// filters towards their targets R_i and X_i.

#ifndef DOLPHIN_CPG_HPP_
#define DOLPHIN_CPG_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "dolphin/angles.hpp"
#include "dolphin/vehicle.hpp"

namespace dolphin {

/// Edge of the coupling graph. At lock, phi_to - phi_from = phase_bias.
struct CouplingEdge {
  std::size_t from = 0;  // i in w_ij, 0-based
  std::size_t to = 0;    // j in w_ij, 0-based
  double weight = 0.0;   // [1/s]
  double phase_bias = 0.0;  // dphi_ij [rad]
};

/// Default chain coupling: weight on every edge [1/s] and the phase lag
/// between consecutive fluke joints [rad]. A lag well below a third of a
/// cycle keeps the fluke's own pitching in phase with the heave it inherits.
inline constexpr double kDefaultCouplingWeight = 4.0;
inline constexpr double kDefaultTailLag = kPi<double> / 6.0;

struct CpgParams {
  JointVectord frequency = JointVectord::Constant(0.6);  // [Hz]
  JointVectord gain_a = JointVectord::Constant(20.0);    // [1/s]
  JointVectord gain_b = JointVectord::Constant(20.0);    // [1/s]
  JointVectord amplitude_target = JointVectord::Zero();  // R_i [rad]
  JointVectord bias_target = JointVectord::Zero();       // X_i [rad]
  std::vector<CouplingEdge> coupling;

  /// Nearest-neighbour bidirectional chain 1-2-...-7 with `weight` on every
  /// edge, a lag of `tail_lag` between consecutive fluke joints (5, 6, 7) and
  /// no lag elsewhere.
  static CpgParams chain(double frequency_hz, double gain, double weight, double tail_lag);

  /// Throws ConfigError.
  void validate() const;
};

/// Packed state [phi, r, r', chi, chi'] with seven entries per block.
template <typename Scalar>
struct BasicCpgState {
  using Packed = Eigen::Matrix<Scalar, 5 * static_cast<int>(kNumJoints), 1>;
  Packed packed = Packed::Zero();

  auto phase() { return packed.template segment<kNumJoints>(0); }
  auto amplitude() { return packed.template segment<kNumJoints>(kNumJoints); }
  auto amplitude_rate() { return packed.template segment<kNumJoints>(2 * kNumJoints); }
  auto bias() { return packed.template segment<kNumJoints>(3 * kNumJoints); }
  auto bias_rate() { return packed.template segment<kNumJoints>(4 * kNumJoints); }
  auto phase() const { return packed.template segment<kNumJoints>(0); }
  auto amplitude() const { return packed.template segment<kNumJoints>(kNumJoints); }
  auto amplitude_rate() const { return packed.template segment<kNumJoints>(2 * kNumJoints); }
  auto bias() const { return packed.template segment<kNumJoints>(3 * kNumJoints); }
  auto bias_rate() const { return packed.template segment<kNumJoints>(4 * kNumJoints); }
};

using CpgState = BasicCpgState<double>;
using CpgPacked = CpgState::Packed;

/// Time derivative of the packed CPG state.
CpgPacked cpg_rate(const CpgPacked& state, const CpgParams& params);

inline constexpr double kMaxCpgStep = 0.05;

/// Advances the oscillator network one RK4 step. Throws ConfigError unless
/// 0 < dt <= kMaxCpgStep.
CpgState cpg_step(const CpgState& state, const CpgParams& params, double dt);

/// theta_i = chi_i + r_i sin(phi_i) for oscillator i (0-based).
inline double output_angle(const CpgState& state, std::size_t i) {
  return state.bias()[i] + state.amplitude()[i] * std::sin(state.phase()[i]);
}

/// All seven output angles.
JointVectord output_angles(const CpgState& state);

/// Time derivative of the output angles given the packed state and its rate.
JointVectord output_angle_rates(const CpgPacked& state, const CpgPacked& rate);

enum class AmplitudeMode { kMax, kControlled };

std::string_view to_string(AmplitudeMode mode);
AmplitudeMode parse_amplitude_mode(std::string_view text);

/// Fluke joints 5, 6, 7 and yaw joints 1, 3, 4 as 0-based indices.
inline constexpr std::array<std::size_t, 3> kFlukeJoints = {4, 5, 6};
inline constexpr std::array<std::size_t, 3> kYawJoints = {0, 2, 3};

struct MappingParams {
  double k = 3.8;  // tanh gradient [1/rad]
  std::array<double, 3> gaussian_width = {1.0, 1.0, 1.0};   // b_5..b_7 [rad]
  std::array<double, 3> gaussian_center = {0.0, 0.0, 0.0};  // c_5..c_7 [rad]
  std::array<double, 3> max_amplitude = {0.3490658503988659, 0.6981317007977318,
                                         1.0471975511965976};  // 20, 40, 60 deg
  std::array<double, 3> max_yaw_offset = {0.5235987755982988, 0.5235987755982988,
                                          0.5235987755982988};  // 30 deg
  AmplitudeMode amplitude_mode = AmplitudeMode::kControlled;

  void validate() const;
};

/// tanh(k e) X_i for yaw slot `slot` (0, 1, 2 -> joints 1, 3, 4).
double map_yaw_offset(double heading_error, const MappingParams& mp, std::size_t slot);

/// Gaussian amplitude attenuation for fluke slot `slot` (0, 1, 2 -> joints
/// 5, 6, 7); returns the full amplitude in max mode.
double map_amplitude(double heading_error, const MappingParams& mp, std::size_t slot);

/// Writes the yaw bias and fluke amplitude targets derived from the wrapped
/// heading error. All other targets are zeroed.
void apply_guidance(double heading_error, const MappingParams& mp, CpgParams& params);

}  // namespace dolphin

#endif  // DOLPHIN_CPG_HPP_
