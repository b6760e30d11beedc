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

#include "dolphin/cpg.hpp"

#include <string>

#include "dolphin/angles.hpp"
#include "dolphin/errors.hpp"
#include "dolphin/integrator.hpp"

namespace dolphin {

CpgParams CpgParams::chain(double frequency_hz, double gain, double weight, double tail_lag) {
  CpgParams p;
  p.frequency.setConstant(frequency_hz);
  p.gain_a.setConstant(gain);
  p.gain_b.setConstant(gain);
  for (std::size_t i = 0; i + 1 < kNumJoints; ++i) {
    // Joints 5 -> 6 -> 7 form a travelling wave towards the tail.
    if (i >= kFlukeJoints.front()) {
      p.coupling.push_back({i, i + 1, weight, -tail_lag});
      p.coupling.push_back({i + 1, i, weight, tail_lag});
    } else {
      p.coupling.push_back({i, i + 1, weight, 0.0});
      p.coupling.push_back({i + 1, i, weight, 0.0});
    }
  }
  return p;
}

void CpgParams::validate() const {
  for (std::size_t i = 0; i < kNumJoints; ++i) {
    const std::string idx = std::to_string(i);
    if (!(std::isfinite(frequency[i]) && frequency[i] >= 0.0)) {
      throw ConfigError("cpg.frequency[" + idx + "] must be >= 0");
    }
    if (!(std::isfinite(gain_a[i]) && gain_a[i] > 0.0)) {
      throw ConfigError("cpg.gain_a[" + idx + "] must be > 0");
    }
    if (!(std::isfinite(gain_b[i]) && gain_b[i] > 0.0)) {
      throw ConfigError("cpg.gain_b[" + idx + "] must be > 0");
    }
    if (!(std::isfinite(amplitude_target[i]) && amplitude_target[i] >= 0.0)) {
      throw ConfigError("cpg amplitude target " + idx + " must be >= 0");
    }
    if (!std::isfinite(bias_target[i])) throw ConfigError("cpg bias target " + idx);
  }
  for (const CouplingEdge& e : coupling) {
    if (e.from >= kNumJoints || e.to >= kNumJoints || e.from == e.to) {
      throw ConfigError("cpg.coupling: edge endpoints must be distinct oscillators 1..7");
    }
    if (!(std::isfinite(e.weight) && e.weight >= 0.0)) {
      throw ConfigError("cpg.coupling: weights must be >= 0");
    }
    for (const CouplingEdge& back : coupling) {
      if (back.from == e.to && back.to == e.from &&
          std::abs(back.phase_bias + e.phase_bias) > 1e-12) {
        throw ConfigError("cpg.coupling: phase biases on symmetric edges must be antisymmetric");
      }
    }
  }
}

CpgPacked cpg_rate(const CpgPacked& packed, const CpgParams& params) {
  CpgState s{packed};
  CpgState d;
  const auto phase = s.phase();
  d.phase() = (2.0 * kPi<double>)*params.frequency;
  for (const CouplingEdge& e : params.coupling) {
    d.phase()[e.from] += e.weight * std::sin(phase[e.to] - phase[e.from] - e.phase_bias);
  }
  d.amplitude() = s.amplitude_rate();
  d.amplitude_rate() = params.gain_a.cwiseProduct(
      (0.25 * params.gain_a).cwiseProduct(params.amplitude_target - s.amplitude()) -
      s.amplitude_rate());
  d.bias() = s.bias_rate();
  d.bias_rate() = params.gain_b.cwiseProduct(
      (0.25 * params.gain_b).cwiseProduct(params.bias_target - s.bias()) - s.bias_rate());
  return d.packed;
}

CpgState cpg_step(const CpgState& state, const CpgParams& params, double dt) {
  if (!(dt > 0.0 && dt <= kMaxCpgStep)) {
    throw ConfigError("cpg step must satisfy 0 < dt <= " + std::to_string(kMaxCpgStep));
  }
  CpgState next;
  next.packed = rk4_step(state.packed, dt,
                         [&params](const CpgPacked& x) { return cpg_rate(x, params); });
  return next;
}

JointVectord output_angles(const CpgState& state) {
  return state.bias() + state.amplitude().cwiseProduct(state.phase().array().sin().matrix());
}

JointVectord output_angle_rates(const CpgPacked& packed, const CpgPacked& rate) {
  const CpgState s{packed};
  const CpgState d{rate};
  const auto sin_phi = s.phase().array().sin();
  const auto cos_phi = s.phase().array().cos();
  return (d.bias().array() + d.amplitude().array() * sin_phi +
          s.amplitude().array() * cos_phi * d.phase().array())
      .matrix();
}

std::string_view to_string(AmplitudeMode mode) {
  return mode == AmplitudeMode::kControlled ? "controlled" : "max";
}

AmplitudeMode parse_amplitude_mode(std::string_view text) {
  if (text == "controlled") return AmplitudeMode::kControlled;
  if (text == "max") return AmplitudeMode::kMax;
  throw ConfigError("unknown amplitude mode '" + std::string(text) +
                    "' (expected max or controlled)");
}

void MappingParams::validate() const {
  if (!(std::isfinite(k) && k > 0.0)) throw ConfigError("mapping.k must be > 0");
  for (std::size_t s = 0; s < 3; ++s) {
    if (!(std::isfinite(gaussian_width[s]) && gaussian_width[s] > 0.0)) {
      throw ConfigError("mapping.gaussian_width entries must be > 0");
    }
    if (!std::isfinite(gaussian_center[s])) {
      throw ConfigError("mapping.gaussian_center entries must be finite");
    }
    if (!(std::isfinite(max_amplitude[s]) && max_amplitude[s] > 0.0)) {
      throw ConfigError("mapping.max_amplitude entries must be > 0");
    }
    if (!(std::isfinite(max_yaw_offset[s]) && max_yaw_offset[s] >= 0.0)) {
      throw ConfigError("mapping.max_yaw_offset entries must be >= 0");
    }
  }
}

double map_yaw_offset(double heading_error, const MappingParams& mp, std::size_t slot) {
  // (e^{2kx} - 1) / (e^{2kx} + 1) is tanh(kx); std::tanh does not overflow.
  return std::tanh(mp.k * heading_error) * mp.max_yaw_offset[slot];
}

double map_amplitude(double heading_error, const MappingParams& mp, std::size_t slot) {
  if (mp.amplitude_mode == AmplitudeMode::kMax) return mp.max_amplitude[slot];
  const double z = (heading_error - mp.gaussian_center[slot]) / mp.gaussian_width[slot];
  return std::exp(-0.5 * z * z) * mp.max_amplitude[slot];
}

void apply_guidance(double heading_error, const MappingParams& mp, CpgParams& params) {
  params.bias_target.setZero();
  params.amplitude_target.setZero();
  for (std::size_t s = 0; s < 3; ++s) {
    params.bias_target[kYawJoints[s]] = map_yaw_offset(heading_error, mp, s);
    params.amplitude_target[kFlukeJoints[s]] = map_amplitude(heading_error, mp, s);
  }
}

}  // namespace dolphin
