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

#include "dolphin/simcore.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "dolphin/csv.hpp"
#include "dolphin/errors.hpp"
#include "dolphin/integrator.hpp"
#include "dolphin/metrics.hpp"

namespace dolphin {
namespace {

constexpr const char* kPlantFieldNames[6] = {"x", "y", "psi", "u", "v", "r"};
constexpr const char* kCpgBlockNames[5] = {"phase", "amplitude", "amplitude_rate", "bias",
                                           "bias_rate"};

// Throws DivergenceError on the first non-finite or runaway component.
// Oscillator phases are unwrapped and only need to be finite.
void check_plant(const PlantVector& x, long step) {
  for (int i = 0; i < kPlantSize; ++i) {
    const double value = x[i];
    const bool is_phase = i >= 6 && i < 6 + static_cast<int>(kNumJoints);
    const bool bad = !std::isfinite(value) || (!is_phase && std::abs(value) > kDivergenceLimit);
    if (!bad) continue;
    std::string field;
    if (i < 6) {
      field = kPlantFieldNames[i];
    } else {
      const int k = i - 6;
      field = std::string("cpg.") + kCpgBlockNames[k / kNumJoints] + "[" +
              std::to_string(k % kNumJoints + 1) + "]";
    }
    throw DivergenceError(step, field, value);
  }
}

}  // namespace

void SimConfig::validate() const {
  if (!(std::isfinite(dt) && dt > 0.0 && dt <= kMaxTimeStep)) {
    throw ConfigError("sim.dt must satisfy 0 < dt <= 0.02 s");
  }
  if (!(std::isfinite(t_max) && t_max >= 0.0)) throw ConfigError("sim.t_max must be >= 0");
  if (log_decimation < 1) throw ConfigError("sim.log_decimation must be >= 1");
  if (!(std::isfinite(metrics_warmup) && metrics_warmup >= 0.0)) {
    throw ConfigError("metrics.warmup must be >= 0");
  }
  if (!initial.pose.allFinite() || !initial.velocity.allFinite()) {
    throw ConfigError("sim.initial: pose and velocity must be finite");
  }
  if (!current.allFinite()) throw ConfigError("disturbance.current must be finite");
  hydro.validate();
  body.validate();
  guidance.validate();
  cpg.validate();
  mapping.validate();
  path.validate();
}

PlantVector pack(const VehicleState& vehicle, const CpgState& cpg) {
  PlantVector x;
  x << vehicle.pose, vehicle.velocity, cpg.packed;
  return x;
}

void unpack(const PlantVector& x, VehicleState& vehicle, CpgState& cpg) {
  vehicle.pose = x.head<3>();
  vehicle.velocity = x.segment<3>(3);
  cpg.packed = x.tail<5 * kNumJoints>();
}

ClosedLoop::ClosedLoop(SimConfig config)
    : config_((config.validate(), std::move(config))), path_(generate(config_.path)) {}

WorldState ClosedLoop::initial_world() const {
  WorldState world;
  world.vehicle = config_.initial;
  world.vehicle.pose.z() = wrap_angle(world.vehicle.pose.z());
  world.cpg_params = config_.cpg;
  update_commands(world);
  return world;
}

void ClosedLoop::update_commands(WorldState& world) const {
  const Vector2<double> position = world.vehicle.position();
  world.guidance = update_waypoint(world.guidance, position, path_, config_.guidance);
  world.chi_d = guidance_command(world.guidance, position, path_, config_.guidance, config_.dt);
  world.heading_error = angle_difference(world.chi_d, world.vehicle.psi());
  apply_guidance(world.heading_error, config_.mapping, world.cpg_params);
}

Vector3<double> ClosedLoop::relative_velocity(const Vector3<double>& pose,
                                              const Vector3<double>& velocity) const {
  Vector3<double> relative = velocity;
  if (!config_.current.isZero(0.0)) {
    const Vector3<double> current(config_.current.x(), config_.current.y(), 0.0);
    relative -= rotation_matrix(pose.z()).transpose() * current;
  }
  return relative;
}

GeneralizedForce ClosedLoop::tau_at(const PlantVector& x, const CpgPacked& cpg_dot) const {
  const CpgPacked cpg = x.tail<5 * kNumJoints>();
  const JointVectord angles = output_angles(CpgState{cpg});
  const JointVectord rates = output_angle_rates(cpg, cpg_dot);
  return compute_tau(angles, rates, relative_velocity(x.head<3>(), x.segment<3>(3)),
                     config_.body, config_.hydro.water_density);
}

PlantVector ClosedLoop::plant_rate(const PlantVector& x, const CpgParams& targets) const {
  const CpgPacked cpg_dot = cpg_rate(x.tail<5 * kNumJoints>(), targets);
  const GeneralizedForce tau = tau_at(x, cpg_dot);
  PlantVector dx;
  dx.head<3>() = rotation_matrix(x[2]) * x.segment<3>(3);
  dx.segment<3>(3) =
      dynamics_rate(relative_velocity(x.head<3>(), x.segment<3>(3)), tau, config_.hydro);
  dx.tail<5 * kNumJoints>() = cpg_dot;
  return dx;
}

GeneralizedForce ClosedLoop::force(const WorldState& world) const {
  const PlantVector x = pack(world.vehicle, world.cpg);
  return tau_at(x, cpg_rate(world.cpg.packed, world.cpg_params));
}

LogRow ClosedLoop::log_row(const WorldState& world) const {
  LogRow row;
  row.t = static_cast<double>(world.step) * config_.dt;
  row.pose = world.vehicle.pose;
  row.velocity = world.vehicle.velocity;
  row.chi_d = world.chi_d;
  row.cross_track = world.guidance.cross_track;
  row.beta_hat = world.guidance.beta_hat;
  row.segment = world.guidance.active_segment;
  row.joint_angles = output_angles(world.cpg);
  row.tau = force(world);
  return row;
}

WorldState ClosedLoop::step(const WorldState& world) const {
  const CpgParams& targets = world.cpg_params;
  const PlantVector x = pack(world.vehicle, world.cpg);
  PlantVector next = rk4_step(x, config_.dt,
                              [this, &targets](const PlantVector& s) { return plant_rate(s, targets); });
  next[2] = wrap_angle(next[2]);
  check_plant(next, world.step + 1);

  WorldState out = world;
  out.step = world.step + 1;
  unpack(next, out.vehicle, out.cpg);
  update_commands(out);
  return out;
}

TrialResult run_trial(const SimConfig& config) {
  const auto wall_start = std::chrono::steady_clock::now();
  const ClosedLoop loop(config);
  const long max_steps = std::lround(config.t_max / config.dt);
  const long decimation = config.log_decimation;

  TrialResult result;
  result.log.reserve(static_cast<std::size_t>(max_steps / decimation + 1));
  WorldState world = loop.initial_world();
  while (true) {
    if (world.step % decimation == 0) result.log.push_back(loop.log_row(world));
    if (world.guidance.path_complete) {
      result.completed = true;
      break;
    }
    if (world.step >= max_steps) break;
    try {
      world = loop.step(world);
    } catch (const DivergenceError& e) {
      result.failure = e.what();
      break;
    }
  }
  result.sim_time = static_cast<double>(world.step) * config.dt;

  const std::vector<double> errors = error_series(result.log, config.metrics_warmup);
  if (!errors.empty()) {
    result.rmse = rmse(errors);
    result.mae = mae(errors);
  }
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return result;
}

void write_trial_log_csv(std::ostream& out, const TrialLog& log) {
  out << kTrialLogHeader << '\n';
  for (const LogRow& row : log) {
    out << format_double(row.t);
    for (int i = 0; i < 3; ++i) out << ',' << format_double(row.pose[i]);
    for (int i = 0; i < 3; ++i) out << ',' << format_double(row.velocity[i]);
    out << ',' << format_double(row.chi_d) << ',' << format_double(row.cross_track) << ','
        << format_double(row.beta_hat) << ',' << row.segment;
    for (std::size_t i = 0; i < kNumJoints; ++i) out << ',' << format_double(row.joint_angles[i]);
    for (int i = 0; i < 3; ++i) out << ',' << format_double(row.tau[i]);
    out << '\n';
  }
}

}  // namespace dolphin
