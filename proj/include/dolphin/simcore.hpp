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

// Fixed-step closed loop: guidance -> mapping -> CPG -> propulsion ->
// dynamics, with the vehicle and oscillator states advanced together by one
// RK4 step per control period.

#ifndef DOLPHIN_SIMCORE_HPP_
#define DOLPHIN_SIMCORE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dolphin/cpg.hpp"
#include "dolphin/guidance.hpp"
#include "dolphin/pathgen.hpp"
#include "dolphin/vehicle.hpp"

namespace dolphin {

inline constexpr double kMaxTimeStep = 0.02;
inline constexpr double kDivergenceLimit = 1e3;

struct SimConfig {
  double dt = 0.01;      // [s]
  double t_max = 120.0;  // [s]
  VehicleState initial;
  HydroParams hydro;
  BodyGeometry body = BodyGeometry::default_dolphin();
  GuidanceParams guidance;
  CpgParams cpg = CpgParams::chain(0.6, 20.0, kDefaultCouplingWeight, kDefaultTailLag);
  MappingParams mapping;
  SinusoidSpec path;
  std::uint64_t rng_seed = 0;
  int log_decimation = 1;
  /// Samples logged before this time are left out of RMSE/MAE.
  double metrics_warmup = 0.0;
  /// Uniform water current in the earth frame [m/s]. The default is a weak
  /// cross-current so that sideslip compensation has something to reject.
  Vector2<double> current = Vector2<double>(0.0, 0.018);

  /// Look-ahead distance expressed in body lengths.
  double delta_multiple() const { return guidance.delta / body.total_length(); }

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Packed plant state: pose (3), body velocity (3), CPG state (35).
inline constexpr int kPlantSize = 6 + 5 * static_cast<int>(kNumJoints);
using PlantVector = Eigen::Matrix<double, kPlantSize, 1>;

/// Everything that evolves during a trial.
struct WorldState {
  long step = 0;
  VehicleState vehicle;
  CpgState cpg;
  GuidanceState guidance;
  CpgParams cpg_params;  // targets held over the current control period
  double chi_d = 0.0;
  double heading_error = 0.0;
};

/// One logged sample.
struct LogRow {
  double t = 0.0;
  Vector3<double> pose = Vector3<double>::Zero();
  Vector3<double> velocity = Vector3<double>::Zero();
  double chi_d = 0.0;
  double cross_track = 0.0;
  double beta_hat = 0.0;
  std::size_t segment = 0;
  JointVectord joint_angles = JointVectord::Zero();
  GeneralizedForce tau = GeneralizedForce::Zero();
};

using TrialLog = std::vector<LogRow>;

struct TrialResult {
  TrialLog log;
  bool completed = false;  // final waypoint accepted before t_max
  double rmse = 0.0;       // [m]
  double mae = 0.0;        // [m]
  double sim_time = 0.0;   // [s]
  double wall_time = 0.0;  // [s]
  /// Set when the trial aborted; the log holds the rows up to the abort.
  std::optional<std::string> failure;
};

/// The closed-loop engine for one trial. Holds immutable inputs; the
/// evolving state is passed in and out as a WorldState value.
class ClosedLoop {
 public:
  /// Validates the config and builds the reference path. Throws ConfigError.
  explicit ClosedLoop(SimConfig config);

  const SimConfig& config() const { return config_; }
  const WaypointPath& path() const { return path_; }

  /// World at t = 0 with commands already computed from the initial pose.
  WorldState initial_world() const;

  /// Waypoint switching, cross-track error, sideslip update, heading law,
  /// wrapped heading error and mapping onto the CPG targets, all from the
  /// world's current pose.
  void update_commands(WorldState& world) const;

  /// One RK4 step of the joint vehicle/CPG state under the held targets,
  /// followed by update_commands on the new pose. Throws DivergenceError.
  WorldState step(const WorldState& world) const;

  /// Joint angles, joint rates and generalized force at the world's state.
  GeneralizedForce force(const WorldState& world) const;

  LogRow log_row(const WorldState& world) const;

  /// Time derivative of the packed plant state under the given targets.
  PlantVector plant_rate(const PlantVector& x, const CpgParams& targets) const;

 private:
  Vector3<double> relative_velocity(const Vector3<double>& pose,
                                    const Vector3<double>& velocity) const;
  GeneralizedForce tau_at(const PlantVector& x, const CpgPacked& cpg_dot) const;

  SimConfig config_;
  WaypointPath path_;
};

/// Runs to t_max or path completion. Deterministic: identical configs give
/// bit-identical logs.
TrialResult run_trial(const SimConfig& config);

/// Trajectory CSV with the fixed column set; values written with nine
/// significant digits.
void write_trial_log_csv(std::ostream& out, const TrialLog& log);

inline constexpr const char* kTrialLogHeader =
    "t,x,y,psi,u,v,r,chi_d,y_e,beta_hat,segment,th1,th2,th3,th4,th5,th6,th7,tau_x,tau_y,tau_n";

PlantVector pack(const VehicleState& vehicle, const CpgState& cpg);
void unpack(const PlantVector& x, VehicleState& vehicle, CpgState& cpg);

}  // namespace dolphin

#endif  // DOLPHIN_SIMCORE_HPP_
