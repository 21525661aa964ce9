// Copyright 2026 The steadyarm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEADYARM_SIM_SCENARIO_HPP_
#define STEADYARM_SIM_SCENARIO_HPP_

#include <string>

#include "steadyarm/control/gains.hpp"
#include "steadyarm/dynamics/planar_arm.hpp"
#include "steadyarm/dynamics/surgical_arm.hpp"
#include "steadyarm/kinematics/kinematics.hpp"
#include "steadyarm/signals/disturbance.hpp"
#include "steadyarm/signals/trajectory.hpp"

namespace steadyarm {

enum class ModelKind { kPlanarArm, kSurgicalArm };
enum class ControllerKind {
  kLyapunovObserver,
  kWorkspaceLyapunov,
  kInverseDynamicsIntegral,
};

std::string model_kind_name(ModelKind kind);
std::string controller_kind_name(ControllerKind kind);

/// Initial conditions. Auto placement puts the arm on the trajectory:
/// joint-space references start at (q_d(0), qdot_d(0)); workspace references
/// start at the IK solution of x_d(0) with zero velocity.
struct InitialSpec {
  bool q_auto = true;
  VectorXd q;
  bool qdot_auto = true;
  VectorXd qdot;
  VectorXd d_hat;  ///< observer initialization; empty means zero
};

/// Complete declarative description of one closed-loop experiment.
/// run_scenario is deterministic: equal configs produce bit-identical logs.
struct ScenarioConfig {
  ModelKind model = ModelKind::kPlanarArm;
  PlanarArmParams planar;
  SurgicalArmParams surgical;
  VectorXd friction;  ///< viscous diagonal; empty = frictionless

  ControllerKind controller = ControllerKind::kLyapunovObserver;
  ControllerGains gains;

  TrajectorySpec trajectory;
  DisturbanceSpec disturbance;
  InitialSpec initial;

  double dt = 1e-3;
  double duration = 20.0;
  int decimation = 1;
  double blowup_norm = 1e6;
  /// 0 = controller evaluated at every integrator stage (continuous-control
  /// idealization); > 0 = zero-order hold with this control period, which
  /// must be an integer multiple of dt.
  double control_period = 0.0;
  ElbowBranch ik_branch = ElbowBranch::kDown;

  int dof() const { return model == ModelKind::kPlanarArm ? 2 : 4; }

  /// Structural validation; throws ConfigError naming the offending key.
  void validate() const;
};

}  // namespace steadyarm

#endif  // STEADYARM_SIM_SCENARIO_HPP_
