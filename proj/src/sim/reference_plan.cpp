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

#include "steadyarm/sim/reference_plan.hpp"

#include <Eigen/LU>

namespace steadyarm {

IkJointReference::IkJointReference(const PlanarArmModel& model, TrajectorySpec trajectory,
                                   ElbowBranch branch, double fd_step)
    : model_(model), trajectory_(std::move(trajectory)), branch_(branch), fd_step_(fd_step) {
  require(is_workspace_kind(trajectory_.kind),
          "IkJointReference needs a workspace trajectory");
  require(fd_step_ > 0.0, "IkJointReference: fd_step must be > 0");
}

VectorXd IkJointReference::joint_position(double t) const {
  const TaskSample s = task_reference(trajectory_, t);
  return planar_inverse_kinematics(model_.params(), Vector2d(s.x_d), branch_);
}

VectorXd IkJointReference::joint_velocity(double t, const VectorXd& q) const {
  const TaskSample s = task_reference(trajectory_, t);
  return model_.task_jacobian(q).partialPivLu().solve(s.xdot_d);
}

ReferenceSample IkJointReference::at(double t) const {
  ReferenceSample ref;
  ref.q_d = joint_position(t);
  ref.qdot_d = joint_velocity(t, ref.q_d);
  const VectorXd qd_plus = joint_velocity(t + fd_step_, joint_position(t + fd_step_));
  const VectorXd qd_minus = joint_velocity(t - fd_step_, joint_position(t - fd_step_));
  ref.qddot_d = (qd_plus - qd_minus) / (2.0 * fd_step_);
  return ref;
}

ReferencePlan build_reference_plan(const ScenarioConfig& config,
                                   const ManipulatorModel& model) {
  ReferencePlan plan;
  const TrajectorySpec& traj = config.trajectory;
  const bool workspace = is_workspace_kind(traj.kind);

  if (workspace) {
    plan.task = [traj](double t) { return task_reference(traj, t); };
  }

  if (config.controller == ControllerKind::kWorkspaceLyapunov) {
    if (!workspace) {
      throw ConfigError("trajectory.kind",
                        "the workspace controller needs a workspace trajectory, got " +
                            trajectory_kind_name(traj.kind));
    }
    if (model.task_dim() != 2) {
      throw ConfigError("scenario.controller",
                        "the workspace controller supports planar task spaces only");
    }
    return plan;
  }

  // joint-space controllers
  if (workspace) {
    const auto* planar = dynamic_cast<const PlanarArmModel*>(&model);
    if (planar == nullptr) {
      throw ConfigError("trajectory.kind",
                        "workspace trajectories drive joint-space controllers only on "
                        "the planar arm (IK conversion)");
    }
    plan.ik = std::make_shared<IkJointReference>(*planar, traj, config.ik_branch);
    auto ik = plan.ik;
    plan.joint = [ik](double t) { return ik->at(t); };
  } else {
    if (traj.joint_dim() != model.dof()) {
      throw ConfigError("trajectory",
                        "trajectory dimension " + std::to_string(traj.joint_dim()) +
                            " does not match the model DOF " + std::to_string(model.dof()));
    }
    plan.joint = [traj](double t) { return joint_reference(traj, t); };
  }
  return plan;
}

}  // namespace steadyarm
