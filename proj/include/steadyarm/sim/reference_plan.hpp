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

#ifndef STEADYARM_SIM_REFERENCE_PLAN_HPP_
#define STEADYARM_SIM_REFERENCE_PLAN_HPP_

#include <memory>

#include "steadyarm/control/controllers.hpp"
#include "steadyarm/sim/scenario.hpp"

namespace steadyarm {

/// Joint-space reference for a planar workspace trajectory: q_d by analytic
/// IK on the chosen elbow branch, qdot_d through the Jacobian inverse, and
/// qddot_d by central differencing of the exact qdot_d(t) map (the workspace
/// trajectories supply no acceleration).
class IkJointReference {
 public:
  IkJointReference(const PlanarArmModel& model, TrajectorySpec trajectory,
                   ElbowBranch branch, double fd_step = 1e-5);

  ReferenceSample at(double t) const;

 private:
  VectorXd joint_velocity(double t, const VectorXd& q) const;
  VectorXd joint_position(double t) const;

  const PlanarArmModel& model_;
  TrajectorySpec trajectory_;
  ElbowBranch branch_;
  double fd_step_;
};

/// Bundles the reference callbacks a scenario's controller needs. joint is
/// set for joint-space controllers, task for the workspace law; task is also
/// populated alongside joint when the underlying trajectory is a workspace
/// one (for logging task error).
struct ReferencePlan {
  JointReferenceFn joint;
  TaskReferenceFn task;
  std::shared_ptr<IkJointReference> ik;  ///< owner when IK conversion is used
};

/// Builds the plan for a scenario; throws ConfigError for unsupported
/// model/controller/trajectory combinations.
ReferencePlan build_reference_plan(const ScenarioConfig& config,
                                   const ManipulatorModel& model);

}  // namespace steadyarm

#endif  // STEADYARM_SIM_REFERENCE_PLAN_HPP_
