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

#ifndef STEADYARM_DYNAMICS_JOINT_STATE_HPP_
#define STEADYARM_DYNAMICS_JOINT_STATE_HPP_

#include "steadyarm/common.hpp"

namespace steadyarm {

/// Generalized coordinates and velocities of an n-DOF manipulator.
///
/// For the spherical-coordinate arm the coordinates are [theta, phi, alpha,
/// rho]: azimuth, elevation and roll in rad, insertion depth in m. For the
/// planar arm they are the two joint angles in rad.
struct JointState {
  VectorXd q;
  VectorXd qdot;

  JointState() = default;
  JointState(VectorXd q_in, VectorXd qdot_in)
      : q(std::move(q_in)), qdot(std::move(qdot_in)) {
    require(q.size() == qdot.size(), "JointState: q and qdot dimensions differ");
    require_finite(q, "JointState.q");
    require_finite(qdot, "JointState.qdot");
  }

  int dof() const { return static_cast<int>(q.size()); }
};

}  // namespace steadyarm

#endif  // STEADYARM_DYNAMICS_JOINT_STATE_HPP_
