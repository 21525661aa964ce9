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

#ifndef STEADYARM_KINEMATICS_KINEMATICS_HPP_
#define STEADYARM_KINEMATICS_KINEMATICS_HPP_

#include <functional>

#include "steadyarm/dynamics/planar_arm.hpp"

namespace steadyarm {

/// Task-space sample. xdot may be empty when only a position is known.
struct TaskPoint {
  VectorXd x;
  VectorXd xdot;
};

/// Analytic Jacobian with its singularity metrics: sigma_min is the smallest
/// singular value, manipulability is sqrt(det(J J')) = product of singular
/// values, zero exactly when J loses row rank.
struct JacobianBundle {
  MatrixXd J;
  double sigma_min = 0.0;
  double manipulability = 0.0;
};

TaskPoint forward_kinematics(const ManipulatorModel& model, const VectorXd& q);

JacobianBundle jacobian(const ManipulatorModel& model, const VectorXd& q);

/// Damped right pseudoinverse J'(J J' + lambda^2 I)^-1. With lambda = 0 and J
/// of full row rank this is the Moore-Penrose pseudoinverse; a rank-deficient
/// J with lambda = 0 throws SingularJacobianError telling the caller to set
/// lambda > 0.
MatrixXd damped_pseudoinverse(const MatrixXd& J, double lambda);

enum class ElbowBranch {
  kDown,  ///< q2 >= 0 solution
  kUp,    ///< q2 <= 0 solution
};

/// Closed-form planar 2R inverse kinematics. Throws ReachabilityError if the
/// target lies outside the annular workspace.
Vector2d planar_inverse_kinematics(const PlanarArmParams& params,
                                   const Vector2d& target, ElbowBranch branch);

struct SingularityClearance {
  double min_sigma_min = 0.0;
  double min_manipulability = 0.0;
};

/// Scans the IK-consistent configurations along a task-space path
/// target(t), t in [0, horizon] sampled every dt, and returns the worst-case
/// singularity metrics. Unreachable targets propagate ReachabilityError.
SingularityClearance singularity_clearance(
    const PlanarArmModel& model, const std::function<Vector2d(double)>& target,
    double horizon, double dt, ElbowBranch branch = ElbowBranch::kDown);

}  // namespace steadyarm

#endif  // STEADYARM_KINEMATICS_KINEMATICS_HPP_
