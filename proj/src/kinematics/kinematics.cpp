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

#include "steadyarm/kinematics/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace steadyarm {

TaskPoint forward_kinematics(const ManipulatorModel& model, const VectorXd& q) {
  TaskPoint p;
  p.x = model.task_position(q);
  return p;
}

JacobianBundle jacobian(const ManipulatorModel& model, const VectorXd& q) {
  JacobianBundle bundle;
  bundle.J = model.task_jacobian(q);
  Eigen::JacobiSVD<MatrixXd> svd(bundle.J);
  const auto& sv = svd.singularValues();
  bundle.sigma_min = sv(sv.size() - 1);
  bundle.manipulability = sv.prod();
  return bundle;
}

MatrixXd damped_pseudoinverse(const MatrixXd& J, double lambda) {
  require(lambda >= 0.0, "damped_pseudoinverse: lambda must be >= 0");
  require(J.allFinite(), "damped_pseudoinverse: J contains non-finite entries");
  const auto m = J.rows();
  MatrixXd jjt = J * J.transpose();
  if (lambda == 0.0) {
    Eigen::JacobiSVD<MatrixXd> svd(J);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const double smin = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
    if (J.rows() > J.cols() || smin <= 1e-12 * std::max(smax, 1.0)) {
      throw SingularJacobianError(
          "damped_pseudoinverse: J is row-rank deficient with lambda = 0; "
          "pass a damping lambda > 0");
    }
  } else {
    jjt.diagonal().array() += lambda * lambda;
  }
  return J.transpose() * jjt.llt().solve(MatrixXd::Identity(m, m));
}

Vector2d planar_inverse_kinematics(const PlanarArmParams& params,
                                   const Vector2d& target, ElbowBranch branch) {
  require(target.allFinite(), "planar_inverse_kinematics: target");
  const double l1 = params.l1, l2 = params.l2;
  const double r2 = target.squaredNorm();
  const double c2 = (r2 - l1 * l1 - l2 * l2) / (2.0 * l1 * l2);
  constexpr double kTol = 1e-9;
  if (c2 > 1.0 + kTol || c2 < -1.0 - kTol) {
    throw ReachabilityError("planar_inverse_kinematics: target outside workspace");
  }
  double q2 = std::acos(std::clamp(c2, -1.0, 1.0));
  if (branch == ElbowBranch::kUp) q2 = -q2;
  const double q1 = std::atan2(target.y(), target.x()) -
                    std::atan2(l2 * std::sin(q2), l1 + l2 * std::cos(q2));
  return {q1, q2};
}

SingularityClearance singularity_clearance(
    const PlanarArmModel& model, const std::function<Vector2d(double)>& target,
    double horizon, double dt, ElbowBranch branch) {
  require(horizon >= 0.0 && dt > 0.0, "singularity_clearance: need horizon >= 0, dt > 0");
  SingularityClearance worst;
  worst.min_sigma_min = std::numeric_limits<double>::infinity();
  worst.min_manipulability = std::numeric_limits<double>::infinity();
  const int steps = static_cast<int>(std::floor(horizon / dt));
  for (int k = 0; k <= steps; ++k) {
    const Vector2d x = target(k * dt);
    const Vector2d q = planar_inverse_kinematics(model.params(), x, branch);
    const JacobianBundle bundle = jacobian(model, q);
    worst.min_sigma_min = std::min(worst.min_sigma_min, bundle.sigma_min);
    worst.min_manipulability = std::min(worst.min_manipulability, bundle.manipulability);
  }
  return worst;
}

}  // namespace steadyarm
