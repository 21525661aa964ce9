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

#ifndef STEADYARM_DYNAMICS_MANIPULATOR_MODEL_HPP_
#define STEADYARM_DYNAMICS_MANIPULATOR_MODEL_HPP_

#include <string>

#include "steadyarm/common.hpp"
#include "steadyarm/dynamics/joint_state.hpp"

namespace steadyarm {

/// Diagonal viscous joint friction. Coefficients are N*m*s/rad for revolute
/// coordinates and N*s/m for prismatic ones; an empty/zero vector means
/// frictionless.
class FrictionModel {
 public:
  FrictionModel() = default;
  explicit FrictionModel(VectorXd viscous) : viscous_(std::move(viscous)) {
    require((viscous_.array() >= 0.0).all(),
            "FrictionModel: viscous coefficients must be >= 0");
  }

  bool is_zero() const { return viscous_.size() == 0 || viscous_.isZero(0.0); }
  const VectorXd& viscous() const { return viscous_; }

  /// Resisting generalized force R*qdot (same sign as qdot per coordinate).
  VectorXd force(const VectorXd& qdot) const {
    if (viscous_.size() == 0) return VectorXd::Zero(qdot.size());
    require(viscous_.size() == qdot.size(),
            "FrictionModel: coefficient/velocity dimension mismatch");
    return viscous_.cwiseProduct(qdot);
  }

 private:
  VectorXd viscous_;
};

/// Rigid-body manipulator in standard form
///
///   M(q) qddot + C(q, qdot) qdot + G(q) + R qdot = u + d
///
/// Concrete models supply closed-form M, its coordinate partials (consumed by
/// the Christoffel construction of C), G, the potential, and the task-space
/// map with its analytic Jacobian. Models are immutable after construction
/// and all evaluators are pure functions of their arguments, so instances can
/// be shared freely across threads.
class ManipulatorModel {
 public:
  virtual ~ManipulatorModel() = default;

  virtual int dof() const = 0;
  virtual int task_dim() const = 0;
  virtual const std::string& name() const = 0;

  /// Inertia matrix, symmetric positive definite for all valid q.
  virtual MatrixXd mass_matrix(const VectorXd& q) const = 0;
  /// dM/dq_k, closed form.
  virtual MatrixXd mass_matrix_partial(const VectorXd& q, int coord) const = 0;
  /// Gravity generalized force G = dV/dq.
  virtual VectorXd gravity(const VectorXd& q) const = 0;
  virtual double potential_energy(const VectorXd& q) const = 0;

  /// Task-space position of the tool point.
  virtual VectorXd task_position(const VectorXd& q) const = 0;
  /// Analytic Jacobian of task_position, task_dim() x dof().
  virtual MatrixXd task_jacobian(const VectorXd& q) const = 0;

  /// Coordinate box used when sampling configurations for invariant checks.
  virtual VectorXd sample_box_lower() const = 0;
  virtual VectorXd sample_box_upper() const = 0;

  /// Kinetic energy through the inertia matrix, 0.5 qdot' M(q) qdot.
  double kinetic_energy(const VectorXd& q, const VectorXd& qdot) const {
    return 0.5 * qdot.dot(mass_matrix(q) * qdot);
  }
  double total_energy(const VectorXd& q, const VectorXd& qdot) const {
    return kinetic_energy(q, qdot) + potential_energy(q);
  }

  const FrictionModel& friction() const { return friction_; }
  void set_friction(FrictionModel friction) {
    require(friction.viscous().size() == 0 || friction.viscous().size() == dof(),
            "friction coefficient vector must match the model DOF count");
    friction_ = std::move(friction);
  }

  void check_dof(const VectorXd& q, const std::string& what) const {
    require(q.size() == dof(), what + ": expected dimension " + std::to_string(dof()));
    require_finite(q, what);
  }

 private:
  FrictionModel friction_;
};

}  // namespace steadyarm

#endif  // STEADYARM_DYNAMICS_MANIPULATOR_MODEL_HPP_
