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

#ifndef STEADYARM_CONTROL_CONTROLLERS_HPP_
#define STEADYARM_CONTROL_CONTROLLERS_HPP_

#include <functional>
#include <string>

#include "steadyarm/control/laws.hpp"
#include "steadyarm/kinematics/kinematics.hpp"

namespace steadyarm {

using JointReferenceFn = std::function<ReferenceSample(double)>;
using TaskReferenceFn = std::function<TaskSample(double)>;

/// Inputs to one controller evaluation: plant state plus the controller's own
/// continuous internal state (observer estimate or integral accumulator).
struct ControlStage {
  double t = 0.0;
  VectorXd q;
  VectorXd qdot;
  VectorXd internal;
};

struct ControlOutput {
  VectorXd u;
  VectorXd internal_dot;
};

/// Per-sample diagnostics emitted into the simulation log.
struct ControlDiagnostics {
  VectorXd sigma;
  VectorXd d_hat;  ///< empty when the controller has no observer
  LyapunovSample lyapunov;
  ReferenceSample joint_ref;  ///< empty vectors when task-space only
};

/// A tracking controller is a deterministic state machine: compute() is a
/// pure function of the stage inputs so the integrator may evaluate it at
/// every RK4 stage, while the continuous internal state advances through the
/// returned internal_dot. begin_step() runs once per integration step for
/// controllers that keep discrete memory (finite differencing across steps).
class TrackingController {
 public:
  virtual ~TrackingController() = default;

  virtual const std::string& kind() const = 0;
  virtual int internal_dim() const = 0;
  virtual VectorXd internal_initial() const = 0;

  virtual void begin_step(double t, const VectorXd& q, const VectorXd& qdot, double dt) {
    (void)t;
    (void)q;
    (void)qdot;
    (void)dt;
  }

  virtual ControlOutput compute(const ControlStage& stage) const = 0;
  virtual ControlDiagnostics diagnose(const ControlStage& stage,
                                      const VectorXd& true_d) const = 0;
};

/// Joint-space passivity-based law with the disturbance observer:
/// u = M xi_ddot + C xi_dot + G - K_D sigma - d_hat, d_hat' = K_I sigma.
class LyapunovObserverController : public TrackingController {
 public:
  LyapunovObserverController(const ManipulatorModel& model, ControllerGains gains,
                             JointReferenceFn reference, VectorXd d_hat0);

  const std::string& kind() const override { return kind_; }
  int internal_dim() const override { return model_.dof(); }
  VectorXd internal_initial() const override { return d_hat0_; }

  ControlOutput compute(const ControlStage& stage) const override;
  ControlDiagnostics diagnose(const ControlStage& stage,
                              const VectorXd& true_d) const override;

 private:
  const ManipulatorModel& model_;
  ControllerGains gains_;
  JointReferenceFn reference_;
  VectorXd d_hat0_;
  std::string kind_ = "lyapunov_observer";
};

/// Workspace tracking law: xi_dot_x = xdot_d + Lambda (x_d - x) is pulled
/// back through the Jacobian pseudoinverse, and the torque is
///
///   u = M xi_ddot + C xi_dot + G + J' K_D J (xi_dot - qdot) [- d_hat]
///
/// xi_ddot is a first-order backward difference of xi_dot across integration
/// steps (held constant within a step), initialized to zero; the law itself
/// provides no Jacobian derivative. Near-singular Jacobians fall back to a
/// damped pseudoinverse.
/// Pseudoinverse guard: below the sigma_min threshold the velocity pullback
/// switches from the exact solve to a damped pseudoinverse.
struct WorkspaceDampingPolicy {
  double sigma_min_threshold = 1e-2;
  double lambda = 1e-3;
};

class WorkspaceLyapunovController : public TrackingController {
 public:
  using DampingPolicy = WorkspaceDampingPolicy;

  WorkspaceLyapunovController(const ManipulatorModel& model, ControllerGains gains,
                              TaskReferenceFn reference, bool use_observer,
                              VectorXd d_hat0, DampingPolicy damping = DampingPolicy());

  const std::string& kind() const override { return kind_; }
  int internal_dim() const override { return use_observer_ ? model_.dof() : 0; }
  VectorXd internal_initial() const override;

  void begin_step(double t, const VectorXd& q, const VectorXd& qdot, double dt) override;

  ControlOutput compute(const ControlStage& stage) const override;
  ControlDiagnostics diagnose(const ControlStage& stage,
                              const VectorXd& true_d) const override;

 private:
  VectorXd filter_velocity(double t, const VectorXd& q, JacobianBundle* bundle) const;

  const ManipulatorModel& model_;
  ControllerGains gains_;
  TaskReferenceFn reference_;
  bool use_observer_;
  VectorXd d_hat0_;
  DampingPolicy damping_;

  // backward-difference memory, updated once per integration step
  bool has_prev_xi_dot_ = false;
  VectorXd prev_xi_dot_;
  VectorXd xi_ddot_hold_;
  std::string kind_ = "workspace_lyapunov";
};

/// Computed-torque baseline with integral action; internal state is the
/// accumulated position error.
class InverseDynamicsIntegralController : public TrackingController {
 public:
  InverseDynamicsIntegralController(const ManipulatorModel& model,
                                    ControllerGains gains, JointReferenceFn reference);

  const std::string& kind() const override { return kind_; }
  int internal_dim() const override { return model_.dof(); }
  VectorXd internal_initial() const override { return VectorXd::Zero(model_.dof()); }

  ControlOutput compute(const ControlStage& stage) const override;
  ControlDiagnostics diagnose(const ControlStage& stage,
                              const VectorXd& true_d) const override;

 private:
  const ManipulatorModel& model_;
  ControllerGains gains_;
  JointReferenceFn reference_;
  std::string kind_ = "inverse_dynamics_integral";
};

}  // namespace steadyarm

#endif  // STEADYARM_CONTROL_CONTROLLERS_HPP_
