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

#include "steadyarm/control/controllers.hpp"

namespace steadyarm {

LyapunovObserverController::LyapunovObserverController(const ManipulatorModel& model,
                                                       ControllerGains gains,
                                                       JointReferenceFn reference,
                                                       VectorXd d_hat0)
    : model_(model),
      gains_(std::move(gains)),
      reference_(std::move(reference)),
      d_hat0_(std::move(d_hat0)) {
  gains_.validate(model_.dof(), /*require_ki=*/true);
  if (d_hat0_.size() == 0) d_hat0_ = VectorXd::Zero(model_.dof());
  model_.check_dof(d_hat0_, "LyapunovObserverController: d_hat(0)");
  require(static_cast<bool>(reference_), "LyapunovObserverController: missing reference");
}

ControlOutput LyapunovObserverController::compute(const ControlStage& stage) const {
  const JointState state(stage.q, stage.qdot);
  const FilteredError fe = reference_filter(state, reference_(stage.t), gains_.Lambda);
  ControlOutput out;
  out.u = lyapunov_control(model_, state, fe, gains_, stage.internal);
  out.internal_dot = gains_.Ki * fe.sigma;
  return out;
}

ControlDiagnostics LyapunovObserverController::diagnose(const ControlStage& stage,
                                                        const VectorXd& true_d) const {
  const JointState state(stage.q, stage.qdot);
  ControlDiagnostics diag;
  diag.joint_ref = reference_(stage.t);
  const FilteredError fe = reference_filter(state, diag.joint_ref, gains_.Lambda);
  diag.sigma = fe.sigma;
  diag.d_hat = stage.internal;
  diag.lyapunov = lyapunov_diagnostics(model_, state, fe, stage.internal, true_d, gains_);
  return diag;
}

WorkspaceLyapunovController::WorkspaceLyapunovController(
    const ManipulatorModel& model, ControllerGains gains, TaskReferenceFn reference,
    bool use_observer, VectorXd d_hat0, DampingPolicy damping)
    : model_(model),
      gains_(std::move(gains)),
      reference_(std::move(reference)),
      use_observer_(use_observer),
      d_hat0_(std::move(d_hat0)),
      damping_(damping) {
  gains_.validate(model_.dof(), /*require_ki=*/use_observer_);
  if (use_observer_ && d_hat0_.size() == 0) d_hat0_ = VectorXd::Zero(model_.dof());
  if (use_observer_) model_.check_dof(d_hat0_, "WorkspaceLyapunovController: d_hat(0)");
  require(static_cast<bool>(reference_), "WorkspaceLyapunovController: missing reference");
  require(gains_.Lambda.rows() == model_.dof(),
          "WorkspaceLyapunovController: Lambda must be DOF-sized");
  xi_ddot_hold_ = VectorXd::Zero(model_.dof());
}

VectorXd WorkspaceLyapunovController::internal_initial() const {
  return use_observer_ ? d_hat0_ : VectorXd();
}

VectorXd WorkspaceLyapunovController::filter_velocity(double t, const VectorXd& q,
                                                      JacobianBundle* bundle_out) const {
  const TaskSample ref = reference_(t);
  const VectorXd x = model_.task_position(q);
  require(ref.x_d.size() == x.size(),
          "WorkspaceLyapunovController: task reference dimension mismatch");
  // Lambda acts on the task error here; gains are DOF-sized, so reuse the
  // leading task_dim block (isotropic gains make this exact).
  const auto m = x.size();
  const VectorXd xi_dot_x = ref.xdot_d + gains_.Lambda.topLeftCorner(m, m) * (ref.x_d - x);
  const JacobianBundle bundle = jacobian(model_, q);
  if (bundle_out != nullptr) *bundle_out = bundle;
  const double lambda =
      bundle.sigma_min < damping_.sigma_min_threshold ? damping_.lambda : 0.0;
  return damped_pseudoinverse(bundle.J, lambda) * xi_dot_x;
}

void WorkspaceLyapunovController::begin_step(double t, const VectorXd& q,
                                             const VectorXd& /*qdot*/, double dt) {
  require(dt > 0.0, "WorkspaceLyapunovController::begin_step: dt must be > 0");
  const VectorXd xi_dot = filter_velocity(t, q, nullptr);
  if (has_prev_xi_dot_) {
    xi_ddot_hold_ = (xi_dot - prev_xi_dot_) / dt;
  } else {
    xi_ddot_hold_ = VectorXd::Zero(model_.dof());
    has_prev_xi_dot_ = true;
  }
  prev_xi_dot_ = xi_dot;
}

ControlOutput WorkspaceLyapunovController::compute(const ControlStage& stage) const {
  JacobianBundle bundle;
  const VectorXd xi_dot = filter_velocity(stage.t, stage.q, &bundle);
  const VectorXd sigma = stage.qdot - xi_dot;

  ControlOutput out;
  out.u = model_.mass_matrix(stage.q) * xi_ddot_hold_ +
          coriolis_matrix(model_, stage.q, stage.qdot) * xi_dot + model_.gravity(stage.q) +
          bundle.J.transpose() * gains_.Kd.topLeftCorner(bundle.J.rows(), bundle.J.rows()) *
              bundle.J * (xi_dot - stage.qdot);
  if (use_observer_) {
    out.u -= stage.internal;
    out.internal_dot = gains_.Ki * sigma;
  } else {
    out.internal_dot = VectorXd();
  }
  return out;
}

ControlDiagnostics WorkspaceLyapunovController::diagnose(const ControlStage& stage,
                                                         const VectorXd& true_d) const {
  JacobianBundle bundle;
  const VectorXd xi_dot = filter_velocity(stage.t, stage.q, &bundle);

  ControlDiagnostics diag;
  diag.sigma = stage.qdot - xi_dot;

  const auto m = bundle.J.rows();
  const MatrixXd kd_task =
      bundle.J.transpose() * gains_.Kd.topLeftCorner(m, m) * bundle.J;
  diag.lyapunov.sigma_norm = diag.sigma.norm();
  diag.lyapunov.V = 0.5 * diag.sigma.dot(model_.mass_matrix(stage.q) * diag.sigma);
  diag.lyapunov.Vdot_model = -diag.sigma.dot(kd_task * diag.sigma);
  if (use_observer_) {
    diag.d_hat = stage.internal;
    const VectorXd dtilde = true_d - stage.internal;
    Eigen::LLT<MatrixXd> ki_llt(gains_.Ki);
    diag.lyapunov.V += 0.5 * dtilde.dot(ki_llt.solve(dtilde));
  }
  return diag;
}

InverseDynamicsIntegralController::InverseDynamicsIntegralController(
    const ManipulatorModel& model, ControllerGains gains, JointReferenceFn reference)
    : model_(model), gains_(std::move(gains)), reference_(std::move(reference)) {
  gains_.validate(model_.dof(), /*require_ki=*/true);
  require(static_cast<bool>(reference_),
          "InverseDynamicsIntegralController: missing reference");
}

ControlOutput InverseDynamicsIntegralController::compute(const ControlStage& stage) const {
  const JointState state(stage.q, stage.qdot);
  const ReferenceSample ref = reference_(stage.t);
  ControlOutput out;
  out.u = inverse_dynamics_integral_control(model_, state, ref, gains_, stage.internal);
  out.internal_dot = state.q - ref.q_d;
  return out;
}

ControlDiagnostics InverseDynamicsIntegralController::diagnose(
    const ControlStage& stage, const VectorXd& /*true_d*/) const {
  const JointState state(stage.q, stage.qdot);
  ControlDiagnostics diag;
  diag.joint_ref = reference_(stage.t);
  const FilteredError fe = reference_filter(state, diag.joint_ref, gains_.Lambda);
  diag.sigma = fe.sigma;
  // No observer: V here is just the sigma energy, logged for comparability.
  diag.lyapunov.sigma_norm = fe.sigma.norm();
  diag.lyapunov.V = 0.5 * fe.sigma.dot(model_.mass_matrix(stage.q) * fe.sigma);
  diag.lyapunov.Vdot_model = -fe.sigma.dot(gains_.Kd * fe.sigma);
  return diag;
}

}  // namespace steadyarm
