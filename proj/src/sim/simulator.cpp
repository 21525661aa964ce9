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

#include "steadyarm/sim/simulator.hpp"

#include <cmath>

#include "steadyarm/sim/integrator.hpp"
#include "steadyarm/sim/reference_plan.hpp"

namespace steadyarm {

std::string model_kind_name(ModelKind kind) {
  return kind == ModelKind::kPlanarArm ? "planar_arm" : "surgical_arm";
}

std::string controller_kind_name(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::kLyapunovObserver:
      return "lyapunov_observer";
    case ControllerKind::kWorkspaceLyapunov:
      return "workspace_lyapunov";
    case ControllerKind::kInverseDynamicsIntegral:
      return "inverse_dynamics_integral";
  }
  return "?";
}

void ScenarioConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("scenario.dt", "must be > 0");
  if (!(duration >= dt)) throw ConfigError("scenario.duration", "must be >= dt");
  if (decimation < 1) throw ConfigError("scenario.decimation", "must be >= 1");
  if (!(blowup_norm > 0.0)) throw ConfigError("scenario.blowup_norm", "must be > 0");
  if (control_period < 0.0) throw ConfigError("scenario.control_period", "must be >= 0");
  if (control_period > 0.0) {
    const double ratio = control_period / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 || ratio < 1.0 - 1e-9) {
      throw ConfigError("scenario.control_period", "must be an integer multiple of dt");
    }
  }

  try {
    if (model == ModelKind::kPlanarArm) {
      planar.validate();
    } else {
      surgical.validate();
    }
  } catch (const ContractViolation& e) {
    throw ConfigError("model", e.what());
  }
  if (friction.size() != 0) {
    if (friction.size() != dof() || !(friction.array() >= 0.0).all()) {
      throw ConfigError("model.friction",
                        "needs " + std::to_string(dof()) + " coefficients, all >= 0");
    }
  }

  const bool need_ki = controller != ControllerKind::kWorkspaceLyapunov;
  try {
    gains.validate(dof(), need_ki);
  } catch (const ContractViolation& e) {
    throw ConfigError("gains", e.what());
  }

  try {
    trajectory.validate();
  } catch (const ContractViolation& e) {
    throw ConfigError("trajectory", e.what());
  }
  if (!is_workspace_kind(trajectory.kind) && trajectory.joint_dim() != dof()) {
    throw ConfigError("trajectory", "trajectory dimension does not match the model DOF");
  }

  try {
    disturbance.validate(dof());
  } catch (const ContractViolation& e) {
    throw ConfigError("disturbance", e.what());
  }

  if (!initial.q_auto && (initial.q.size() != dof() || !initial.q.allFinite())) {
    throw ConfigError("initial.q", "needs " + std::to_string(dof()) + " finite entries");
  }
  if (!initial.qdot_auto &&
      (initial.qdot.size() != dof() || !initial.qdot.allFinite())) {
    throw ConfigError("initial.qdot", "needs " + std::to_string(dof()) + " finite entries");
  }
  if (initial.d_hat.size() != 0 &&
      (initial.d_hat.size() != dof() || !initial.d_hat.allFinite())) {
    throw ConfigError("initial.d_hat", "needs " + std::to_string(dof()) + " finite entries");
  }
}

std::unique_ptr<ManipulatorModel> build_model(const ScenarioConfig& config) {
  std::unique_ptr<ManipulatorModel> model;
  if (config.model == ModelKind::kPlanarArm) {
    model = std::make_unique<PlanarArmModel>(config.planar);
  } else {
    model = std::make_unique<SurgicalArmModel>(config.surgical);
  }
  if (config.friction.size() != 0) model->set_friction(FrictionModel(config.friction));
  return model;
}

namespace {

std::unique_ptr<TrackingController> build_controller(const ScenarioConfig& config,
                                                     const ManipulatorModel& model,
                                                     const ReferencePlan& plan) {
  switch (config.controller) {
    case ControllerKind::kLyapunovObserver:
      return std::make_unique<LyapunovObserverController>(model, config.gains, plan.joint,
                                                          config.initial.d_hat);
    case ControllerKind::kWorkspaceLyapunov:
      return std::make_unique<WorkspaceLyapunovController>(
          model, config.gains, plan.task, /*use_observer=*/config.gains.has_ki(),
          config.initial.d_hat);
    case ControllerKind::kInverseDynamicsIntegral:
      return std::make_unique<InverseDynamicsIntegralController>(model, config.gains,
                                                                 plan.joint);
  }
  throw ConfigError("scenario.controller", "unknown controller kind");
}

}  // namespace

JointState resolve_initial_state(const ScenarioConfig& config,
                                 const ManipulatorModel& model) {
  const int n = model.dof();
  VectorXd q0, qdot0;

  if (config.initial.q_auto || config.initial.qdot_auto) {
    if (is_workspace_kind(config.trajectory.kind)) {
      // workspace references start at the IK solution, at rest
      const auto* planar = dynamic_cast<const PlanarArmModel*>(&model);
      if (planar == nullptr) {
        throw ConfigError("initial.q",
                          "auto placement on a workspace trajectory needs the planar arm");
      }
      const TaskSample s = task_reference(config.trajectory, 0.0);
      q0 = planar_inverse_kinematics(planar->params(), Vector2d(s.x_d), config.ik_branch);
      qdot0 = VectorXd::Zero(n);
    } else {
      const ReferenceSample r = joint_reference(config.trajectory, 0.0);
      q0 = r.q_d;
      qdot0 = r.qdot_d;
    }
  }
  if (!config.initial.q_auto) q0 = config.initial.q;
  if (!config.initial.qdot_auto) qdot0 = config.initial.qdot;
  return JointState(q0, qdot0);
}

void validate_scenario(const ScenarioConfig& config) {
  config.validate();
  const auto model = build_model(config);
  const auto plan = build_reference_plan(config, *model);
  const auto controller = build_controller(config, *model, plan);
  (void)resolve_initial_state(config, *model);
}

SimResult run_scenario(const ScenarioConfig& config) {
  config.validate();
  const auto model = build_model(config);
  const auto plan = build_reference_plan(config, *model);
  const auto controller = build_controller(config, *model, plan);
  const JointState init = resolve_initial_state(config, *model);

  const int n = model->dof();
  const int nz = controller->internal_dim();
  const bool log_joint_ref = static_cast<bool>(plan.joint);
  const bool log_task = static_cast<bool>(plan.task);
  const bool log_observer = nz > 0 && config.controller != ControllerKind::kInverseDynamicsIntegral;

  std::vector<std::string> columns;
  columns.emplace_back("t");
  auto add_indexed = [&columns](const std::string& prefix, int count) {
    for (int i = 0; i < count; ++i) columns.push_back(prefix + std::to_string(i));
  };
  add_indexed("q", n);
  add_indexed("qdot", n);
  if (log_joint_ref) add_indexed("qd", n);
  const int m = model->task_dim();
  if (log_task) {
    add_indexed("x", m);
    add_indexed("xd", m);
  }
  add_indexed("sigma", n);
  add_indexed("u", n);
  add_indexed("d", n);
  if (log_observer) add_indexed("d_hat", n);
  columns.emplace_back("V");
  columns.emplace_back("Vdot_model");
  columns.emplace_back("energy");
  if (log_task) columns.emplace_back("sigma_min");

  SimLog log(columns);

  const int steps = static_cast<int>(std::llround(config.duration / config.dt));
  const int hold_every =
      config.control_period > 0.0
          ? static_cast<int>(std::llround(config.control_period / config.dt))
          : 0;

  VectorXd y(2 * n + nz);
  y.head(n) = init.q;
  y.segment(n, n) = init.qdot;
  if (nz > 0) y.tail(nz) = controller->internal_initial();

  VectorXd held_u, held_zdot;

  auto make_stage = [&](double t, const VectorXd& state) {
    ControlStage stage;
    stage.t = t;
    stage.q = state.head(n);
    stage.qdot = state.segment(n, n);
    stage.internal = nz > 0 ? VectorXd(state.tail(nz)) : VectorXd();
    return stage;
  };

  auto derivative = [&](double t, const VectorXd& state) -> VectorXd {
    const ControlStage stage = make_stage(t, state);
    VectorXd u, zdot;
    if (hold_every > 0) {
      u = held_u;
      zdot = held_zdot;
    } else {
      ControlOutput out = controller->compute(stage);
      u = std::move(out.u);
      zdot = std::move(out.internal_dot);
    }
    const VectorXd d = disturbance_sample(config.disturbance, t);
    VectorXd dy(2 * n + nz);
    dy.head(n) = stage.qdot;
    dy.segment(n, n) = forward_dynamics(*model, stage.q, stage.qdot, u, d);
    if (nz > 0) dy.tail(nz) = zdot;
    return dy;
  };

  std::vector<double> row(columns.size());
  try {
    for (int k = 0; k <= steps; ++k) {
      const double t = k * config.dt;
      const ControlStage stage = make_stage(t, y);

      if (hold_every > 0) {
        if (k % hold_every == 0) {
          controller->begin_step(t, stage.q, stage.qdot, config.control_period);
          ControlOutput out = controller->compute(stage);
          held_u = std::move(out.u);
          held_zdot = std::move(out.internal_dot);
        }
      } else {
        controller->begin_step(t, stage.q, stage.qdot, config.dt);
      }

      if (k % config.decimation == 0) {
        const VectorXd d = disturbance_sample(config.disturbance, t);
        const ControlDiagnostics diag = controller->diagnose(stage, d);
        const VectorXd u =
            hold_every > 0 ? held_u : controller->compute(stage).u;

        size_t c = 0;
        row[c++] = t;
        for (int i = 0; i < n; ++i) row[c++] = stage.q[i];
        for (int i = 0; i < n; ++i) row[c++] = stage.qdot[i];
        if (log_joint_ref) {
          for (int i = 0; i < n; ++i) row[c++] = diag.joint_ref.q_d[i];
        }
        if (log_task) {
          const VectorXd x = model->task_position(stage.q);
          const TaskSample ts = plan.task(t);
          for (int i = 0; i < m; ++i) row[c++] = x[i];
          for (int i = 0; i < m; ++i) row[c++] = ts.x_d[i];
        }
        for (int i = 0; i < n; ++i) row[c++] = diag.sigma[i];
        for (int i = 0; i < n; ++i) row[c++] = u[i];
        for (int i = 0; i < n; ++i) row[c++] = d[i];
        if (log_observer) {
          for (int i = 0; i < n; ++i) row[c++] = diag.d_hat[i];
        }
        row[c++] = diag.lyapunov.V;
        row[c++] = diag.lyapunov.Vdot_model;
        row[c++] = model->total_energy(stage.q, stage.qdot);
        if (log_task) row[c++] = jacobian(*model, stage.q).sigma_min;
        log.push_row(row);
      }

      if (k < steps) {
        y = rk4_step(derivative, y, t, config.dt);
        if (!y.allFinite() || y.cwiseAbs().maxCoeff() > config.blowup_norm) {
          throw DivergenceError(t + config.dt, "state exceeded the blow-up bound",
                                std::move(log));
        }
      }
    }
  } catch (const IntegrationDivergence& e) {
    throw DivergenceError(e.t(), e.what(), std::move(log));
  }

  SimResult result{std::move(log), Metrics{}};
  result.metrics = compute_metrics(result.log);
  return result;
}

}  // namespace steadyarm
