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

#include "steadyarm/control/laws.hpp"

#include <cmath>

#include <Eigen/Cholesky>

namespace steadyarm {

VectorXd lyapunov_control(const ManipulatorModel& model, const JointState& state,
                          const FilteredError& fe, const ControllerGains& gains,
                          const VectorXd& d_hat) {
  model.check_dof(d_hat, "lyapunov_control: d_hat");
  return model.mass_matrix(state.q) * fe.xi_ddot +
         coriolis_matrix(model, state.q, state.qdot) * fe.xi_dot +
         model.gravity(state.q) - gains.Kd * fe.sigma - d_hat;
}

VectorXd observer_update(const VectorXd& d_hat, const VectorXd& sigma,
                         const MatrixXd& ki, double dt) {
  require(dt > 0.0, "observer_update: dt must be > 0");
  require(d_hat.size() == sigma.size(), "observer_update: dimension mismatch");
  return d_hat + dt * (ki * sigma);
}

VectorXd inverse_dynamics_integral_control(const ManipulatorModel& model,
                                           const JointState& state,
                                           const ReferenceSample& ref,
                                           const ControllerGains& gains,
                                           const VectorXd& integral_state) {
  model.check_dof(integral_state, "inverse_dynamics_integral_control: integral state");
  const VectorXd qtilde = state.q - ref.q_d;
  const VectorXd qtilde_dot = state.qdot - ref.qdot_d;
  const MatrixXd kp = gains.Lambda * gains.Lambda + gains.Kd * gains.Lambda;
  const VectorXd accel = ref.qddot_d - gains.Kd * qtilde_dot - kp * qtilde -
                         gains.Ki * integral_state;
  return model.mass_matrix(state.q) * accel +
         coriolis_matrix(model, state.q, state.qdot) * state.qdot + model.gravity(state.q);
}

LyapunovSample lyapunov_diagnostics(const ManipulatorModel& model,
                                    const JointState& state, const FilteredError& fe,
                                    const VectorXd& d_hat, const VectorXd& true_d,
                                    const ControllerGains& gains) {
  LyapunovSample sample;
  sample.sigma_norm = fe.sigma.norm();
  sample.V = 0.5 * fe.sigma.dot(model.mass_matrix(state.q) * fe.sigma);
  if (gains.has_ki() && d_hat.size() > 0) {
    require(true_d.size() == d_hat.size(), "lyapunov_diagnostics: d/d_hat dimension mismatch");
    const VectorXd dtilde = true_d - d_hat;
    Eigen::LLT<MatrixXd> ki_llt(gains.Ki);
    if (ki_llt.info() != Eigen::Success) {
      throw ContractViolation("lyapunov_diagnostics: K_I must be SPD");
    }
    sample.V += 0.5 * dtilde.dot(ki_llt.solve(dtilde));
  }
  sample.Vdot_model = -fe.sigma.dot(gains.Kd * fe.sigma);
  return sample;
}

double passivity_residual(const VectorXd& t, const MatrixXd& sigma,
                          const MatrixXd& dtilde, const MatrixXd& ki) {
  const auto rows = t.size();
  if (rows == 0) throw LogSchemaError("passivity_residual: empty series");
  if (sigma.rows() != rows || dtilde.rows() != rows) {
    throw LogSchemaError("passivity_residual: series lengths differ");
  }
  if (sigma.cols() != dtilde.cols() || ki.rows() != sigma.cols()) {
    throw LogSchemaError("passivity_residual: column/gain dimensions differ");
  }

  Eigen::LLT<MatrixXd> ki_llt(ki);
  if (ki_llt.info() != Eigen::Success) {
    throw ContractViolation("passivity_residual: K_I must be SPD");
  }
  auto v1_at = [&](Eigen::Index k) {
    const VectorXd d = dtilde.row(k).transpose();
    return 0.5 * d.dot(ki_llt.solve(d));
  };

  const double v1_0 = v1_at(0);
  double integral = 0.0;
  double worst = 0.0;
  double prev_integrand = -sigma.row(0).dot(dtilde.row(0));
  for (Eigen::Index k = 1; k < rows; ++k) {
    const double integrand = -sigma.row(k).dot(dtilde.row(k));
    integral += 0.5 * (integrand + prev_integrand) * (t[k] - t[k - 1]);
    prev_integrand = integrand;
    worst = std::max(worst, std::abs(integral - (v1_at(k) - v1_0)));
  }
  return worst;
}

}  // namespace steadyarm
