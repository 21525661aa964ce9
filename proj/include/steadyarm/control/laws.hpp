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

#ifndef STEADYARM_CONTROL_LAWS_HPP_
#define STEADYARM_CONTROL_LAWS_HPP_

#include "steadyarm/control/gains.hpp"
#include "steadyarm/control/reference.hpp"
#include "steadyarm/dynamics/equations.hpp"

namespace steadyarm {

/// Passivity-based tracking law with disturbance compensation:
///
///   u = M(q) xi_ddot + C(q, qdot) xi_dot + G(q) - K_D sigma - d_hat
///
/// No feedback linearization: the model terms multiply the filter signals,
/// not the raw state, so the closed loop keeps the skew-symmetry cancellation
/// that the Lyapunov argument needs. u is affine in d_hat with slope -I.
VectorXd lyapunov_control(const ManipulatorModel& model, const JointState& state,
                          const FilteredError& fe, const ControllerGains& gains,
                          const VectorXd& d_hat);

/// One explicit-Euler step of the disturbance-estimate law d_hat' = K_I sigma
/// (so d_hat tracks K_I * integral of sigma). The simulator integrates the
/// same law inside its RK4 stages instead of calling this helper; this is the
/// standalone single-step form.
VectorXd observer_update(const VectorXd& d_hat, const VectorXd& sigma,
                         const MatrixXd& ki, double dt);

/// Computed-torque baseline with integral action:
///
///   u = M(q) (qddot_d - K_D qtilde_dot - K_P qtilde - K_I z) + C qdot + G,
///   zdot = qtilde,  K_P = Lambda^2 + K_D Lambda
///
/// The K_P mapping makes the disturbance-free linearized error dynamics
/// comparable with the passivity-based law, so head-to-head disturbance
/// sweeps are a fair comparison.
VectorXd inverse_dynamics_integral_control(const ManipulatorModel& model,
                                           const JointState& state,
                                           const ReferenceSample& ref,
                                           const ControllerGains& gains,
                                           const VectorXd& integral_state);

/// Lyapunov certificate sample: V = 0.5 sigma' M sigma + 0.5 dtilde' K_I^-1
/// dtilde with dtilde = d - d_hat, and its model derivative -sigma' K_D
/// sigma. Needs the true disturbance, so it is a simulation-only diagnostic.
struct LyapunovSample {
  double V = 0.0;
  double Vdot_model = 0.0;
  double sigma_norm = 0.0;
};

LyapunovSample lyapunov_diagnostics(const ManipulatorModel& model,
                                    const JointState& state, const FilteredError& fe,
                                    const VectorXd& d_hat, const VectorXd& true_d,
                                    const ControllerGains& gains);

/// Passivity audit of the -sigma -> dtilde map: returns
///
///   max_k | integral_0^tk -sigma' dtilde ds  -  (V1(tk) - V1(0)) |
///
/// with V1 = 0.5 dtilde' K_I^-1 dtilde and trapezoidal quadrature on the
/// sampled series. Rows of sigma/dtilde are samples at times t.
double passivity_residual(const VectorXd& t, const MatrixXd& sigma,
                          const MatrixXd& dtilde, const MatrixXd& ki);

}  // namespace steadyarm

#endif  // STEADYARM_CONTROL_LAWS_HPP_
