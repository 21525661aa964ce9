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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "steadyarm/control/controllers.hpp"
#include "steadyarm/dynamics/planar_arm.hpp"
#include "steadyarm/signals/trajectory.hpp"
#include "steadyarm/sim/integrator.hpp"

using namespace steadyarm;

namespace {

ReferenceSample rest_reference(const VectorXd& q_d) {
  ReferenceSample ref;
  ref.q_d = q_d;
  ref.qdot_d = VectorXd::Zero(q_d.size());
  ref.qddot_d = VectorXd::Zero(q_d.size());
  return ref;
}

}  // namespace

TEST_CASE("gain validation: symmetry and positive definiteness, named matrices") {
  CHECK_NOTHROW(ControllerGains::isotropic(2, 2.0, 1.0, 2.0).validate(2, true));

  ControllerGains g = ControllerGains::isotropic(2, 2.0, 1.0, 2.0);
  g.Kd(0, 1) = 0.5;  // asymmetric
  CHECK_THROWS_WITH_AS(g.validate(2, true), doctest::Contains("K_D"), ContractViolation);

  g = ControllerGains::isotropic(2, -1.0, 1.0, 2.0);
  CHECK_THROWS_WITH_AS(g.validate(2, true), doctest::Contains("K_D"), ContractViolation);

  g = ControllerGains::isotropic(2, 2.0, -1.0, 2.0);
  CHECK_THROWS_WITH_AS(g.validate(2, true), doctest::Contains("K_I"), ContractViolation);

  // K_I optional when not required
  g = ControllerGains::isotropic(2, 2.0, 1.0, 2.0);
  g.Ki.resize(0, 0);
  CHECK_NOTHROW(g.validate(2, false));
  CHECK_THROWS_AS(g.validate(2, true), ContractViolation);
}

TEST_CASE("reference filter: identities and frozen case") {
  const MatrixXd lambda = 2.0 * MatrixXd::Identity(2, 2);

  // exact tracking: sigma = 0 and the filter velocity is the reference's
  VectorXd q(2), qd(2);
  q << 0.3, -0.8;
  qd << 0.5, 0.1;
  ReferenceSample ref;
  ref.q_d = q;
  ref.qdot_d = qd;
  ref.qddot_d = VectorXd::Zero(2);
  const FilteredError exact = reference_filter(JointState(q, qd), ref, lambda);
  CHECK(exact.sigma.cwiseAbs().maxCoeff() == 0.0);
  CHECK(exact.xi_dot == ref.qdot_d);

  // position error only: sigma = Lambda qtilde
  VectorXd q2(2);
  q2 << q[0] + 1.0, q[1];
  const FilteredError off = reference_filter(JointState(q2, qd), ref, lambda);
  CHECK(off.sigma(0) == doctest::Approx(2.0));
  CHECK(off.sigma(1) == doctest::Approx(0.0));

  // property: sigma = qtilde_dot + Lambda qtilde at random states
  oracle::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const JointState state(rng.uniform_vec(2, -2, 2), rng.uniform_vec(2, -2, 2));
    ReferenceSample r;
    r.q_d = rng.uniform_vec(2, -2, 2);
    r.qdot_d = rng.uniform_vec(2, -2, 2);
    r.qddot_d = rng.uniform_vec(2, -2, 2);
    const FilteredError fe = reference_filter(state, r, lambda);
    CHECK((fe.sigma - (fe.qtilde_dot + lambda * fe.qtilde)).cwiseAbs().maxCoeff() <=
          1e-14);
  }

  // the error-to-sigma filter (sI + Lambda)^-1 has poles at the negated
  // Lambda eigenvalues: strictly proper and stable for SPD Lambda
  const Eigen::VectorXd eigs = lambda.selfadjointView<Eigen::Lower>().eigenvalues();
  CHECK(eigs.minCoeff() > 0.0);
  CHECK(eigs.minCoeff() == doctest::Approx(2.0));
}

TEST_CASE("tracking law: gravity compensation at rest and affinity in the estimate") {
  const PlanarArmModel model;
  const ControllerGains gains = ControllerGains::isotropic(2, 2.0, 1.0, 2.0);
  VectorXd q(2);
  q << 0.4, 0.9;
  const JointState state(q, VectorXd::Zero(2));
  const ReferenceSample ref = rest_reference(q);
  const FilteredError fe = reference_filter(state, ref, gains.Lambda);

  const VectorXd u0 = lyapunov_control(model, state, fe, gains, VectorXd::Zero(2));
  CHECK((u0 - model.gravity(q)).cwiseAbs().maxCoeff() <= 1e-14);

  const VectorXd ones = VectorXd::Ones(2);
  const VectorXd u1 = lyapunov_control(model, state, fe, gains, ones);
  CHECK((u1 - (model.gravity(q) - ones)).cwiseAbs().maxCoeff() <= 1e-14);

  // exactly affine in d_hat with slope -I, at arbitrary states
  oracle::Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    const JointState s(rng.uniform_vec(2, -2, 2), rng.uniform_vec(2, -2, 2));
    ReferenceSample r;
    r.q_d = rng.uniform_vec(2, -2, 2);
    r.qdot_d = rng.uniform_vec(2, -2, 2);
    r.qddot_d = rng.uniform_vec(2, -2, 2);
    const FilteredError f = reference_filter(s, r, gains.Lambda);
    const VectorXd d1 = rng.uniform_vec(2, -5, 5), d2 = rng.uniform_vec(2, -5, 5);
    const VectorXd diff = lyapunov_control(model, s, f, gains, d1) -
                          lyapunov_control(model, s, f, gains, d2);
    CHECK((diff + (d1 - d2)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("observer update: explicit Euler step") {
  const MatrixXd ki = MatrixXd::Identity(2, 2);
  VectorXd d_hat = VectorXd::Zero(2);
  VectorXd sigma(2);
  sigma << 1.0, 0.0;
  d_hat = observer_update(d_hat, sigma, ki, 0.01);
  CHECK(d_hat(0) == doctest::Approx(0.01));
  CHECK(d_hat(1) == 0.0);

  // zero sigma leaves the estimate unchanged
  const VectorXd frozen = observer_update(d_hat, VectorXd::Zero(2), ki, 0.5);
  CHECK(frozen == d_hat);

  CHECK_THROWS_AS(observer_update(d_hat, sigma, ki, 0.0), ContractViolation);
}

TEST_CASE("closed loop with exact estimate: sigma decays exponentially") {
  const PlanarArmModel model;
  const ControllerGains gains = ControllerGains::isotropic(2, 2.0, 1.0, 2.0);
  VectorXd d(2);
  d << 3.0, -2.0;
  VectorXd q_d(2);
  q_d << 0.7, 1.2;
  const ReferenceSample ref = rest_reference(q_d);

  // start off the reference with velocity
  VectorXd y(4);
  y << 0.2, 0.6, 0.5, -0.4;

  const auto deriv = [&](double, const VectorXd& s) {
    const JointState state(s.head(2), s.tail(2));
    const FilteredError fe = reference_filter(state, ref, gains.Lambda);
    const VectorXd u = lyapunov_control(model, state, fe, gains, d);  // d_hat = d
    VectorXd dy(4);
    dy.head(2) = state.qdot;
    dy.tail(2) = forward_dynamics(model, state.q, state.qdot, u, d);
    return dy;
  };

  // slowest mode decays at roughly K_D / (2 max-eig M) ~ 0.2/s, so give the
  // loop 20 s
  const double dt = 1e-3;
  const int steps = 20000;
  double v_prev = -1.0;
  double sigma0 = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const JointState state(y.head(2), y.tail(2));
    const FilteredError fe = reference_filter(state, ref, gains.Lambda);
    const double v = 0.5 * fe.sigma.dot(model.mass_matrix(state.q) * fe.sigma);
    if (k == 0) {
      sigma0 = fe.sigma.norm();
    } else {
      CHECK(v <= v_prev + 1e-10 * std::max(1.0, v_prev));  // monotone sigma energy
    }
    v_prev = v;
    if (k < steps) y = rk4_step(deriv, y, k * dt, dt);
  }
  const FilteredError fe_end =
      reference_filter(JointState(y.head(2), y.tail(2)), ref, gains.Lambda);
  CHECK(fe_end.sigma.norm() <= 1e-3 * sigma0);
}

TEST_CASE("observer estimate converges to a constant disturbance in closed loop") {
  const PlanarArmModel model;
  const ControllerGains gains = ControllerGains::isotropic(2, 2.0, 1.0, 2.0);
  VectorXd d(2);
  d << 10.0, 10.0;
  VectorXd q_d(2);
  q_d << 0.5, 1.0;
  const ReferenceSample ref = rest_reference(q_d);
  const auto ref_fn = [&](double) { return ref; };

  LyapunovObserverController controller(model, gains, ref_fn, VectorXd::Zero(2));

  VectorXd y(6);
  y << q_d(0), q_d(1), 0.0, 0.0, 0.0, 0.0;
  const auto deriv = [&](double t, const VectorXd& s) {
    ControlStage stage{t, s.head(2), s.segment(2, 2), s.tail(2)};
    const ControlOutput out = controller.compute(stage);
    VectorXd dy(6);
    dy.head(2) = stage.qdot;
    dy.segment(2, 2) = forward_dynamics(model, stage.q, stage.qdot, out.u, d);
    dy.tail(2) = out.internal_dot;
    return dy;
  };
  const double dt = 1e-3;
  for (int k = 0; k < 20000; ++k) y = rk4_step(deriv, y, k * dt, dt);
  CHECK((y.tail(2) - d).norm() <= 0.2);
  CHECK((y.head(2) - q_d).norm() <= 1e-2);
}

TEST_CASE("lyapunov diagnostics: zero cases, sign structure") {
  const PlanarArmModel model;
  const ControllerGains gains = ControllerGains::isotropic(2, 2.0, 1.0, 2.0);
  VectorXd q(2);
  q << 0.2, 0.4;
  const JointState state(q, VectorXd::Zero(2));
  const ReferenceSample ref = rest_reference(q);
  const FilteredError fe = reference_filter(state, ref, gains.Lambda);

  VectorXd d(2);
  d << 1.5, -0.5;
  const LyapunovSample zero = lyapunov_diagnostics(model, state, fe, d, d, gains);
  CHECK(zero.V == 0.0);
  CHECK(zero.Vdot_model == 0.0);

  oracle::Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const JointState s(rng.uniform_vec(2, -2, 2), rng.uniform_vec(2, -2, 2));
    ReferenceSample r = rest_reference(rng.uniform_vec(2, -2, 2));
    const FilteredError f = reference_filter(s, r, gains.Lambda);
    const LyapunovSample sample = lyapunov_diagnostics(
        model, s, f, rng.uniform_vec(2, -5, 5), rng.uniform_vec(2, -5, 5), gains);
    CHECK(sample.V >= 0.0);
    CHECK(sample.Vdot_model <= 0.0);
    CHECK(sample.sigma_norm == doctest::Approx(f.sigma.norm()));
  }
}

TEST_CASE("passivity residual: zero series and analytic exponential case") {
  const MatrixXd ki = MatrixXd::Identity(2, 2);
  const int rows = 2001;
  const double dt = 1e-3;
  VectorXd t(rows);
  MatrixXd sigma = MatrixXd::Zero(rows, 2);
  MatrixXd dtilde(rows, 2);
  for (int k = 0; k < rows; ++k) {
    t[k] = k * dt;
    dtilde.row(k) = Eigen::RowVector2d(1.0, 2.0);
  }
  // sigma identically zero: both sides of the audit vanish
  CHECK(passivity_residual(t, sigma, dtilde, ki) <= 1e-15);

  // dtilde(t) = e^-t [1, 2] with the update law forces sigma = dtilde
  // (K_I = I): the integrand -sigma'dtilde integrates to V1(t) - V1(0)
  // exactly, so only quadrature error remains.
  for (int k = 0; k < rows; ++k) {
    const double decay = std::exp(-t[k]);
    dtilde.row(k) = decay * Eigen::RowVector2d(1.0, 2.0);
    sigma.row(k) = dtilde.row(k);
  }
  CHECK(passivity_residual(t, sigma, dtilde, ki) <= 1e-6);

  CHECK_THROWS_AS(passivity_residual(VectorXd(), MatrixXd(), MatrixXd(), ki),
                  LogSchemaError);
}

TEST_CASE("workspace law: algebraic limit cases") {
  const PlanarArmModel model;
  ControllerGains gains = ControllerGains::isotropic(2, 4.0, 0.0, 2.0);
  gains.Ki.resize(0, 0);  // no observer

  VectorXd q(2);
  q << 0.5, 1.1;
  const VectorXd x = model.task_position(q);

  // on-target at rest: u reduces to gravity compensation (xi_ddot hold is
  // zero before the first step)
  const auto hold_ref = [&](double) {
    TaskSample s;
    s.x_d = x;
    s.xdot_d = VectorXd::Zero(2);
    return s;
  };
  WorkspaceLyapunovController ctl(model, gains, hold_ref, false, VectorXd());
  ControlStage stage{0.0, q, VectorXd::Zero(2), VectorXd()};
  const ControlOutput out = ctl.compute(stage);
  CHECK((out.u - model.gravity(q)).cwiseAbs().maxCoeff() <= 1e-12);

  // filter velocity equal to the joint velocity: the damping term vanishes
  // and u = C xi_dot + G (zero hold acceleration)
  VectorXd qdot(2);
  qdot << 0.3, -0.2;
  const VectorXd xdot = model.task_jacobian(q) * qdot;
  const auto moving_ref = [&](double) {
    TaskSample s;
    s.x_d = x;
    s.xdot_d = xdot;
    return s;
  };
  WorkspaceLyapunovController ctl2(model, gains, moving_ref, false, VectorXd());
  ControlStage stage2{0.0, q, qdot, VectorXd()};
  const ControlOutput out2 = ctl2.compute(stage2);
  const VectorXd expect =
      coriolis_matrix(model, q, qdot) * qdot + model.gravity(q);
  CHECK((out2.u - expect).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("workspace law tracks the figure over a short run") {
  const PlanarArmModel model;
  ControllerGains gains = ControllerGains::isotropic(2, 4.0, 0.0, 2.0);
  gains.Ki.resize(0, 0);
  const auto task_ref = [](double t) {
    const auto f = workspace_figure_reference(t);
    TaskSample s;
    s.x_d = Vector2d(f.x, f.y);
    s.xdot_d = Vector2d(f.xdot, f.ydot);
    return s;
  };
  WorkspaceLyapunovController ctl(model, gains, task_ref, false, VectorXd());

  const TaskSample start = task_ref(0.0);
  VectorXd y(4);
  y.head(2) =
      planar_inverse_kinematics(model.params(), Vector2d(start.x_d), ElbowBranch::kDown);
  y.tail(2).setZero();

  const double dt = 1e-3;
  const auto deriv = [&](double t, const VectorXd& s) {
    ControlStage stage{t, s.head(2), s.tail(2), VectorXd()};
    const ControlOutput out = ctl.compute(stage);
    VectorXd dy(4);
    dy.head(2) = s.tail(2);
    dy.tail(2) =
        forward_dynamics(model, s.head(2), s.tail(2), out.u, VectorXd::Zero(2));
    return dy;
  };
  for (int k = 0; k < 6000; ++k) {
    const double t = k * dt;
    ctl.begin_step(t, y.head(2), y.tail(2), dt);
    y = rk4_step(deriv, y, t, dt);
  }
  const auto target = task_ref(6.0);
  CHECK((model.task_position(y.head(2)) - target.x_d).norm() <= 5e-3);
}

TEST_CASE("computed-torque baseline: feedforward form and disturbance rejection") {
  const PlanarArmModel model;
  const ControllerGains gains = ControllerGains::isotropic(2, 2.0, 1.0, 2.0);

  // zero error, zero integral: pure feedforward M qddot_d + C qdot + G
  oracle::Rng rng(33);
  for (int i = 0; i < 10; ++i) {
    const VectorXd q = rng.uniform_vec(2, -1, 1);
    const VectorXd qdot = rng.uniform_vec(2, -1, 1);
    ReferenceSample ref;
    ref.q_d = q;
    ref.qdot_d = qdot;
    ref.qddot_d = rng.uniform_vec(2, -1, 1);
    const JointState state(q, qdot);
    const VectorXd u = inverse_dynamics_integral_control(model, state, ref, gains,
                                                         VectorXd::Zero(2));
    const VectorXd expect = model.mass_matrix(q) * ref.qddot_d +
                            coriolis_matrix(model, q, qdot) * qdot + model.gravity(q);
    CHECK((u - expect).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // constant disturbance: the integral action drives the error to zero
  VectorXd q_d(2);
  q_d << 0.6, 0.9;
  const ReferenceSample ref = rest_reference(q_d);
  const auto ref_fn = [&](double) { return ref; };
  InverseDynamicsIntegralController ctl(model, gains, ref_fn);
  VectorXd d(2);
  d << 1.0, 1.0;

  VectorXd y(6);
  y << q_d(0), q_d(1), 0, 0, 0, 0;
  const auto deriv = [&](double t, const VectorXd& s) {
    ControlStage stage{t, s.head(2), s.segment(2, 2), s.tail(2)};
    const ControlOutput out = ctl.compute(stage);
    VectorXd dy(6);
    dy.head(2) = stage.qdot;
    dy.segment(2, 2) = forward_dynamics(model, stage.q, stage.qdot, out.u, d);
    dy.tail(2) = out.internal_dot;
    return dy;
  };
  const double dt = 1e-3;
  for (int k = 0; k < 40000; ++k) y = rk4_step(deriv, y, k * dt, dt);
  CHECK((y.head(2) - q_d).norm() <= 5e-3);
}
