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
#include <memory>

#include "oracles.hpp"
#include "steadyarm/dynamics/equations.hpp"
#include "steadyarm/dynamics/planar_arm.hpp"
#include "steadyarm/dynamics/surgical_arm.hpp"
#include "steadyarm/sim/integrator.hpp"

using namespace steadyarm;

namespace {

VectorXd vec4(double a, double b, double c, double d) {
  VectorXd v(4);
  v << a, b, c, d;
  return v;
}

std::vector<std::unique_ptr<ManipulatorModel>> both_models() {
  std::vector<std::unique_ptr<ManipulatorModel>> models;
  models.push_back(std::make_unique<PlanarArmModel>());
  models.push_back(std::make_unique<SurgicalArmModel>());
  return models;
}

}  // namespace

TEST_CASE("surgical arm default parameters are the SI-converted prototype values") {
  const SurgicalArmParams p;
  CHECK(p.i1a == doctest::Approx(32045.478e-6).epsilon(1e-12));
  CHECK(p.i3a == doctest::Approx(4249.517e-6).epsilon(1e-12));
  CHECK(p.i4a == doctest::Approx(2681.116e-6).epsilon(1e-12));
  CHECK(p.l1 == doctest::Approx(0.520));
  CHECK(p.l2 == doctest::Approx(0.300));
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("parameter validation names the offending field") {
  SurgicalArmParams p;
  p.m2 = -1.0;
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("m2"), ContractViolation);

  PlanarArmParams pp;
  pp.lc1 = 2.0;  // beyond l1
  CHECK_THROWS_WITH_AS(pp.validate(), doctest::Contains("lc1"), ContractViolation);
}

TEST_CASE("joint state checks dimensions and finiteness") {
  CHECK_THROWS_AS(JointState(VectorXd::Zero(3), VectorXd::Zero(4)), ContractViolation);
  VectorXd bad = VectorXd::Zero(4);
  bad[2] = std::nan("");
  CHECK_THROWS_AS(JointState(bad, VectorXd::Zero(4)), ContractViolation);
}

TEST_CASE("kinetic energy components: zero velocity gives zero energy") {
  const SurgicalArmParams p;
  oracle::Rng rng(11);
  for (int i = 0; i < 5; ++i) {
    const JointState state(rng.uniform_vec(4, -1.0, 1.0), VectorXd::Zero(4));
    const auto t = kinetic_energy_components(p, state);
    for (double ti : t) CHECK(ti == 0.0);
    CHECK(total_kinetic_energy(p, state) == 0.0);
  }
}

TEST_CASE("kinetic energy components: frozen values") {
  const SurgicalArmParams p;
  // pure azimuth spin at the zero configuration: the base-unit term is
  // 0.5 * i3a
  const JointState spin(VectorXd::Zero(4), vec4(1, 0, 0, 0));
  CHECK(kinetic_energy_components(p, spin)[2] ==
        doctest::Approx(2.1247585e-3).epsilon(1e-12));

  // pure insertion at 1 m/s: only the translational halves of the insertion
  // unit and instrument terms survive, 0.5 (m2 + m4)
  const JointState slide(VectorXd::Zero(4), vec4(0, 0, 0, 1));
  const auto t = kinetic_energy_components(p, slide);
  CHECK(t[0] == 0.0);
  CHECK(t[2] == 0.0);
  CHECK(t[1] + t[3] == doctest::Approx(0.851).epsilon(1e-12));
}

TEST_CASE("total kinetic energy equals the sum of components and the quadratic form") {
  const SurgicalArmParams p;
  const SurgicalArmModel model(p);
  oracle::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const VectorXd q = rng.uniform_vec(model.sample_box_lower(), model.sample_box_upper());
    const VectorXd qd = rng.uniform_vec(4, -2.0, 2.0);
    const JointState state(q, qd);
    const auto t = kinetic_energy_components(p, state);
    const double total = total_kinetic_energy(p, state);
    CHECK(total == doctest::Approx(t[0] + t[1] + t[2] + t[3]).epsilon(1e-15));
    // independent route: 0.5 qd' M qd from the hand-derived inertia matrix
    CHECK(total == doctest::Approx(model.kinetic_energy(q, qd)).epsilon(1e-10));
  }
}

TEST_CASE("potential energy: frozen value and symmetries") {
  const SurgicalArmParams p;
  CHECK(potential_energy(p, VectorXd::Zero(4)) == doctest::Approx(8.8085).epsilon(1e-4));

  oracle::Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const double rho = rng.uniform(0.0, 0.25);
    // horizontal rod: zero height for every mass
    VectorXd q = vec4(rng.uniform(-3, 3), M_PI / 2, rng.uniform(-3, 3), rho);
    CHECK(potential_energy(p, q) == doctest::Approx(0.0).epsilon(1e-12));
    // even in the elevation angle
    const double phi = rng.uniform(-1.5, 1.5);
    VectorXd qp = vec4(0, phi, 0, rho), qm = vec4(0, -phi, 0, rho);
    CHECK(potential_energy(p, qp) == doctest::Approx(potential_energy(p, qm)));
  }
}

TEST_CASE("mass matrix: symmetry, SPD, frozen roll entry") {
  const SurgicalArmModel surgical;
  CHECK(surgical.mass_matrix(VectorXd::Zero(4))(2, 2) ==
        doctest::Approx(2.681116e-3).epsilon(1e-12));

  for (const auto& model : both_models()) {
    oracle::Rng rng(47);
    for (int i = 0; i < 300; ++i) {
      const VectorXd q =
          rng.uniform_vec(model->sample_box_lower(), model->sample_box_upper());
      const MatrixXd m = model->mass_matrix(q);
      CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
      Eigen::LLT<MatrixXd> llt(m);
      CHECK(llt.info() == Eigen::Success);
    }
  }
}

TEST_CASE("mass matrix matches the velocity Hessian of the kinetic energy") {
  for (const auto& model : both_models()) {
    oracle::Rng rng(59);
    for (int i = 0; i < 20; ++i) {
      const VectorXd q =
          rng.uniform_vec(model->sample_box_lower(), model->sample_box_upper());
      const VectorXd qd = rng.uniform_vec(model->dof(), -1.0, 1.0);
      const auto energy = [&](const VectorXd& v) { return model->kinetic_energy(q, v); };
      // T is quadratic in the velocities, so the central stencil is exact up
      // to roundoff; h only balances cancellation.
      const MatrixXd h_fd = oracle::hessian(energy, qd, 1e-3);
      const MatrixXd m = model->mass_matrix(q);
      const double rel =
          (m - h_fd).cwiseAbs().maxCoeff() / std::max(1.0, m.cwiseAbs().maxCoeff());
      CHECK(rel <= 1e-6);
    }
  }

  // the surgical arm's energy-expression route must agree with its M route
  const SurgicalArmModel model;
  oracle::Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    const VectorXd q = rng.uniform_vec(model.sample_box_lower(), model.sample_box_upper());
    const VectorXd qd = rng.uniform_vec(4, -1.0, 1.0);
    const auto energy = [&](const VectorXd& v) {
      return total_kinetic_energy(model.params(), JointState(q, v));
    };
    const MatrixXd h_fd = oracle::hessian(energy, qd, 1e-3);
    const double rel = (model.mass_matrix(q) - h_fd).cwiseAbs().maxCoeff() /
                       std::max(1.0, h_fd.cwiseAbs().maxCoeff());
    CHECK(rel <= 1e-6);
  }
}

TEST_CASE("mass matrix closed-form partials match finite differences") {
  for (const auto& model : both_models()) {
    oracle::Rng rng(67);
    for (int i = 0; i < 10; ++i) {
      const VectorXd q =
          rng.uniform_vec(model->sample_box_lower(), model->sample_box_upper());
      for (int k = 0; k < model->dof(); ++k) {
        VectorXd dir = VectorXd::Zero(model->dof());
        dir[k] = 1.0;
        const MatrixXd fd = oracle::matrix_flow_derivative(
            [&](const VectorXd& x) { return model->mass_matrix(x); }, q, dir, 1e-6);
        CHECK((model->mass_matrix_partial(q, k) - fd).cwiseAbs().maxCoeff() <= 1e-7);
      }
    }
  }
}

TEST_CASE("coriolis matrix: zero velocity, skew-symmetry, Christoffel identity") {
  for (const auto& model : both_models()) {
    const int n = model->dof();
    oracle::Rng rng(71);

    CHECK(coriolis_matrix(*model, VectorXd::Constant(n, 0.3), VectorXd::Zero(n))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    const auto mass = [&](const VectorXd& x) { return model->mass_matrix(x); };
    for (int i = 0; i < 100; ++i) {
      const VectorXd q =
          rng.uniform_vec(model->sample_box_lower(), model->sample_box_upper());
      const VectorXd qd = rng.uniform_vec(n, -1.0, 1.0);
      const VectorXd x = rng.unit_vec(n);
      const MatrixXd c = coriolis_matrix(*model, q, qd);
      const MatrixXd mdot_fd = oracle::matrix_flow_derivative(mass, q, qd, 1e-5);
      CHECK(std::abs(x.dot((mdot_fd - 2.0 * c) * x)) <= 1e-9);
      const double scale = std::max(1.0, mdot_fd.cwiseAbs().maxCoeff());
      CHECK((mdot_fd - c - c.transpose()).cwiseAbs().maxCoeff() <= 1e-6 * scale);
    }
  }
}

TEST_CASE("gravity vector: structural zeros and gradient oracle") {
  const SurgicalArmModel surgical;
  oracle::Rng rng(83);
  for (int i = 0; i < 10; ++i) {
    const VectorXd q =
        rng.uniform_vec(surgical.sample_box_lower(), surgical.sample_box_upper());
    const VectorXd g = surgical.gravity(q);
    CHECK(g[0] == 0.0);  // potential independent of azimuth
    CHECK(g[2] == 0.0);  // and of roll
  }
  VectorXd upright = VectorXd::Zero(4);
  CHECK(surgical.gravity(upright)[1] == 0.0);

  for (const auto& model : both_models()) {
    for (int i = 0; i < 20; ++i) {
      const VectorXd q =
          rng.uniform_vec(model->sample_box_lower(), model->sample_box_upper());
      const VectorXd g_fd = oracle::gradient(
          [&](const VectorXd& x) { return model->potential_energy(x); }, q, 1e-6);
      CHECK((model->gravity(q) - g_fd).cwiseAbs().maxCoeff() <= 1e-7);
    }
  }
}

TEST_CASE("friction force") {
  SurgicalArmModel model;
  CHECK(friction_force(model, vec4(1, -2, 3, -4)).cwiseAbs().maxCoeff() == 0.0);

  model.set_friction(FrictionModel(vec4(0.1, 0.1, 0.1, 0.1)));
  const VectorXd f = friction_force(model, vec4(1, 0, 0, 0));
  CHECK(f[0] == doctest::Approx(0.1));
  CHECK(f.tail(3).cwiseAbs().maxCoeff() == 0.0);

  oracle::Rng rng(89);
  for (int i = 0; i < 20; ++i) {
    const VectorXd qd = rng.uniform_vec(4, -3.0, 3.0);
    const VectorXd force = friction_force(model, qd);
    for (int k = 0; k < 4; ++k) {
      CHECK(force[k] * qd[k] >= 0.0);  // dissipative per coordinate
    }
  }

  CHECK_THROWS_AS(FrictionModel(vec4(-0.1, 0, 0, 0)), ContractViolation);
}

TEST_CASE("forward dynamics: gravity compensation and disturbance additivity") {
  for (const auto& model : both_models()) {
    const int n = model->dof();
    oracle::Rng rng(97);
    for (int i = 0; i < 10; ++i) {
      const VectorXd q =
          rng.uniform_vec(model->sample_box_lower(), model->sample_box_upper());
      const VectorXd zero = VectorXd::Zero(n);
      const VectorXd g = model->gravity(q);
      CHECK(forward_dynamics(*model, q, zero, g, zero).cwiseAbs().maxCoeff() <= 1e-14);
      // the disturbance enters additively with the input
      CHECK(forward_dynamics(*model, q, zero, zero, g).cwiseAbs().maxCoeff() <= 1e-14);
    }
  }

  const SurgicalArmModel model;
  VectorXd bad = VectorXd::Zero(4);
  bad[0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(
      forward_dynamics(model, bad, VectorXd::Zero(4), VectorXd::Zero(4), VectorXd::Zero(4)),
      ContractViolation);
}

TEST_CASE("free fall conserves energy; viscous friction dissipates it") {
  const SurgicalArmModel model;
  const int n = 4;
  const auto deriv = [&](double, const VectorXd& y) {
    VectorXd dy(2 * n);
    dy.head(n) = y.tail(n);
    dy.tail(n) = forward_dynamics(model, y.head(n), y.tail(n), VectorXd::Zero(n),
                                  VectorXd::Zero(n));
    return dy;
  };

  VectorXd y = VectorXd::Zero(2 * n);
  y[1] = 0.3;  // elevation offset, at rest
  const double e0 = model.total_energy(y.head(n), y.tail(n));
  const double dt = 1e-4;
  for (int k = 0; k < 10000; ++k) y = rk4_step(deriv, y, k * dt, dt);
  const double e1 = model.total_energy(y.head(n), y.tail(n));
  CHECK(std::abs(e1 - e0) / std::abs(e0) <= 1e-6);

  SurgicalArmModel damped;
  damped.set_friction(FrictionModel(vec4(0.2, 0.2, 0.2, 0.2)));
  const auto deriv_damped = [&](double, const VectorXd& s) {
    VectorXd dy(2 * n);
    dy.head(n) = s.tail(n);
    dy.tail(n) = forward_dynamics(damped, s.head(n), s.tail(n), VectorXd::Zero(n),
                                  VectorXd::Zero(n));
    return dy;
  };
  y = VectorXd::Zero(2 * n);
  y[1] = 0.3;
  double prev = damped.total_energy(y.head(n), y.tail(n));
  for (int k = 0; k < 2000; ++k) {
    y = rk4_step(deriv_damped, y, k * dt, dt);
    const double e = damped.total_energy(y.head(n), y.tail(n));
    CHECK(e <= prev + 1e-12 * std::max(1.0, std::abs(prev)));
    prev = e;
  }
}
