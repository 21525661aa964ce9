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
#include "steadyarm/dynamics/surgical_arm.hpp"
#include "steadyarm/kinematics/kinematics.hpp"
#include "steadyarm/signals/trajectory.hpp"

using namespace steadyarm;

TEST_CASE("planar forward kinematics: stretched and rotated configurations") {
  const PlanarArmModel model;
  VectorXd q(2);
  q << 0.0, 0.0;
  CHECK(model.task_position(q)(0) == doctest::Approx(2.0));
  CHECK(model.task_position(q)(1) == doctest::Approx(0.0));

  q << M_PI / 2, 0.0;
  CHECK(model.task_position(q)(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(model.task_position(q)(1) == doctest::Approx(2.0));
}

TEST_CASE("surgical tip radius is the remaining rod length, independent of angles") {
  const SurgicalArmModel model;
  const double l2 = model.params().l2;
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    VectorXd q(4);
    q << rng.uniform(-3.1, 3.1), rng.uniform(-1.5, 1.5), rng.uniform(-3.1, 3.1),
        rng.uniform(0.0, 0.25);
    CHECK(model.task_position(q).norm() == doctest::Approx(l2 - q[3]).epsilon(1e-12));
  }

  // roll does not move the tip
  VectorXd q(4);
  q << 0.3, 0.7, 0.0, 0.1;
  const VectorXd tip = model.task_position(q);
  q[2] = 2.5;
  CHECK((model.task_position(q) - tip).norm() == 0.0);
}

TEST_CASE("jacobian matches finite differences of the kinematics") {
  const PlanarArmModel planar;
  const SurgicalArmModel surgical;
  const ManipulatorModel* models[] = {&planar, &surgical};
  oracle::Rng rng(13);
  for (const auto* model : models) {
    for (int i = 0; i < 20; ++i) {
      const VectorXd q =
          rng.uniform_vec(model->sample_box_lower(), model->sample_box_upper());
      const MatrixXd j_fd = oracle::jacobian(
          [&](const VectorXd& x) { return model->task_position(x); }, q, 1e-6);
      CHECK((model->task_jacobian(q) - j_fd).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
}

TEST_CASE("jacobian consistency along a smooth joint path") {
  const PlanarArmModel model;
  const auto q_of_t = [](double t) {
    VectorXd q(2);
    q << 0.4 + 0.8 * std::sin(t), 1.1 + 0.5 * std::cos(2.0 * t);
    return q;
  };
  const double h = 1e-6;
  for (double t = 0.0; t < 3.0; t += 0.1) {
    const VectorXd qdot = (q_of_t(t + h) - q_of_t(t - h)) / (2.0 * h);
    const VectorXd xdot_fd =
        (model.task_position(q_of_t(t + h)) - model.task_position(q_of_t(t - h))) /
        (2.0 * h);
    const VectorXd xdot_jac = model.task_jacobian(q_of_t(t)) * qdot;
    CHECK((xdot_fd - xdot_jac).cwiseAbs().maxCoeff() <= 1e-5);
  }
}

TEST_CASE("jacobian bundle singularity metrics on the planar arm") {
  const PlanarArmModel model;
  VectorXd q(2);
  q << 0.7, 0.0;  // boundary singularity
  CHECK(jacobian(model, q).manipulability <= 1e-12);
  CHECK(jacobian(model, q).sigma_min <= 1e-12);

  q << 0.3, M_PI / 2;
  CHECK(jacobian(model, q).manipulability == doctest::Approx(1.0).epsilon(1e-12));

  // manipulability equals l1 l2 |sin q2| on a grid: vanishing exactly on
  // q2 = 0 mod pi and nowhere else
  for (int k = -36; k <= 36; ++k) {
    q << 0.2, k * M_PI / 36.0;
    CHECK(jacobian(model, q).manipulability ==
          doctest::Approx(std::abs(std::sin(q[1]))).epsilon(1e-9));
  }
}

TEST_CASE("damped pseudoinverse: identity, inverse consistency, frozen value") {
  CHECK((damped_pseudoinverse(MatrixXd::Identity(2, 2), 0.0) - MatrixXd::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  oracle::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    MatrixXd j(2, 2);
    j << rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2);
    if (std::abs(j.determinant()) < 0.1) continue;
    const MatrixXd pinv = damped_pseudoinverse(j, 0.0);
    CHECK((pinv * j - MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-10);
  }

  MatrixXd j(2, 2);
  j << 1, 0, 0, 0;
  const MatrixXd pinv = damped_pseudoinverse(j, 0.1);
  CHECK(pinv(0, 0) == doctest::Approx(1.0 / 1.01).epsilon(1e-12));
  CHECK(std::abs(pinv(0, 1)) + std::abs(pinv(1, 0)) + std::abs(pinv(1, 1)) <= 1e-14);

  CHECK_THROWS_WITH_AS(damped_pseudoinverse(j, 0.0), doctest::Contains("lambda"),
                       SingularJacobianError);
  CHECK_THROWS_AS(damped_pseudoinverse(j, -1.0), ContractViolation);
}

TEST_CASE("damped pseudoinverse stays finite near singularities when damped") {
  oracle::Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    // rank-1 2x3 matrix
    VectorXd u = rng.uniform_vec(2, -1, 1), v = rng.uniform_vec(3, -1, 1);
    const MatrixXd j = u * v.transpose();
    const MatrixXd pinv = damped_pseudoinverse(j, 1e-3);
    CHECK(pinv.allFinite());
  }
}

TEST_CASE("planar inverse kinematics round-trips and honors the branch") {
  const PlanarArmParams params;
  const PlanarArmModel model(params);
  oracle::Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.2, 1.95);
    const double ang = rng.uniform(-M_PI, M_PI);
    const Vector2d target(r * std::cos(ang), r * std::sin(ang));
    for (const auto branch : {ElbowBranch::kDown, ElbowBranch::kUp}) {
      const Vector2d q = planar_inverse_kinematics(params, target, branch);
      CHECK((model.task_position(q) - target).norm() <= 1e-9);
      if (branch == ElbowBranch::kDown) {
        CHECK(q[1] >= 0.0);
      } else {
        CHECK(q[1] <= 0.0);
      }
    }
  }
  CHECK_THROWS_AS(planar_inverse_kinematics(params, Vector2d(2.5, 0.0), ElbowBranch::kDown),
                  ReachabilityError);
}

TEST_CASE("singularity clearance: constant, figure, and radial paths") {
  const PlanarArmModel model;

  // constant nonsingular target: clearance equals that configuration's value
  const Vector2d fixed(1.0, 0.8);
  const auto constant = [&](double) { return fixed; };
  const auto clr = singularity_clearance(model, constant, 2.0, 0.1);
  const Vector2d q = planar_inverse_kinematics(model.params(), fixed, ElbowBranch::kDown);
  CHECK(clr.min_sigma_min == doctest::Approx(jacobian(model, q).sigma_min).epsilon(1e-12));

  // the bundled workspace figure stays clear of singularities
  const auto figure = [](double t) {
    const auto s = workspace_figure_reference(t);
    return Vector2d(s.x, s.y);
  };
  const auto fig_clr = singularity_clearance(model, figure, 20.0, 1e-2);
  CHECK(fig_clr.min_sigma_min > 0.05);

  // a radial path to the workspace boundary hits the stretch singularity
  const auto radial = [](double t) { return Vector2d(1.0 + t, 0.0); };
  const auto rad_clr = singularity_clearance(model, radial, 1.0, 1e-2);
  CHECK(rad_clr.min_manipulability <= 1e-6);

  const auto outside = [](double t) { return Vector2d(2.5 + t, 0.0); };
  CHECK_THROWS_AS(singularity_clearance(model, outside, 1.0, 0.5), ReachabilityError);
}
