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

#include "steadyarm/dynamics/planar_arm.hpp"

#include <cmath>

namespace steadyarm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void PlanarArmParams::validate() const {
  auto positive = [](double v, const char* field) {
    if (!(v > 0.0))
      throw ContractViolation(std::string("PlanarArmParams.") + field + " must be > 0");
  };
  positive(m1, "m1");
  positive(m2, "m2");
  positive(l1, "l1");
  positive(l2, "l2");
  positive(g, "g");
  if (!(lc1 >= 0.0 && lc1 <= l1))
    throw ContractViolation("PlanarArmParams.lc1 must lie in [0, l1]");
  if (!(lc2 >= 0.0 && lc2 <= l2))
    throw ContractViolation("PlanarArmParams.lc2 must lie in [0, l2]");
  if (!(izz1 >= 0.0)) throw ContractViolation("PlanarArmParams.izz1 must be >= 0");
  if (!(izz2 >= 0.0)) throw ContractViolation("PlanarArmParams.izz2 must be >= 0");
  // A zero-inertia second link (izz2 = 0, lc2 = 0) would make M singular.
  if (izz2 == 0.0 && lc2 == 0.0)
    throw ContractViolation("PlanarArmParams: izz2 and lc2 cannot both be zero");
}

PlanarArmModel::PlanarArmModel(PlanarArmParams params) : params_(params) {
  params_.validate();
  const auto& p = params_;
  a_ = p.izz1 + p.izz2 + p.m1 * p.lc1 * p.lc1 + p.m2 * (p.l1 * p.l1 + p.lc2 * p.lc2);
  b_ = p.m2 * p.l1 * p.lc2;
  d_ = p.izz2 + p.m2 * p.lc2 * p.lc2;
}

MatrixXd PlanarArmModel::mass_matrix(const VectorXd& q) const {
  check_dof(q, "PlanarArmModel::mass_matrix");
  const double c2 = std::cos(q[1]);
  MatrixXd m(2, 2);
  m(0, 0) = a_ + 2.0 * b_ * c2;
  m(0, 1) = d_ + b_ * c2;
  m(1, 0) = m(0, 1);
  m(1, 1) = d_;
  return m;
}

MatrixXd PlanarArmModel::mass_matrix_partial(const VectorXd& q, int coord) const {
  check_dof(q, "PlanarArmModel::mass_matrix_partial");
  require(coord >= 0 && coord < 2, "PlanarArmModel::mass_matrix_partial: bad coordinate");
  MatrixXd dm = MatrixXd::Zero(2, 2);
  if (coord == 1) {
    const double s2 = std::sin(q[1]);
    dm(0, 0) = -2.0 * b_ * s2;
    dm(0, 1) = -b_ * s2;
    dm(1, 0) = dm(0, 1);
  }
  return dm;
}

VectorXd PlanarArmModel::gravity(const VectorXd& q) const {
  check_dof(q, "PlanarArmModel::gravity");
  const auto& p = params_;
  const double c1 = std::cos(q[0]);
  const double c12 = std::cos(q[0] + q[1]);
  VectorXd grad(2);
  grad[0] = (p.m1 * p.lc1 + p.m2 * p.l1) * p.g * c1 + p.m2 * p.lc2 * p.g * c12;
  grad[1] = p.m2 * p.lc2 * p.g * c12;
  return grad;
}

double PlanarArmModel::potential_energy(const VectorXd& q) const {
  check_dof(q, "PlanarArmModel::potential_energy");
  const auto& p = params_;
  const double s1 = std::sin(q[0]);
  const double s12 = std::sin(q[0] + q[1]);
  return (p.m1 * p.lc1 + p.m2 * p.l1) * p.g * s1 + p.m2 * p.lc2 * p.g * s12;
}

VectorXd PlanarArmModel::task_position(const VectorXd& q) const {
  check_dof(q, "PlanarArmModel::task_position");
  const auto& p = params_;
  VectorXd x(2);
  x << p.l1 * std::cos(q[0]) + p.l2 * std::cos(q[0] + q[1]),
      p.l1 * std::sin(q[0]) + p.l2 * std::sin(q[0] + q[1]);
  return x;
}

MatrixXd PlanarArmModel::task_jacobian(const VectorXd& q) const {
  check_dof(q, "PlanarArmModel::task_jacobian");
  const auto& p = params_;
  const double s1 = std::sin(q[0]), c1 = std::cos(q[0]);
  const double s12 = std::sin(q[0] + q[1]), c12 = std::cos(q[0] + q[1]);
  MatrixXd j(2, 2);
  j(0, 0) = -p.l1 * s1 - p.l2 * s12;
  j(0, 1) = -p.l2 * s12;
  j(1, 0) = p.l1 * c1 + p.l2 * c12;
  j(1, 1) = p.l2 * c12;
  return j;
}

VectorXd PlanarArmModel::sample_box_lower() const {
  VectorXd lo(2);
  lo << -kPi, -kPi;
  return lo;
}

VectorXd PlanarArmModel::sample_box_upper() const {
  VectorXd hi(2);
  hi << kPi, kPi;
  return hi;
}

}  // namespace steadyarm
