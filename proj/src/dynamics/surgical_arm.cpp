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

#include "steadyarm/dynamics/surgical_arm.hpp"

#include <cmath>

namespace steadyarm {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_positive(double value, const char* field) {
  if (!(value > 0.0)) {
    throw ContractViolation(std::string("SurgicalArmParams.") + field + " must be > 0");
  }
}
void check_nonnegative(double value, const char* field) {
  if (!(value >= 0.0)) {
    throw ContractViolation(std::string("SurgicalArmParams.") + field + " must be >= 0");
  }
}
}  // namespace

void SurgicalArmParams::validate() const {
  check_positive(m1, "m1");
  check_positive(m2, "m2");
  check_positive(m3, "m3");
  check_positive(m4, "m4");
  check_nonnegative(i1a, "i1a");
  check_nonnegative(i1t, "i1t");
  check_nonnegative(i2a, "i2a");
  check_nonnegative(i2t, "i2t");
  check_nonnegative(i3a, "i3a");
  check_nonnegative(i4a, "i4a");
  check_nonnegative(i4t, "i4t");
  check_positive(l1, "l1");
  check_positive(l2, "l2");
  check_positive(g, "g");
}

std::array<double, 4> kinetic_energy_components(const SurgicalArmParams& p,
                                                const JointState& state) {
  require(state.dof() == 4, "kinetic_energy_components: state must have 4 DOF");
  const double phi = state.q[1];
  const double rho = state.q[3];
  const double td = state.qdot[0];
  const double pd = state.qdot[1];
  const double ad = state.qdot[2];
  const double rd = state.qdot[3];

  const double cphi = std::cos(phi);
  const double sphi = std::sin(phi);
  // common factor phidot^2 + (thetadot sin phi)^2 of the transverse terms
  const double sweep = pd * pd + td * td * sphi * sphi;

  const double t1 = 0.5 * p.i1a * td * td * cphi * cphi +
                    0.5 * (p.i1t + p.m1 * (p.l1 / 2) * (p.l1 / 2)) * sweep;
  const double t2 = 0.5 * p.i2a * td * td * cphi * cphi +
                    0.5 * (p.i2t + p.m2 * (p.l2 - rho) * (p.l2 - rho)) * sweep +
                    0.5 * p.m2 * rd * rd;
  const double t3 = 0.5 * p.i3a * td * td;
  const double roll_rate = td * cphi + ad;
  const double t4 = 0.5 * p.i4a * roll_rate * roll_rate +
                    0.5 * (p.i4t + p.m4 * (p.l2 / 2 - rho) * (p.l2 / 2 - rho)) * sweep +
                    0.5 * p.m4 * rd * rd;
  return {t1, t2, t3, t4};
}

double total_kinetic_energy(const SurgicalArmParams& params, const JointState& state) {
  const auto t = kinetic_energy_components(params, state);
  return t[0] + t[1] + t[2] + t[3];
}

double potential_energy(const SurgicalArmParams& p, const VectorXd& q) {
  require(q.size() == 4, "potential_energy: q must have 4 entries");
  require_finite(q, "potential_energy: q");
  const double phi = q[1];
  const double rho = q[3];
  const double height_mass = p.m1 * p.l1 / 2 + p.m2 * (p.l2 - rho) + p.m4 * (p.l2 / 2 - rho);
  return height_mass * p.g * std::cos(phi);
}

SurgicalArmModel::SurgicalArmModel(SurgicalArmParams params) : params_(params) {
  params_.validate();
}

double SurgicalArmModel::transverse_inertia(double rho) const {
  const auto& p = params_;
  return p.i1t + p.m1 * (p.l1 / 2) * (p.l1 / 2) + p.i2t +
         p.m2 * (p.l2 - rho) * (p.l2 - rho) + p.i4t +
         p.m4 * (p.l2 / 2 - rho) * (p.l2 / 2 - rho);
}

double SurgicalArmModel::transverse_inertia_drho(double rho) const {
  const auto& p = params_;
  return -2.0 * p.m2 * (p.l2 - rho) - 2.0 * p.m4 * (p.l2 / 2 - rho);
}

// Collecting the quadratic velocity coefficients of the energy terms:
//   M_tt = (i1a + i2a + i4a) cos^2(phi) + i3a + B(rho) sin^2(phi)
//   M_ta = i4a cos(phi)                (roll coupling)
//   M_pp = B(rho),  M_aa = i4a,  M_rr = m2 + m4
// with B the transverse inertia. All other entries vanish.
MatrixXd SurgicalArmModel::mass_matrix(const VectorXd& q) const {
  check_dof(q, "SurgicalArmModel::mass_matrix");
  const auto& p = params_;
  const double phi = q[1];
  const double rho = q[3];
  const double cphi = std::cos(phi);
  const double sphi = std::sin(phi);
  const double axial = p.i1a + p.i2a + p.i4a;
  const double b = transverse_inertia(rho);

  MatrixXd m = MatrixXd::Zero(4, 4);
  m(0, 0) = axial * cphi * cphi + p.i3a + b * sphi * sphi;
  m(0, 2) = p.i4a * cphi;
  m(2, 0) = m(0, 2);
  m(1, 1) = b;
  m(2, 2) = p.i4a;
  m(3, 3) = p.m2 + p.m4;
  return m;
}

MatrixXd SurgicalArmModel::mass_matrix_partial(const VectorXd& q, int coord) const {
  check_dof(q, "SurgicalArmModel::mass_matrix_partial");
  require(coord >= 0 && coord < 4, "SurgicalArmModel::mass_matrix_partial: bad coordinate");
  const auto& p = params_;
  const double phi = q[1];
  const double rho = q[3];
  MatrixXd dm = MatrixXd::Zero(4, 4);
  if (coord == 1) {  // d/dphi
    const double axial = p.i1a + p.i2a + p.i4a;
    dm(0, 0) = 2.0 * std::sin(phi) * std::cos(phi) * (transverse_inertia(rho) - axial);
    dm(0, 2) = -p.i4a * std::sin(phi);
    dm(2, 0) = dm(0, 2);
  } else if (coord == 3) {  // d/drho
    dm(0, 0) = transverse_inertia_drho(rho) * std::sin(phi) * std::sin(phi);
    dm(1, 1) = transverse_inertia_drho(rho);
  }
  return dm;
}

VectorXd SurgicalArmModel::gravity(const VectorXd& q) const {
  check_dof(q, "SurgicalArmModel::gravity");
  const auto& p = params_;
  const double phi = q[1];
  const double rho = q[3];
  const double height_mass = p.m1 * p.l1 / 2 + p.m2 * (p.l2 - rho) + p.m4 * (p.l2 / 2 - rho);
  VectorXd grad = VectorXd::Zero(4);
  grad[1] = -height_mass * p.g * std::sin(phi);
  grad[3] = -(p.m2 + p.m4) * p.g * std::cos(phi);
  return grad;
}

double SurgicalArmModel::potential_energy(const VectorXd& q) const {
  return steadyarm::potential_energy(params_, q);
}

// Tip at radius (l2 - rho) along the rod axis: azimuth theta about the
// vertical, elevation phi measured from the vertical (+z up). Roll does not
// move the tip point.
VectorXd SurgicalArmModel::task_position(const VectorXd& q) const {
  check_dof(q, "SurgicalArmModel::task_position");
  const double theta = q[0];
  const double phi = q[1];
  const double r = params_.l2 - q[3];
  VectorXd x(3);
  x << r * std::sin(phi) * std::cos(theta), r * std::sin(phi) * std::sin(theta),
      r * std::cos(phi);
  return x;
}

MatrixXd SurgicalArmModel::task_jacobian(const VectorXd& q) const {
  check_dof(q, "SurgicalArmModel::task_jacobian");
  const double theta = q[0];
  const double phi = q[1];
  const double r = params_.l2 - q[3];
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  MatrixXd j = MatrixXd::Zero(3, 4);
  j(0, 0) = -r * sp * st;
  j(1, 0) = r * sp * ct;
  j(0, 1) = r * cp * ct;
  j(1, 1) = r * cp * st;
  j(2, 1) = -r * sp;
  j(0, 3) = -sp * ct;
  j(1, 3) = -sp * st;
  j(2, 3) = -cp;
  return j;
}

// theta, alpha in [-pi, pi]; phi in [-pi/2, pi/2]; rho in [0, 0.25] m so the
// (l2/2 - rho) lever stays meaningful.
VectorXd SurgicalArmModel::sample_box_lower() const {
  VectorXd lo(4);
  lo << -kPi, -kPi / 2, -kPi, 0.0;
  return lo;
}

VectorXd SurgicalArmModel::sample_box_upper() const {
  VectorXd hi(4);
  hi << kPi, kPi / 2, kPi, 0.25;
  return hi;
}

}  // namespace steadyarm
