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

#ifndef STEADYARM_DYNAMICS_SURGICAL_ARM_HPP_
#define STEADYARM_DYNAMICS_SURGICAL_ARM_HPP_

#include <array>
#include <string>

#include "steadyarm/dynamics/manipulator_model.hpp"

namespace steadyarm {

/// Physical parameters of the 4-DOF spherical-coordinate surgical arm.
///
/// Coordinates: theta (azimuth, rad), phi (elevation from the vertical, rad),
/// alpha (instrument roll, rad), rho (insertion depth along the rod, m).
/// Everything is SI: masses kg, inertias kg*m^2, lengths m. Defaults are the
/// measured prototype values (axial/transverse inertias per unit).
struct SurgicalArmParams {
  double m1 = 1.541;   ///< supporting rod mass
  double m2 = 1.613;   ///< insertion/instrument drive unit mass
  double m3 = 0.915;   ///< base azimuth rotation unit mass
  double m4 = 0.089;   ///< surgical instrument mass
  double i1a = 32045.478e-6;
  double i1t = 31429.513e-6;
  double i2a = 6317.537e-6;
  double i2t = 2401.198e-6;
  double i3a = 4249.517e-6;
  double i4a = 2681.116e-6;
  double i4t = 1358.560e-6;
  double l1 = 0.520;   ///< supporting rod length
  double l2 = 0.300;   ///< instrument rod length
  double g = 9.81;

  /// Throws ContractViolation naming the offending field.
  void validate() const;
};

/// The four kinetic-energy terms of the arm (rod, insertion unit, azimuth
/// base, instrument), J each, evaluated from the energy expressions directly.
/// This is deliberately an independent route from mass_matrix(); tests
/// cross-check 0.5 qdot' M qdot against the sum of these terms.
std::array<double, 4> kinetic_energy_components(const SurgicalArmParams& params,
                                                const JointState& state);

/// Sum of the four kinetic-energy terms, J.
double total_kinetic_energy(const SurgicalArmParams& params, const JointState& state);

/// Gravitational potential, J. Zero reference at phi = pi/2 (rod horizontal).
double potential_energy(const SurgicalArmParams& params, const VectorXd& q);

/// 4-DOF spherical-coordinate arm model. Task space is the 3D tip position;
/// the roll coordinate alpha does not move the tip.
class SurgicalArmModel : public ManipulatorModel {
 public:
  explicit SurgicalArmModel(SurgicalArmParams params = {});

  int dof() const override { return 4; }
  int task_dim() const override { return 3; }
  const std::string& name() const override { return name_; }

  MatrixXd mass_matrix(const VectorXd& q) const override;
  MatrixXd mass_matrix_partial(const VectorXd& q, int coord) const override;
  VectorXd gravity(const VectorXd& q) const override;
  double potential_energy(const VectorXd& q) const override;

  VectorXd task_position(const VectorXd& q) const override;
  MatrixXd task_jacobian(const VectorXd& q) const override;

  VectorXd sample_box_lower() const override;
  VectorXd sample_box_upper() const override;

  const SurgicalArmParams& params() const { return params_; }

 private:
  // Transverse inertia about the pivot at insertion depth rho, the common
  // factor of the phidot^2 + (thetadot sin phi)^2 terms.
  double transverse_inertia(double rho) const;
  double transverse_inertia_drho(double rho) const;

  SurgicalArmParams params_;
  std::string name_ = "surgical_arm";
};

}  // namespace steadyarm

#endif  // STEADYARM_DYNAMICS_SURGICAL_ARM_HPP_
