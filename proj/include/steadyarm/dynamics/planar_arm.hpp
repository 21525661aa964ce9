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

#ifndef STEADYARM_DYNAMICS_PLANAR_ARM_HPP_
#define STEADYARM_DYNAMICS_PLANAR_ARM_HPP_

#include <string>

#include "steadyarm/dynamics/manipulator_model.hpp"

namespace steadyarm {

/// Two-link planar arm in a vertical plane, joint angles measured CCW from
/// the +x axis (gravity along -y). Defaults are the unit textbook arm: point
/// masses at the link ends, m = l = 1, used by the workspace-control
/// scenarios.
struct PlanarArmParams {
  double m1 = 1.0;
  double m2 = 1.0;
  double l1 = 1.0;
  double l2 = 1.0;
  double lc1 = 1.0;   ///< COM offset along link 1, 0 <= lc1 <= l1
  double lc2 = 1.0;
  double izz1 = 0.0;  ///< link inertia about its COM
  double izz2 = 0.0;
  double g = 9.81;

  void validate() const;
};

class PlanarArmModel : public ManipulatorModel {
 public:
  explicit PlanarArmModel(PlanarArmParams params = {});

  int dof() const override { return 2; }
  int task_dim() const override { return 2; }
  const std::string& name() const override { return name_; }

  MatrixXd mass_matrix(const VectorXd& q) const override;
  MatrixXd mass_matrix_partial(const VectorXd& q, int coord) const override;
  VectorXd gravity(const VectorXd& q) const override;
  double potential_energy(const VectorXd& q) const override;

  VectorXd task_position(const VectorXd& q) const override;
  MatrixXd task_jacobian(const VectorXd& q) const override;

  VectorXd sample_box_lower() const override;
  VectorXd sample_box_upper() const override;

  const PlanarArmParams& params() const { return params_; }

 private:
  PlanarArmParams params_;
  // inertia constants: M = [a + 2b c2, d + b c2; d + b c2, d]
  double a_ = 0, b_ = 0, d_ = 0;
  std::string name_ = "planar_arm";
};

}  // namespace steadyarm

#endif  // STEADYARM_DYNAMICS_PLANAR_ARM_HPP_
