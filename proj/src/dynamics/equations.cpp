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

#include "steadyarm/dynamics/equations.hpp"

#include <vector>

#include <Eigen/Cholesky>

namespace steadyarm {

MatrixXd coriolis_matrix(const ManipulatorModel& model, const VectorXd& q,
                         const VectorXd& qdot) {
  model.check_dof(q, "coriolis_matrix: q");
  model.check_dof(qdot, "coriolis_matrix: qdot");
  const int n = model.dof();

  std::vector<MatrixXd> dm(n);
  for (int k = 0; k < n; ++k) dm[k] = model.mass_matrix_partial(q, k);

  MatrixXd c = MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        sum += (dm[i](k, j) + dm[j](k, i) - dm[k](i, j)) * qdot[i];
      }
      c(k, j) = 0.5 * sum;
    }
  }
  return c;
}

VectorXd friction_force(const ManipulatorModel& model, const VectorXd& qdot) {
  model.check_dof(qdot, "friction_force: qdot");
  return model.friction().force(qdot);
}

VectorXd forward_dynamics(const ManipulatorModel& model, const VectorXd& q,
                          const VectorXd& qdot, const VectorXd& u, const VectorXd& d) {
  model.check_dof(q, "forward_dynamics: q");
  model.check_dof(qdot, "forward_dynamics: qdot");
  model.check_dof(u, "forward_dynamics: u");
  model.check_dof(d, "forward_dynamics: d");

  const VectorXd rhs = u + d - coriolis_matrix(model, q, qdot) * qdot -
                       model.gravity(q) - friction_force(model, qdot);
  Eigen::LLT<MatrixXd> llt(model.mass_matrix(q));
  if (llt.info() != Eigen::Success) {
    throw ModelInvariantError("forward_dynamics: inertia matrix is not positive definite");
  }
  return llt.solve(rhs);
}

}  // namespace steadyarm
