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

#ifndef STEADYARM_DYNAMICS_EQUATIONS_HPP_
#define STEADYARM_DYNAMICS_EQUATIONS_HPP_

#include "steadyarm/dynamics/manipulator_model.hpp"

namespace steadyarm {

/// Coriolis/centripetal matrix built from the Christoffel symbols of M:
///
///   C_kj = 0.5 * sum_i (dM_kj/dq_i + dM_ki/dq_j - dM_ij/dq_k) qdot_i
///
/// This construction makes Mdot - 2C skew-symmetric, which the passivity
/// argument of the tracking controller relies on.
MatrixXd coriolis_matrix(const ManipulatorModel& model, const VectorXd& q,
                         const VectorXd& qdot);

/// Viscous friction generalized force of the model, R*qdot.
VectorXd friction_force(const ManipulatorModel& model, const VectorXd& qdot);

/// Joint accelerations from M qddot = u + d - C qdot - G - R qdot, solved with
/// a Cholesky factorization (M is SPD by model invariant; never inverted
/// explicitly). Throws ModelInvariantError if the factorization fails.
VectorXd forward_dynamics(const ManipulatorModel& model, const VectorXd& q,
                          const VectorXd& qdot, const VectorXd& u, const VectorXd& d);

}  // namespace steadyarm

#endif  // STEADYARM_DYNAMICS_EQUATIONS_HPP_
