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

#ifndef STEADYARM_CONTROL_REFERENCE_HPP_
#define STEADYARM_CONTROL_REFERENCE_HPP_

#include "steadyarm/common.hpp"
#include "steadyarm/dynamics/joint_state.hpp"

namespace steadyarm {

/// Desired joint position, velocity and acceleration at one instant.
struct ReferenceSample {
  VectorXd q_d;
  VectorXd qdot_d;
  VectorXd qddot_d;
};

/// Desired task-space position and velocity at one instant.
struct TaskSample {
  VectorXd x_d;
  VectorXd xdot_d;
};

/// The filtered-error variable set of the tracking laws:
///
///   qtilde = q - q_d
///   xi_dot = qdot_d - Lambda qtilde      (reference-filter velocity)
///   xi_ddot = qddot_d - Lambda qtilde_dot
///   sigma  = qdot - xi_dot = qtilde_dot + Lambda qtilde
///
/// The error-to-sigma map (sI + Lambda)^-1 is strictly proper and stable for
/// SPD Lambda, so driving sigma to zero drives both error components to zero.
struct FilteredError {
  VectorXd qtilde;
  VectorXd qtilde_dot;
  VectorXd sigma;
  VectorXd xi_dot;
  VectorXd xi_ddot;
};

inline FilteredError reference_filter(const JointState& state,
                                      const ReferenceSample& ref,
                                      const MatrixXd& lambda) {
  const auto n = state.q.size();
  require(ref.q_d.size() == n && ref.qdot_d.size() == n && ref.qddot_d.size() == n,
          "reference_filter: reference dimension mismatch");
  require(lambda.rows() == n && lambda.cols() == n,
          "reference_filter: Lambda dimension mismatch");
  FilteredError fe;
  fe.qtilde = state.q - ref.q_d;
  fe.qtilde_dot = state.qdot - ref.qdot_d;
  fe.xi_dot = ref.qdot_d - lambda * fe.qtilde;
  fe.xi_ddot = ref.qddot_d - lambda * fe.qtilde_dot;
  fe.sigma = state.qdot - fe.xi_dot;
  return fe;
}

}  // namespace steadyarm

#endif  // STEADYARM_CONTROL_REFERENCE_HPP_
