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

#include "steadyarm/control/gains.hpp"

#include <Eigen/Cholesky>

namespace steadyarm {

void check_spd(const MatrixXd& m, const std::string& name) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ContractViolation(name + " must be a nonempty square matrix");
  }
  if (!m.allFinite()) {
    throw ContractViolation(name + " contains non-finite entries");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ContractViolation(name + " is not symmetric");
  }
  Eigen::LLT<MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw ContractViolation(name + " is not positive definite");
  }
}

ControllerGains ControllerGains::isotropic(int n, double kd, double ki, double lambda) {
  ControllerGains g;
  g.Kd = kd * MatrixXd::Identity(n, n);
  g.Ki = ki * MatrixXd::Identity(n, n);
  g.Lambda = lambda * MatrixXd::Identity(n, n);
  return g;
}

void ControllerGains::validate(int n, bool require_ki) const {
  check_spd(Kd, "K_D");
  check_spd(Lambda, "Lambda");
  if (require_ki || has_ki()) {
    check_spd(Ki, "K_I");
  }
  if (Kd.rows() != n) throw ContractViolation("K_D dimension does not match the model DOF");
  if (Lambda.rows() != n) throw ContractViolation("Lambda dimension does not match the model DOF");
  if (has_ki() && Ki.rows() != n)
    throw ContractViolation("K_I dimension does not match the model DOF");
}

}  // namespace steadyarm
