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

#ifndef STEADYARM_CONTROL_GAINS_HPP_
#define STEADYARM_CONTROL_GAINS_HPP_

#include <string>

#include "steadyarm/common.hpp"

namespace steadyarm {

/// Checks symmetry (to machine precision) and positive definiteness (via
/// Cholesky). Throws ContractViolation naming `name` on failure.
void check_spd(const MatrixXd& m, const std::string& name);

/// Tracking-controller gain set. All three are symmetric positive definite:
/// K_D damps the filtered error, K_I drives the disturbance observer (or the
/// baseline's integral action), Lambda shapes the error filter. K_I may be
/// left empty for controllers that do not use it.
struct ControllerGains {
  MatrixXd Kd;
  MatrixXd Ki;
  MatrixXd Lambda;

  static ControllerGains isotropic(int n, double kd, double ki, double lambda);

  bool has_ki() const { return Ki.size() > 0; }
  /// Throws ContractViolation naming the offending matrix.
  void validate(int n, bool require_ki) const;
};

}  // namespace steadyarm

#endif  // STEADYARM_CONTROL_GAINS_HPP_
