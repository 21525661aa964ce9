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

#ifndef STEADYARM_SIM_INTEGRATOR_HPP_
#define STEADYARM_SIM_INTEGRATOR_HPP_

#include <utility>

#include "steadyarm/common.hpp"

namespace steadyarm {

/// Raised by the integrator when a stage derivative stops being finite.
/// Carries the step time and the state snapshot at the step start.
class IntegrationDivergence : public std::runtime_error {
 public:
  IntegrationDivergence(double t, VectorXd state)
      : std::runtime_error("non-finite derivative at t = " + std::to_string(t)),
        t_(t),
        state_(std::move(state)) {}
  double t() const { return t_; }
  const VectorXd& state() const { return state_; }

 private:
  double t_;
  VectorXd state_;
};

/// One classical 4th-order Runge-Kutta step for y' = f(t, y).
template <typename F>
VectorXd rk4_step(F&& f, const VectorXd& y, double t, double dt) {
  require(dt > 0.0, "rk4_step: dt must be > 0");
  const auto check = [&](const VectorXd& k) {
    if (!k.allFinite()) throw IntegrationDivergence(t, y);
    return k;
  };
  const VectorXd k1 = check(f(t, y));
  const VectorXd k2 = check(f(t + dt / 2, VectorXd(y + (dt / 2) * k1)));
  const VectorXd k3 = check(f(t + dt / 2, VectorXd(y + (dt / 2) * k2)));
  const VectorXd k4 = check(f(t + dt, VectorXd(y + dt * k3)));
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace steadyarm

#endif  // STEADYARM_SIM_INTEGRATOR_HPP_
