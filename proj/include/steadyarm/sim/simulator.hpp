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

#ifndef STEADYARM_SIM_SIMULATOR_HPP_
#define STEADYARM_SIM_SIMULATOR_HPP_

#include <memory>

#include "steadyarm/sim/metrics.hpp"
#include "steadyarm/sim/scenario.hpp"

namespace steadyarm {

struct SimResult {
  SimLog log;
  Metrics metrics;
};

/// Raised when the closed loop blows past the configured state bound or
/// produces non-finite derivatives. Carries the time of failure and the log
/// rows recorded up to that point.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(double t, const std::string& message, SimLog partial)
      : std::runtime_error("diverged at t = " + std::to_string(t) + ": " + message),
        t_(t),
        partial_(std::move(partial)) {}

  double time() const { return t_; }
  const SimLog& partial_log() const { return partial_; }

 private:
  double t_;
  SimLog partial_;
};

/// Integrates the closed loop described by the config with fixed-step RK4,
/// evaluating the controller at every integrator stage (or on a zero-order
/// hold when control_period > 0) and integrating the controller state inside
/// the same stages. Deterministic: identical configs produce bit-identical
/// logs. Throws ConfigError on inconsistent configs and DivergenceError on
/// blow-up.
SimResult run_scenario(const ScenarioConfig& config);

/// Builds the configured model (with friction applied).
std::unique_ptr<ManipulatorModel> build_model(const ScenarioConfig& config);

/// Resolves the initial joint state per the auto-placement rules.
JointState resolve_initial_state(const ScenarioConfig& config,
                                 const ManipulatorModel& model);

/// Full dry-run validation: structural checks plus model/plan/controller
/// construction and initial-state resolution. Throws on any problem.
void validate_scenario(const ScenarioConfig& config);

}  // namespace steadyarm

#endif  // STEADYARM_SIM_SIMULATOR_HPP_
