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

#ifndef STEADYARM_APP_SCENARIO_IO_HPP_
#define STEADYARM_APP_SCENARIO_IO_HPP_

#include <utility>
#include <vector>

#include "steadyarm/config/config.hpp"
#include "steadyarm/sim/scenario.hpp"

namespace steadyarm {

/// Builds a scenario from a parsed config, consuming its keys; any key left
/// unconsumed afterwards is reported as unknown. Throws ConfigError naming
/// the offending "section.key".
ScenarioConfig scenario_from_config(const ConfigMap& config);

/// Serializes the fully resolved scenario (all defaults materialized, floats
/// exact). Parsing the result yields a scenario that reproduces the identical
/// log.
ConfigMap scenario_to_config(const ScenarioConfig& scenario);

/// A comparison experiment: one shared base scenario plus named controller
/// variants. Variant sections ("[variant.NAME]") hold dotted overrides and
/// may only touch scenario.controller, gains.*, and initial.d_hat — model,
/// trajectory and disturbance stay shared.
struct CompareSpec {
  std::vector<std::pair<std::string, ScenarioConfig>> variants;
};

CompareSpec compare_from_config(const ConfigMap& config);

}  // namespace steadyarm

#endif  // STEADYARM_APP_SCENARIO_IO_HPP_
