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

#ifndef STEADYARM_APP_RUNNER_HPP_
#define STEADYARM_APP_RUNNER_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "steadyarm/app/scenario_io.hpp"
#include "steadyarm/sim/simulator.hpp"

namespace steadyarm {

// CLI exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitIoError = 4;

/// Runs one scenario and writes log.csv, metrics.txt and config.resolved into
/// out_dir (created if needed). On divergence the partial log and an
/// error.txt report are written before the DivergenceError is rethrown.
SimResult run_scenario_to_directory(const ScenarioConfig& scenario,
                                    const std::filesystem::path& out_dir);

struct VariantResult {
  std::string name;
  ScenarioConfig scenario;
  SimResult result;
};

struct CompareResult {
  std::vector<VariantResult> variants;
};

/// Runs every variant (sequentially; runs share nothing but the configs).
CompareResult run_compare(const CompareSpec& spec);

/// Per-variant artifacts under out_dir/<name>/ plus comparison.txt (metrics
/// side by side) and comparison.csv (tracking error norms over time).
void write_compare_artifacts(const CompareResult& result,
                             const std::filesystem::path& out_dir);

void write_metrics_file(const Metrics& metrics, const std::filesystem::path& path);
std::string metrics_to_text(const Metrics& metrics);
std::string comparison_table(const CompareResult& result);

/// Loads a config file and applies --set overrides.
ConfigMap load_config(const std::string& path, const std::vector<std::string>& overrides);

// Subcommand drivers; they print diagnostics and return the exit code.
int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::vector<std::string>& overrides, bool quiet, std::ostream& out,
            std::ostream& err);
int cmd_compare(const std::string& config_path, const std::string& out_dir,
                const std::vector<std::string>& overrides, bool quiet, std::ostream& out,
                std::ostream& err);
int cmd_validate(const std::string& config_path, const std::vector<std::string>& overrides,
                 bool quiet, std::ostream& out, std::ostream& err);
int cmd_list_models(std::ostream& out);

}  // namespace steadyarm

#endif  // STEADYARM_APP_RUNNER_HPP_
