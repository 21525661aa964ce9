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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steadyarm/app/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "steadyarm: manipulator dynamics and tracking-control scenario runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> overrides;
  bool quiet = false;

  auto add_common = [&](CLI::App* cmd, bool needs_out) {
    cmd->add_option("--config", config_path, "scenario config file")->required();
    if (needs_out) cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--set", overrides,
                    "override a config value (section.key=value, repeatable)");
    cmd->add_flag("--quiet", quiet, "suppress normal output");
  };

  CLI::App* run = app.add_subcommand("run", "run one scenario, write log/metrics");
  add_common(run, true);
  CLI::App* compare =
      app.add_subcommand("compare", "run controller variants side by side");
  add_common(compare, true);
  CLI::App* validate =
      app.add_subcommand("validate", "check a config without running it");
  add_common(validate, false);
  app.add_subcommand("list-models", "print the available models and defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "config error: " << e.what() << '\n';
    return steadyarm::kExitConfigError;
  }

  if (run->parsed()) {
    return steadyarm::cmd_run(config_path, out_dir, overrides, quiet, std::cout, std::cerr);
  }
  if (compare->parsed()) {
    return steadyarm::cmd_compare(config_path, out_dir, overrides, quiet, std::cout,
                                  std::cerr);
  }
  if (validate->parsed()) {
    return steadyarm::cmd_validate(config_path, overrides, quiet, std::cout, std::cerr);
  }
  return steadyarm::cmd_list_models(std::cout);
}
