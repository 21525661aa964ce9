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

#include "steadyarm/app/runner.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace steadyarm {

namespace fs = std::filesystem;

namespace {

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

std::string bool_to_string(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string metrics_to_text(const Metrics& m) {
  std::ostringstream out;
  out << "rms_error = " << format_double(m.rms_error) << '\n';
  out << "terminal_error = " << format_double(m.terminal_error) << '\n';
  out << "peak_error = " << format_double(m.peak_error) << '\n';
  out << "peak_control_norm = " << format_double(m.peak_control_norm) << '\n';
  out << "settling_time = " << format_double(m.settling_time) << '\n';
  out << "settled = " << bool_to_string(m.settled) << '\n';
  out << "settling_band = " << format_double(m.settling_band) << '\n';
  out << "observer_terminal_error = " << format_double(m.observer_terminal_error) << '\n';
  out << "min_sigma_min = " << format_double(m.min_sigma_min) << '\n';
  return out.str();
}

void write_metrics_file(const Metrics& metrics, const fs::path& path) {
  write_text_file(path, metrics_to_text(metrics));
}

SimResult run_scenario_to_directory(const ScenarioConfig& scenario, const fs::path& out_dir) {
  ensure_directory(out_dir);
  write_text_file(out_dir / "config.resolved", scenario_to_config(scenario).serialize());
  try {
    SimResult result = run_scenario(scenario);
    write_text_file(out_dir / "log.csv", result.log.to_csv());
    write_metrics_file(result.metrics, out_dir / "metrics.txt");
    return result;
  } catch (const DivergenceError& e) {
    write_text_file(out_dir / "log.csv", e.partial_log().to_csv());
    std::ostringstream report;
    report << "error = divergence\n"
           << "time = " << format_double(e.time()) << '\n'
           << "detail = " << e.what() << '\n'
           << "log_rows = " << e.partial_log().rows() << '\n';
    write_text_file(out_dir / "error.txt", report.str());
    throw;
  }
}

CompareResult run_compare(const CompareSpec& spec) {
  CompareResult result;
  result.variants.reserve(spec.variants.size());
  for (const auto& [name, scenario] : spec.variants) {
    result.variants.push_back({name, scenario, run_scenario(scenario)});
  }
  return result;
}

std::string comparison_table(const CompareResult& result) {
  std::ostringstream out;
  const int name_width = 24;
  const int col_width = 16;

  out << std::left << std::setw(name_width) << "metric";
  for (const auto& v : result.variants) out << "| " << std::setw(col_width) << v.name;
  out << '\n';
  out << std::string(name_width, '-');
  for (size_t i = 0; i < result.variants.size(); ++i)
    out << '+' << std::string(col_width + 1, '-');
  out << '\n';

  auto row = [&](const std::string& label, auto getter) {
    out << std::left << std::setw(name_width) << label;
    for (const auto& v : result.variants) {
      std::ostringstream cell;
      cell << std::setprecision(6) << getter(v.result.metrics);
      out << "| " << std::setw(col_width) << cell.str();
    }
    out << '\n';
  };
  row("rms_error", [](const Metrics& m) { return m.rms_error; });
  row("terminal_error", [](const Metrics& m) { return m.terminal_error; });
  row("peak_error", [](const Metrics& m) { return m.peak_error; });
  row("peak_control_norm", [](const Metrics& m) { return m.peak_control_norm; });
  row("settling_time", [](const Metrics& m) { return m.settling_time; });
  row("observer_terminal_error",
      [](const Metrics& m) { return m.observer_terminal_error; });

  std::string unsettled;
  for (const auto& v : result.variants) {
    if (!v.result.metrics.settled) {
      if (!unsettled.empty()) unsettled += ", ";
      unsettled += v.name;
    }
  }
  out << '\n';
  if (unsettled.empty()) {
    out << "all variants settled within the band\n";
  } else {
    out << "unsettled within the band: " << unsettled << '\n';
  }
  return out.str();
}

void write_compare_artifacts(const CompareResult& result, const fs::path& out_dir) {
  ensure_directory(out_dir);
  for (const auto& v : result.variants) {
    const fs::path dir = out_dir / v.name;
    ensure_directory(dir);
    write_text_file(dir / "config.resolved", scenario_to_config(v.scenario).serialize());
    write_text_file(dir / "log.csv", v.result.log.to_csv());
    write_metrics_file(v.result.metrics, dir / "metrics.txt");
  }
  write_text_file(out_dir / "comparison.txt", comparison_table(result));

  // combined error-over-time CSV; variants share the time grid by contract
  std::ostringstream csv;
  csv << "t";
  for (const auto& v : result.variants) csv << ",err_" << v.name;
  csv << '\n';
  const auto& t = result.variants.front().result.log.column("t");
  std::vector<std::vector<double>> errs;
  for (const auto& v : result.variants) {
    errs.push_back(tracking_error_series(v.result.log));
    if (errs.back().size() != t.size()) {
      throw LogSchemaError("comparison variants produced different log lengths");
    }
  }
  char buf[40];
  for (size_t r = 0; r < t.size(); ++r) {
    std::snprintf(buf, sizeof(buf), "%.17g", t[r]);
    csv << buf;
    for (const auto& e : errs) {
      std::snprintf(buf, sizeof(buf), "%.17g", e[r]);
      csv << ',' << buf;
    }
    csv << '\n';
  }
  write_text_file(out_dir / "comparison.csv", csv.str());
}

ConfigMap load_config(const std::string& path, const std::vector<std::string>& overrides) {
  ConfigMap cfg = ConfigMap::parse_file(path);
  for (const auto& assignment : overrides) cfg.set_dotted(assignment);
  return cfg;
}

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ContractViolation& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DivergenceError& e) {
    err << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const fs::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIoError;
  }
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::vector<std::string>& overrides, bool quiet, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&]() {
    const ConfigMap cfg = load_config(config_path, overrides);
    const ScenarioConfig scenario = scenario_from_config(cfg);
    const SimResult result = run_scenario_to_directory(scenario, out_dir);
    if (!quiet) {
      out << "wrote " << (fs::path(out_dir) / "log.csv").string() << " ("
          << result.log.rows() << " rows)\n"
          << metrics_to_text(result.metrics);
    }
    return kExitOk;
  });
}

int cmd_compare(const std::string& config_path, const std::string& out_dir,
                const std::vector<std::string>& overrides, bool quiet, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() {
    const ConfigMap cfg = load_config(config_path, overrides);
    const CompareSpec spec = compare_from_config(cfg);
    const CompareResult result = run_compare(spec);
    write_compare_artifacts(result, out_dir);
    if (!quiet) out << comparison_table(result);
    return kExitOk;
  });
}

int cmd_validate(const std::string& config_path, const std::vector<std::string>& overrides,
                 bool quiet, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const ConfigMap cfg = load_config(config_path, overrides);
    bool compare_layout = false;
    for (const auto& section : cfg.sections()) {
      if (section.rfind("variant.", 0) == 0) compare_layout = true;
    }
    if (compare_layout) {
      const CompareSpec spec = compare_from_config(cfg);
      for (const auto& [name, scenario] : spec.variants) validate_scenario(scenario);
      if (!quiet) out << "ok: " << spec.variants.size() << " variants\n";
    } else {
      const ScenarioConfig scenario = scenario_from_config(cfg);
      validate_scenario(scenario);
      if (!quiet) out << "ok\n";
    }
    return kExitOk;
  });
}

int cmd_list_models(std::ostream& out) {
  const PlanarArmParams planar;
  out << "planar_arm (2 DOF, task space: planar tip position)\n"
      << "  m1 = " << planar.m1 << " kg, m2 = " << planar.m2 << " kg\n"
      << "  l1 = " << planar.l1 << " m, l2 = " << planar.l2 << " m\n"
      << "  lc1 = " << planar.lc1 << " m, lc2 = " << planar.lc2
      << " m, izz1 = " << planar.izz1 << ", izz2 = " << planar.izz2 << " kg m^2\n"
      << "  g = " << planar.g << " m/s^2\n";
  const SurgicalArmParams s;
  out << "surgical_arm (4 DOF spherical: azimuth, elevation, roll, insertion; "
         "task space: 3D tip position)\n"
      << "  m1 = " << s.m1 << ", m2 = " << s.m2 << ", m3 = " << s.m3 << ", m4 = " << s.m4
      << " kg\n"
      << "  i1a = " << s.i1a << ", i1t = " << s.i1t << ", i2a = " << s.i2a
      << ", i2t = " << s.i2t << " kg m^2\n"
      << "  i3a = " << s.i3a << ", i4a = " << s.i4a << ", i4t = " << s.i4t << " kg m^2\n"
      << "  l1 = " << s.l1 << " m, l2 = " << s.l2 << " m, g = " << s.g << " m/s^2\n";
  return kExitOk;
}

}  // namespace steadyarm
