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

#include "steadyarm/app/scenario_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace steadyarm {

namespace {

ModelKind parse_model_kind(const std::string& name) {
  if (name == "planar_arm") return ModelKind::kPlanarArm;
  if (name == "surgical_arm") return ModelKind::kSurgicalArm;
  throw ConfigError("scenario.model", "unknown model '" + name + "'");
}

ControllerKind parse_controller_kind(const std::string& name) {
  if (name == "lyapunov_observer") return ControllerKind::kLyapunovObserver;
  if (name == "workspace_lyapunov") return ControllerKind::kWorkspaceLyapunov;
  if (name == "inverse_dynamics_integral") return ControllerKind::kInverseDynamicsIntegral;
  throw ConfigError("scenario.controller", "unknown controller '" + name + "'");
}

TrajectoryKind parse_trajectory_kind(const std::string& name) {
  if (name == "workspace_figure") return TrajectoryKind::kWorkspaceFigure;
  if (name == "workspace_circle") return TrajectoryKind::kWorkspaceCircle;
  if (name == "joint_sinusoid") return TrajectoryKind::kJointSinusoid;
  if (name == "setpoint") return TrajectoryKind::kSetpoint;
  throw ConfigError("trajectory.kind", "unknown trajectory kind '" + name + "'");
}

DisturbanceKind parse_disturbance_kind(const std::string& section, const std::string& name) {
  if (name == "zero") return DisturbanceKind::kZero;
  if (name == "constant") return DisturbanceKind::kConstant;
  if (name == "sinusoid") return DisturbanceKind::kSinusoid;
  if (name == "sum") return DisturbanceKind::kSum;
  throw ConfigError(section + ".kind", "unknown disturbance kind '" + name + "'");
}

// Gains: a single value means value * identity, an n-element list a diagonal.
MatrixXd parse_gain_matrix(const ConfigMap& cfg, const std::string& key, int n) {
  const auto v = cfg.get_vector("gains", key);
  if (!v) throw ConfigError("gains." + key, "missing");
  if (v->size() == 1) return (*v)[0] * MatrixXd::Identity(n, n);
  if (v->size() == n) return v->asDiagonal();
  throw ConfigError("gains." + key,
                    "expected 1 or " + std::to_string(n) + " values, got " +
                        std::to_string(v->size()));
}

std::string gain_to_string(const MatrixXd& m) {
  // configs carry diagonal gains only
  MatrixXd off = m;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() != 0.0) {
    throw ConfigError("gains", "only diagonal gain matrices serialize to configs");
  }
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out << ", ";
    out << format_double(m(i, i));
  }
  return out.str();
}

std::string vector_to_string(const VectorXd& v) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << format_double(v[i]);
  }
  return out.str();
}

DisturbanceSpec parse_disturbance_section(const ConfigMap& cfg, const std::string& section,
                                          int dof, bool allow_sum);

DisturbanceSpec parse_disturbance(const ConfigMap& cfg, int dof) {
  return parse_disturbance_section(cfg, "disturbance", dof, /*allow_sum=*/true);
}

DisturbanceSpec parse_disturbance_section(const ConfigMap& cfg, const std::string& section,
                                          int dof, bool allow_sum) {
  DisturbanceSpec spec;
  spec.dim = dof;
  const auto kind = cfg.get_string(section, "kind");
  spec.kind = kind ? parse_disturbance_kind(section, *kind) : DisturbanceKind::kZero;
  switch (spec.kind) {
    case DisturbanceKind::kZero:
      break;
    case DisturbanceKind::kConstant: {
      const auto value = cfg.get_vector(section, "value");
      if (!value) throw ConfigError(section + ".value", "missing");
      spec.constant = *value;
      break;
    }
    case DisturbanceKind::kSinusoid: {
      const auto amp = cfg.get_vector(section, "amplitude");
      if (!amp) throw ConfigError(section + ".amplitude", "missing");
      spec.amplitude = *amp;
      spec.frequency_hz = cfg.get_double(section, "frequency_hz").value_or(10.0);
      spec.phase = cfg.get_double(section, "phase").value_or(0.0);
      break;
    }
    case DisturbanceKind::kSum: {
      if (!allow_sum) {
        throw ConfigError(section + ".kind", "sum disturbances cannot nest");
      }
      const std::string prefix = section + ".";
      for (const auto& name : cfg.sections()) {
        if (name.rfind(prefix, 0) == 0) {
          spec.children.push_back(
              parse_disturbance_section(cfg, name, dof, /*allow_sum=*/false));
        }
      }
      if (spec.children.empty()) {
        throw ConfigError(section, "sum needs at least one [" + prefix + "<name>] child");
      }
      break;
    }
  }
  return spec;
}

TrajectorySpec parse_trajectory(const ConfigMap& cfg, int dof) {
  const auto kind = cfg.get_string("trajectory", "kind");
  if (!kind) throw ConfigError("trajectory.kind", "missing");
  TrajectorySpec spec;
  spec.kind = parse_trajectory_kind(*kind);
  switch (spec.kind) {
    case TrajectoryKind::kJointSinusoid: {
      const auto amp = cfg.get_vector("trajectory", "amplitude");
      if (!amp) throw ConfigError("trajectory.amplitude", "missing");
      spec.amplitude = *amp;
      const auto omega = cfg.get_vector("trajectory", "omega");
      if (!omega) throw ConfigError("trajectory.omega", "missing");
      spec.omega = *omega;
      spec.phase = cfg.get_vector("trajectory", "phase").value_or(VectorXd::Zero(amp->size()));
      spec.offset = cfg.get_vector("trajectory", "offset").value_or(VectorXd::Zero(amp->size()));
      break;
    }
    case TrajectoryKind::kSetpoint: {
      const auto target = cfg.get_vector("trajectory", "target");
      if (!target) throw ConfigError("trajectory.target", "missing");
      spec.target = *target;
      break;
    }
    case TrajectoryKind::kWorkspaceCircle: {
      const auto center = cfg.get_vector("trajectory", "center");
      if (!center || center->size() != 2) {
        throw ConfigError("trajectory.center", "needs two values");
      }
      spec.center = Vector2d((*center)[0], (*center)[1]);
      spec.circle_radius = cfg.get_double("trajectory", "radius").value_or(0.0);
      spec.circle_omega = cfg.get_double("trajectory", "omega").value_or(0.0);
      spec.circle_phase = cfg.get_double("trajectory", "phase").value_or(0.0);
      break;
    }
    case TrajectoryKind::kWorkspaceFigure:
      break;
  }
  (void)dof;
  return spec;
}

void parse_model_params(const ConfigMap& cfg, ScenarioConfig& scenario) {
  auto number = [&](const char* key, double fallback) {
    return cfg.get_double("model", key).value_or(fallback);
  };
  if (scenario.model == ModelKind::kPlanarArm) {
    auto& p = scenario.planar;
    p.m1 = number("m1", p.m1);
    p.m2 = number("m2", p.m2);
    p.l1 = number("l1", p.l1);
    p.l2 = number("l2", p.l2);
    p.lc1 = number("lc1", p.lc1);
    p.lc2 = number("lc2", p.lc2);
    p.izz1 = number("izz1", p.izz1);
    p.izz2 = number("izz2", p.izz2);
    p.g = number("g", p.g);
  } else {
    auto& p = scenario.surgical;
    p.m1 = number("m1", p.m1);
    p.m2 = number("m2", p.m2);
    p.m3 = number("m3", p.m3);
    p.m4 = number("m4", p.m4);
    p.i1a = number("i1a", p.i1a);
    p.i1t = number("i1t", p.i1t);
    p.i2a = number("i2a", p.i2a);
    p.i2t = number("i2t", p.i2t);
    p.i3a = number("i3a", p.i3a);
    p.i4a = number("i4a", p.i4a);
    p.i4t = number("i4t", p.i4t);
    p.l1 = number("l1", p.l1);
    p.l2 = number("l2", p.l2);
    p.g = number("g", p.g);
  }
  if (const auto friction = cfg.get_vector("model", "friction")) {
    scenario.friction = *friction;
  }
}

void parse_initial(const ConfigMap& cfg, ScenarioConfig& scenario) {
  if (const auto q = cfg.get_string("initial", "q")) {
    if (*q != "auto") {
      const auto vec = cfg.get_vector("initial", "q");
      scenario.initial.q_auto = false;
      scenario.initial.q = *vec;
    }
  }
  if (const auto qdot = cfg.get_string("initial", "qdot")) {
    if (*qdot != "auto") {
      const auto vec = cfg.get_vector("initial", "qdot");
      scenario.initial.qdot_auto = false;
      scenario.initial.qdot = *vec;
    }
  }
  if (const auto dh = cfg.get_vector("initial", "d_hat")) {
    scenario.initial.d_hat = *dh;
  }
}

}  // namespace

ScenarioConfig scenario_from_config(const ConfigMap& cfg) {
  ScenarioConfig scenario;

  const auto model = cfg.get_string("scenario", "model");
  if (!model) throw ConfigError("scenario.model", "missing");
  scenario.model = parse_model_kind(*model);

  const auto controller = cfg.get_string("scenario", "controller");
  if (!controller) throw ConfigError("scenario.controller", "missing");
  scenario.controller = parse_controller_kind(*controller);

  scenario.duration = cfg.get_double("scenario", "duration").value_or(scenario.duration);
  scenario.dt = cfg.get_double("scenario", "dt").value_or(scenario.dt);
  scenario.decimation = cfg.get_int("scenario", "decimation").value_or(scenario.decimation);
  scenario.blowup_norm =
      cfg.get_double("scenario", "blowup_norm").value_or(scenario.blowup_norm);
  scenario.control_period =
      cfg.get_double("scenario", "control_period").value_or(scenario.control_period);
  if (const auto branch = cfg.get_string("scenario", "ik_branch")) {
    if (*branch == "elbow_down") {
      scenario.ik_branch = ElbowBranch::kDown;
    } else if (*branch == "elbow_up") {
      scenario.ik_branch = ElbowBranch::kUp;
    } else {
      throw ConfigError("scenario.ik_branch", "expected elbow_down or elbow_up");
    }
  }

  parse_model_params(cfg, scenario);

  const int n = scenario.dof();
  scenario.gains.Kd = parse_gain_matrix(cfg, "kd", n);
  scenario.gains.Lambda = parse_gain_matrix(cfg, "lambda", n);
  if (cfg.has("gains", "ki")) {
    scenario.gains.Ki = parse_gain_matrix(cfg, "ki", n);
  } else if (scenario.controller != ControllerKind::kWorkspaceLyapunov) {
    throw ConfigError("gains.ki",
                      "missing (required by " + controller_kind_name(scenario.controller) + ")");
  }

  scenario.trajectory = parse_trajectory(cfg, n);
  scenario.disturbance = parse_disturbance(cfg, n);
  parse_initial(cfg, scenario);

  const auto leftovers = cfg.unconsumed();
  if (!leftovers.empty()) {
    throw ConfigError(leftovers.front(), "unknown key");
  }

  scenario.validate();
  return scenario;
}

ConfigMap scenario_to_config(const ScenarioConfig& s) {
  ConfigMap cfg;
  cfg.set("scenario", "model", model_kind_name(s.model));
  cfg.set("scenario", "controller", controller_kind_name(s.controller));
  cfg.set("scenario", "duration", format_double(s.duration));
  cfg.set("scenario", "dt", format_double(s.dt));
  cfg.set("scenario", "decimation", std::to_string(s.decimation));
  cfg.set("scenario", "blowup_norm", format_double(s.blowup_norm));
  cfg.set("scenario", "control_period", format_double(s.control_period));
  cfg.set("scenario", "ik_branch",
          s.ik_branch == ElbowBranch::kDown ? "elbow_down" : "elbow_up");

  if (s.model == ModelKind::kPlanarArm) {
    const auto& p = s.planar;
    cfg.set("model", "m1", format_double(p.m1));
    cfg.set("model", "m2", format_double(p.m2));
    cfg.set("model", "l1", format_double(p.l1));
    cfg.set("model", "l2", format_double(p.l2));
    cfg.set("model", "lc1", format_double(p.lc1));
    cfg.set("model", "lc2", format_double(p.lc2));
    cfg.set("model", "izz1", format_double(p.izz1));
    cfg.set("model", "izz2", format_double(p.izz2));
    cfg.set("model", "g", format_double(p.g));
  } else {
    const auto& p = s.surgical;
    cfg.set("model", "m1", format_double(p.m1));
    cfg.set("model", "m2", format_double(p.m2));
    cfg.set("model", "m3", format_double(p.m3));
    cfg.set("model", "m4", format_double(p.m4));
    cfg.set("model", "i1a", format_double(p.i1a));
    cfg.set("model", "i1t", format_double(p.i1t));
    cfg.set("model", "i2a", format_double(p.i2a));
    cfg.set("model", "i2t", format_double(p.i2t));
    cfg.set("model", "i3a", format_double(p.i3a));
    cfg.set("model", "i4a", format_double(p.i4a));
    cfg.set("model", "i4t", format_double(p.i4t));
    cfg.set("model", "l1", format_double(p.l1));
    cfg.set("model", "l2", format_double(p.l2));
    cfg.set("model", "g", format_double(p.g));
  }
  if (s.friction.size() != 0) cfg.set("model", "friction", vector_to_string(s.friction));

  cfg.set("gains", "kd", gain_to_string(s.gains.Kd));
  cfg.set("gains", "lambda", gain_to_string(s.gains.Lambda));
  if (s.gains.has_ki()) cfg.set("gains", "ki", gain_to_string(s.gains.Ki));

  cfg.set("trajectory", "kind", trajectory_kind_name(s.trajectory.kind));
  switch (s.trajectory.kind) {
    case TrajectoryKind::kJointSinusoid:
      cfg.set("trajectory", "amplitude", vector_to_string(s.trajectory.amplitude));
      cfg.set("trajectory", "omega", vector_to_string(s.trajectory.omega));
      cfg.set("trajectory", "phase", vector_to_string(s.trajectory.phase));
      cfg.set("trajectory", "offset", vector_to_string(s.trajectory.offset));
      break;
    case TrajectoryKind::kSetpoint:
      cfg.set("trajectory", "target", vector_to_string(s.trajectory.target));
      break;
    case TrajectoryKind::kWorkspaceCircle:
      cfg.set("trajectory", "center", vector_to_string(s.trajectory.center));
      cfg.set("trajectory", "radius", format_double(s.trajectory.circle_radius));
      cfg.set("trajectory", "omega", format_double(s.trajectory.circle_omega));
      cfg.set("trajectory", "phase", format_double(s.trajectory.circle_phase));
      break;
    case TrajectoryKind::kWorkspaceFigure:
      break;
  }

  auto write_disturbance = [&cfg](const DisturbanceSpec& d, const std::string& section,
                                  auto&& self) -> void {
    cfg.set(section, "kind", disturbance_kind_name(d.kind));
    switch (d.kind) {
      case DisturbanceKind::kZero:
        break;
      case DisturbanceKind::kConstant:
        cfg.set(section, "value", vector_to_string(d.constant));
        break;
      case DisturbanceKind::kSinusoid:
        cfg.set(section, "amplitude", vector_to_string(d.amplitude));
        cfg.set(section, "frequency_hz", format_double(d.frequency_hz));
        cfg.set(section, "phase", format_double(d.phase));
        break;
      case DisturbanceKind::kSum:
        for (size_t i = 0; i < d.children.size(); ++i) {
          self(d.children[i], section + ".c" + std::to_string(i), self);
        }
        break;
    }
  };
  write_disturbance(s.disturbance, "disturbance", write_disturbance);

  cfg.set("initial", "q", s.initial.q_auto ? "auto" : vector_to_string(s.initial.q));
  cfg.set("initial", "qdot",
          s.initial.qdot_auto ? "auto" : vector_to_string(s.initial.qdot));
  if (s.initial.d_hat.size() != 0) {
    cfg.set("initial", "d_hat", vector_to_string(s.initial.d_hat));
  }
  return cfg;
}

CompareSpec compare_from_config(const ConfigMap& cfg) {
  static const std::set<std::string> kAllowed = {
      "scenario.controller", "gains.kd", "gains.ki", "gains.lambda", "initial.d_hat"};
  constexpr const char* kPrefix = "variant.";

  ConfigMap base;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
      variants;
  for (const auto& section : cfg.sections()) {
    if (section.rfind(kPrefix, 0) == 0) {
      const std::string name = section.substr(std::string(kPrefix).size());
      if (name.empty()) throw ConfigError(section, "variant needs a name");
      std::vector<std::pair<std::string, std::string>> overrides;
      for (const auto& key : cfg.keys(section)) {
        if (kAllowed.count(key) == 0) {
          throw ConfigError(section + "." + key,
                            "variants may only override scenario.controller, gains.*, "
                            "initial.d_hat (model/trajectory/disturbance are shared)");
        }
        overrides.emplace_back(key, *cfg.get_raw(section, key));
      }
      variants.emplace_back(name, std::move(overrides));
    } else {
      for (const auto& key : cfg.keys(section)) {
        base.set(section, key, *cfg.get_raw(section, key));
      }
    }
  }

  if (variants.size() < 2) {
    throw ConfigError("variant", "compare needs at least two [variant.<name>] sections");
  }

  CompareSpec spec;
  for (auto& [name, overrides] : variants) {
    ConfigMap map = base;
    for (const auto& [key, value] : overrides) map.set_dotted(key + "=" + value);
    spec.variants.emplace_back(name, scenario_from_config(map));
  }
  return spec;
}

}  // namespace steadyarm
