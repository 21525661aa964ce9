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

#include "steadyarm/signals/trajectory.hpp"

#include <cmath>

namespace steadyarm {

bool is_workspace_kind(TrajectoryKind kind) {
  return kind == TrajectoryKind::kWorkspaceFigure ||
         kind == TrajectoryKind::kWorkspaceCircle;
}

std::string trajectory_kind_name(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::kWorkspaceFigure:
      return "workspace_figure";
    case TrajectoryKind::kWorkspaceCircle:
      return "workspace_circle";
    case TrajectoryKind::kJointSinusoid:
      return "joint_sinusoid";
    case TrajectoryKind::kSetpoint:
      return "setpoint";
  }
  return "?";
}

int TrajectorySpec::joint_dim() const {
  switch (kind) {
    case TrajectoryKind::kJointSinusoid:
      return static_cast<int>(amplitude.size());
    case TrajectoryKind::kSetpoint:
      return static_cast<int>(target.size());
    default:
      return 0;
  }
}

void TrajectorySpec::validate() const {
  switch (kind) {
    case TrajectoryKind::kJointSinusoid: {
      const auto n = amplitude.size();
      require(n > 0, "trajectory: joint_sinusoid needs a nonempty amplitude");
      require(omega.size() == n && phase.size() == n && offset.size() == n,
              "trajectory: joint_sinusoid amplitude/omega/phase/offset sizes differ");
      require((omega.array() >= 0.0).all(), "trajectory: omega must be >= 0");
      require_finite(amplitude, "trajectory.amplitude");
      require_finite(omega, "trajectory.omega");
      require_finite(phase, "trajectory.phase");
      require_finite(offset, "trajectory.offset");
      break;
    }
    case TrajectoryKind::kSetpoint:
      require(target.size() > 0, "trajectory: setpoint needs a target");
      require_finite(target, "trajectory.target");
      break;
    case TrajectoryKind::kWorkspaceCircle:
      require(std::isfinite(circle_radius) && circle_radius >= 0.0,
              "trajectory: circle radius must be finite and >= 0");
      require(std::isfinite(circle_omega) && circle_omega >= 0.0,
              "trajectory: circle omega must be finite and >= 0");
      require(center.allFinite(), "trajectory: circle center must be finite");
      break;
    case TrajectoryKind::kWorkspaceFigure:
      break;
  }
}

PlanarFigureSample workspace_figure_reference(double t) {
  require(std::isfinite(t), "workspace_figure_reference: t must be finite");
  const double s = std::sin(t) / 2.0 + 1.0;
  const double sdot = std::cos(t) / 2.0;

  PlanarFigureSample out;
  out.x = std::cos(t) / 2.0 + std::sin(s) / s;
  out.y = -(std::cos(s) - 1.0) / s;
  out.xdot = std::cos(s) * sdot / s - std::sin(t) / 2.0 - std::sin(s) * sdot / (s * s);
  out.ydot = std::sin(s) * sdot / s + sdot * (std::cos(s) - 1.0) / (s * s);
  return out;
}

ReferenceSample joint_sinusoid_reference(const TrajectorySpec& spec, double t) {
  require(spec.kind == TrajectoryKind::kJointSinusoid,
          "joint_sinusoid_reference: wrong trajectory kind");
  spec.validate();
  const auto n = spec.amplitude.size();
  ReferenceSample ref;
  ref.q_d.resize(n);
  ref.qdot_d.resize(n);
  ref.qddot_d.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double arg = spec.omega[i] * t + spec.phase[i];
    ref.q_d[i] = spec.amplitude[i] * std::sin(arg) + spec.offset[i];
    ref.qdot_d[i] = spec.amplitude[i] * spec.omega[i] * std::cos(arg);
    ref.qddot_d[i] = -spec.amplitude[i] * spec.omega[i] * spec.omega[i] * std::sin(arg);
  }
  return ref;
}

ReferenceSample joint_reference(const TrajectorySpec& spec, double t) {
  switch (spec.kind) {
    case TrajectoryKind::kJointSinusoid:
      return joint_sinusoid_reference(spec, t);
    case TrajectoryKind::kSetpoint: {
      ReferenceSample ref;
      ref.q_d = spec.target;
      ref.qdot_d = VectorXd::Zero(spec.target.size());
      ref.qddot_d = VectorXd::Zero(spec.target.size());
      return ref;
    }
    default:
      throw ContractViolation("joint_reference: " + trajectory_kind_name(spec.kind) +
                              " is not a joint-space trajectory");
  }
}

TaskSample task_reference(const TrajectorySpec& spec, double t) {
  TaskSample s;
  switch (spec.kind) {
    case TrajectoryKind::kWorkspaceFigure: {
      const PlanarFigureSample f = workspace_figure_reference(t);
      s.x_d = Vector2d(f.x, f.y);
      s.xdot_d = Vector2d(f.xdot, f.ydot);
      return s;
    }
    case TrajectoryKind::kWorkspaceCircle: {
      const double arg = spec.circle_omega * t + spec.circle_phase;
      s.x_d = spec.center + spec.circle_radius * Vector2d(std::cos(arg), std::sin(arg));
      s.xdot_d = spec.circle_radius * spec.circle_omega *
                 Vector2d(-std::sin(arg), std::cos(arg));
      return s;
    }
    default:
      throw ContractViolation("task_reference: " + trajectory_kind_name(spec.kind) +
                              " is not a workspace trajectory");
  }
}

}  // namespace steadyarm
