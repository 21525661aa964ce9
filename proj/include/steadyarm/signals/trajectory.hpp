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

#ifndef STEADYARM_SIGNALS_TRAJECTORY_HPP_
#define STEADYARM_SIGNALS_TRAJECTORY_HPP_

#include <string>

#include "steadyarm/control/reference.hpp"

namespace steadyarm {

enum class TrajectoryKind {
  kWorkspaceFigure,  ///< the closed-form singularity-free planar figure
  kWorkspaceCircle,
  kJointSinusoid,
  kSetpoint,  ///< constant joint-space target
};

bool is_workspace_kind(TrajectoryKind kind);
std::string trajectory_kind_name(TrajectoryKind kind);

/// Declarative description of a reference trajectory. Only the fields of the
/// selected kind are meaningful.
struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::kSetpoint;

  // joint_sinusoid: q_d,i = amplitude_i sin(omega_i t + phase_i) + offset_i
  VectorXd amplitude;
  VectorXd omega;   ///< rad/s, >= 0
  VectorXd phase;
  VectorXd offset;

  // setpoint
  VectorXd target;

  // workspace_circle: x_d = center + radius [cos, sin](omega t + phase)
  Vector2d center = Vector2d::Zero();
  double circle_radius = 0.0;
  double circle_omega = 0.0;
  double circle_phase = 0.0;

  /// Joint-space dimension implied by the spec; 0 for workspace kinds.
  int joint_dim() const;
  /// Throws ContractViolation on malformed fields.
  void validate() const;
};

/// The singularity-free planar reference figure, evaluated in closed form:
///
///   s(t) = sin(t)/2 + 1                       (in [0.5, 1.5], never zero)
///   x_d  = cos(t)/2 + sin(s)/s
///   y_d  = -(cos(s) - 1)/s
///
/// with the matching closed-form time derivatives.
struct PlanarFigureSample {
  double x, y, xdot, ydot;
};
PlanarFigureSample workspace_figure_reference(double t);

/// Analytic sample of a joint sinusoid spec (positions, velocities and
/// accelerations are exact derivatives of each other).
ReferenceSample joint_sinusoid_reference(const TrajectorySpec& spec, double t);

/// Joint-space sample of a joint-kind spec (sinusoid or setpoint).
ReferenceSample joint_reference(const TrajectorySpec& spec, double t);

/// Task-space sample of a workspace-kind spec.
TaskSample task_reference(const TrajectorySpec& spec, double t);

}  // namespace steadyarm

#endif  // STEADYARM_SIGNALS_TRAJECTORY_HPP_
