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

#include "steadyarm/signals/disturbance.hpp"

#include <cmath>

namespace steadyarm {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

std::string disturbance_kind_name(DisturbanceKind kind) {
  switch (kind) {
    case DisturbanceKind::kZero:
      return "zero";
    case DisturbanceKind::kConstant:
      return "constant";
    case DisturbanceKind::kSinusoid:
      return "sinusoid";
    case DisturbanceKind::kSum:
      return "sum";
  }
  return "?";
}

void DisturbanceSpec::validate(int dof) const {
  switch (kind) {
    case DisturbanceKind::kZero:
      break;
    case DisturbanceKind::kConstant:
      require(constant.size() == dof, "disturbance: constant vector must match the DOF count");
      require_finite(constant, "disturbance.constant");
      break;
    case DisturbanceKind::kSinusoid:
      require(amplitude.size() == dof, "disturbance: amplitude must match the DOF count");
      require_finite(amplitude, "disturbance.amplitude");
      require(std::isfinite(frequency_hz) && frequency_hz >= 0.0,
              "disturbance: frequency must be finite and >= 0");
      require(std::isfinite(phase), "disturbance: phase must be finite");
      break;
    case DisturbanceKind::kSum:
      require(!children.empty(), "disturbance: sum needs at least one child");
      for (const auto& child : children) child.validate(dof);
      break;
  }
}

double DisturbanceSpec::bound() const {
  switch (kind) {
    case DisturbanceKind::kZero:
      return 0.0;
    case DisturbanceKind::kConstant:
      return constant.size() ? constant.cwiseAbs().maxCoeff() : 0.0;
    case DisturbanceKind::kSinusoid:
      return amplitude.size() ? amplitude.cwiseAbs().maxCoeff() : 0.0;
    case DisturbanceKind::kSum: {
      double total = 0.0;
      for (const auto& child : children) total += child.bound();
      return total;
    }
  }
  return 0.0;
}

VectorXd disturbance_sample(const DisturbanceSpec& spec, double t) {
  switch (spec.kind) {
    case DisturbanceKind::kZero:
      return VectorXd::Zero(spec.dim);
    case DisturbanceKind::kConstant:
      return spec.constant;
    case DisturbanceKind::kSinusoid:
      return spec.amplitude * std::sin(kTwoPi * spec.frequency_hz * t + spec.phase);
    case DisturbanceKind::kSum: {
      require(!spec.children.empty(), "disturbance_sample: empty sum");
      VectorXd d = disturbance_sample(spec.children.front(), t);
      for (size_t i = 1; i < spec.children.size(); ++i) {
        d += disturbance_sample(spec.children[i], t);
      }
      return d;
    }
  }
  throw ContractViolation("disturbance_sample: unknown kind");
}

}  // namespace steadyarm
