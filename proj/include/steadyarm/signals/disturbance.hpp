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

#ifndef STEADYARM_SIGNALS_DISTURBANCE_HPP_
#define STEADYARM_SIGNALS_DISTURBANCE_HPP_

#include <string>
#include <vector>

#include "steadyarm/common.hpp"

namespace steadyarm {

enum class DisturbanceKind { kZero, kConstant, kSinusoid, kSum };

std::string disturbance_kind_name(DisturbanceKind kind);

/// Additive joint-force disturbance, the model of the operator's hand tremor.
/// Every realizable disturbance is bounded by construction; bound() returns a
/// sup-norm bound valid for all t. The constant kind is the case covered by
/// the controller's convergence guarantee; the sinusoid is a stress-test
/// extension beyond that analysis.
struct DisturbanceSpec {
  DisturbanceKind kind = DisturbanceKind::kZero;
  int dim = 0;  ///< used by the zero kind; others infer from their vectors

  VectorXd constant;  ///< N*m (revolute) / N (prismatic)

  VectorXd amplitude;
  double frequency_hz = 0.0;
  double phase = 0.0;

  std::vector<DisturbanceSpec> children;  ///< kSum terms

  void validate(int dof) const;
  /// sup_t ||d(t)||_inf, from the spec structure.
  double bound() const;
};

/// Deterministic evaluation of the disturbance at time t.
VectorXd disturbance_sample(const DisturbanceSpec& spec, double t);

}  // namespace steadyarm

#endif  // STEADYARM_SIGNALS_DISTURBANCE_HPP_
