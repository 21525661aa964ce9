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

#ifndef STEADYARM_SIM_METRICS_HPP_
#define STEADYARM_SIM_METRICS_HPP_

#include "steadyarm/sim/log.hpp"

namespace steadyarm {

/// Scalar summary of one run. The tracking-error series is the task error
/// norm ||x - x_d|| when task columns exist, otherwise the joint error norm
/// ||q - q_d||. Definitions: rms over the full horizon; terminal = mean over
/// the last 10% of rows; settling time = first time after which the error
/// stays inside the band (flagged unsettled if it never does);
/// observer_terminal_error = ||d - d_hat|| at the final sample. Quantities
/// that do not apply to a run are NaN.
struct Metrics {
  double rms_error = 0.0;
  double terminal_error = 0.0;
  double peak_error = 0.0;
  double peak_control_norm = 0.0;
  double settling_time = 0.0;
  bool settled = false;
  double settling_band = 1e-3;
  double observer_terminal_error = 0.0;
  double min_sigma_min = 0.0;
};

Metrics compute_metrics(const SimLog& log, double settling_band = 1e-3);

/// The per-row tracking-error norm series used by the metrics (and by the
/// comparison CSV). Throws LogSchemaError if the log has neither task nor
/// joint reference columns.
std::vector<double> tracking_error_series(const SimLog& log);

}  // namespace steadyarm

#endif  // STEADYARM_SIM_METRICS_HPP_
