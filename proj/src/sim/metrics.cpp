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

#include "steadyarm/sim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace steadyarm {

namespace {

double row_norm(const SimLog& log, const std::vector<std::string>& a,
                const std::vector<std::string>& b, int row) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double diff = log.column(a[i])[row] - log.column(b[i])[row];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double row_norm_single(const SimLog& log, const std::vector<std::string>& cols, int row) {
  double sum = 0.0;
  for (const auto& c : cols) {
    const double v = log.column(c)[row];
    sum += v * v;
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> tracking_error_series(const SimLog& log) {
  if (log.rows() == 0) throw LogSchemaError("tracking_error_series: empty log");
  std::vector<std::string> actual = log.indexed_columns("x");
  std::vector<std::string> desired = log.indexed_columns("xd");
  if (actual.empty() || actual.size() != desired.size()) {
    actual = log.indexed_columns("q");
    desired = log.indexed_columns("qd");
  }
  if (actual.empty() || actual.size() != desired.size()) {
    throw LogSchemaError("tracking_error_series: log has no reference columns");
  }
  std::vector<double> err(static_cast<size_t>(log.rows()));
  for (int r = 0; r < log.rows(); ++r) {
    err[static_cast<size_t>(r)] = row_norm(log, actual, desired, r);
  }
  return err;
}

Metrics compute_metrics(const SimLog& log, double settling_band) {
  if (log.rows() == 0) throw LogSchemaError("compute_metrics: empty log");
  const int rows = log.rows();
  const auto err = tracking_error_series(log);
  const auto& t = log.column("t");

  Metrics m;
  m.settling_band = settling_band;

  double sq = 0.0;
  for (double e : err) {
    sq += e * e;
    m.peak_error = std::max(m.peak_error, e);
  }
  m.rms_error = std::sqrt(sq / rows);

  const int tail_start = (9 * rows) / 10;
  double tail_sum = 0.0;
  for (int r = tail_start; r < rows; ++r) tail_sum += err[static_cast<size_t>(r)];
  m.terminal_error = tail_sum / (rows - tail_start);

  // first index after which the error never leaves the band
  int settle_idx = rows;
  for (int r = rows - 1; r >= 0; --r) {
    if (err[static_cast<size_t>(r)] > settling_band) break;
    settle_idx = r;
  }
  if (settle_idx < rows) {
    m.settled = true;
    m.settling_time = t[static_cast<size_t>(settle_idx)];
  } else {
    m.settled = false;
    m.settling_time = std::numeric_limits<double>::infinity();
  }

  const auto u_cols = log.indexed_columns("u");
  for (int r = 0; r < rows; ++r) {
    m.peak_control_norm = std::max(m.peak_control_norm, row_norm_single(log, u_cols, r));
  }

  const auto d_cols = log.indexed_columns("d");
  const auto dh_cols = log.indexed_columns("d_hat");
  if (!dh_cols.empty() && dh_cols.size() == d_cols.size()) {
    m.observer_terminal_error = row_norm(log, d_cols, dh_cols, rows - 1);
  } else {
    m.observer_terminal_error = std::numeric_limits<double>::quiet_NaN();
  }

  if (log.has_column("sigma_min")) {
    const auto& sm = log.column("sigma_min");
    m.min_sigma_min = *std::min_element(sm.begin(), sm.end());
  } else {
    m.min_sigma_min = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

}  // namespace steadyarm
