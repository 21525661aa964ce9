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

#ifndef STEADYARM_SIM_LOG_HPP_
#define STEADYARM_SIM_LOG_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "steadyarm/common.hpp"

namespace steadyarm {

/// Uniformly sampled simulation time series, column-oriented. Column names
/// follow a fixed convention: t, q0.., qdot0.., qd0.. (joint reference),
/// x0../xd0.. (task actual/desired), sigma0.., u0.., d0.., d_hat0.., V,
/// Vdot_model, energy, sigma_min. Which columns exist depends on the
/// scenario; lengths always agree.
class SimLog {
 public:
  SimLog() = default;
  explicit SimLog(std::vector<std::string> columns);

  int rows() const { return columns_.empty() ? 0 : static_cast<int>(data_.front().size()); }
  int cols() const { return static_cast<int>(columns_.size()); }
  const std::vector<std::string>& column_names() const { return columns_; }

  bool has_column(const std::string& name) const;
  /// Throws LogSchemaError if the column does not exist.
  const std::vector<double>& column(const std::string& name) const;

  /// Values must match the column count.
  void push_row(const std::vector<double>& values);

  /// CSV with a header row; floats carry 17 significant digits so identical
  /// runs serialize byte-identically and parse back exactly.
  void write_csv(std::ostream& os) const;
  std::string to_csv() const;

  /// All indexed columns with the given prefix (q0, q1, ...), in index order.
  std::vector<std::string> indexed_columns(const std::string& prefix) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> data_;
};

}  // namespace steadyarm

#endif  // STEADYARM_SIM_LOG_HPP_
