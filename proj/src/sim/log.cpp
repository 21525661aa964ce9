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

#include "steadyarm/sim/log.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace steadyarm {

SimLog::SimLog(std::vector<std::string> columns) : columns_(std::move(columns)) {
  data_.resize(columns_.size());
}

bool SimLog::has_column(const std::string& name) const {
  return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
}

const std::vector<double>& SimLog::column(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) {
    throw LogSchemaError("log has no column '" + name + "'");
  }
  return data_[static_cast<size_t>(it - columns_.begin())];
}

void SimLog::push_row(const std::vector<double>& values) {
  if (values.size() != columns_.size()) {
    throw LogSchemaError("log row width does not match the column count");
  }
  for (size_t c = 0; c < values.size(); ++c) data_[c].push_back(values[c]);
}

void SimLog::write_csv(std::ostream& os) const {
  for (size_t c = 0; c < columns_.size(); ++c) {
    if (c) os << ',';
    os << columns_[c];
  }
  os << '\n';
  char buf[40];
  const int n = rows();
  for (int r = 0; r < n; ++r) {
    for (size_t c = 0; c < columns_.size(); ++c) {
      if (c) os << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", data_[c][static_cast<size_t>(r)]);
      os << buf;
    }
    os << '\n';
  }
}

std::string SimLog::to_csv() const {
  std::ostringstream oss;
  write_csv(oss);
  return oss.str();
}

std::vector<std::string> SimLog::indexed_columns(const std::string& prefix) const {
  std::vector<std::string> found;
  for (int i = 0;; ++i) {
    const std::string name = prefix + std::to_string(i);
    if (!has_column(name)) break;
    found.push_back(name);
  }
  return found;
}

}  // namespace steadyarm
