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

#ifndef STEADYARM_CONFIG_CONFIG_HPP_
#define STEADYARM_CONFIG_CONFIG_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "steadyarm/common.hpp"

namespace steadyarm {

/// Flat sectioned key-value configuration ("[section]" headers, "key =
/// value" lines, "#"/";" comments). Values stay strings until a typed getter
/// parses them; getters record which keys were consumed so schema code can
/// reject unknown keys afterwards.
class ConfigMap {
 public:
  ConfigMap() = default;

  static ConfigMap parse_file(const std::string& path);
  static ConfigMap parse_string(const std::string& text, const std::string& origin = "<string>");

  void set(const std::string& section, const std::string& key, std::string value);
  /// Applies a "section.key=value" override (the CLI --set form).
  void set_dotted(const std::string& assignment);

  bool has(const std::string& section, const std::string& key) const;
  std::optional<std::string> get_raw(const std::string& section, const std::string& key) const;

  std::optional<std::string> get_string(const std::string& section, const std::string& key) const;
  std::optional<double> get_double(const std::string& section, const std::string& key) const;
  std::optional<int> get_int(const std::string& section, const std::string& key) const;
  std::optional<bool> get_bool(const std::string& section, const std::string& key) const;
  /// Comma-separated list of doubles.
  std::optional<VectorXd> get_vector(const std::string& section, const std::string& key) const;

  std::vector<std::string> sections() const;
  std::vector<std::string> keys(const std::string& section) const;

  /// "section.key" paths never touched by a typed getter.
  std::vector<std::string> unconsumed() const;
  void mark_consumed(const std::string& section, const std::string& key) const;

  /// Deterministic serialization (sections and keys sorted).
  std::string serialize() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
  mutable std::set<std::string> consumed_;
};

/// Renders a double with enough digits to round-trip exactly.
std::string format_double(double value);

}  // namespace steadyarm

#endif  // STEADYARM_CONFIG_CONFIG_HPP_
