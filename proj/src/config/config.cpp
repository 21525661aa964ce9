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

#include "steadyarm/config/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace steadyarm {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find_first_of("#;");
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

ConfigMap ConfigMap::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path);
}

ConfigMap ConfigMap::parse_string(const std::string& text, const std::string& origin) {
  ConfigMap cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string content = trim(strip_comment(line));
    if (content.empty()) continue;
    if (content.front() == '[') {
      if (content.back() != ']' || content.size() < 3) {
        throw ConfigError(origin + ":" + std::to_string(lineno), "malformed section header");
      }
      section = trim(content.substr(1, content.size() - 2));
      cfg.sections_[section];  // a section may legitimately stay empty
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno),
                        "expected 'key = value' or '[section]'");
    }
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(origin + ":" + std::to_string(lineno), "empty key");
    }
    if (section.empty()) {
      throw ConfigError(origin + ":" + std::to_string(lineno),
                        "key before any [section] header");
    }
    cfg.sections_[section][key] = value;
  }
  return cfg;
}

void ConfigMap::set(const std::string& section, const std::string& key, std::string value) {
  sections_[section][key] = std::move(value);
}

void ConfigMap::set_dotted(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ConfigError(assignment, "override must look like section.key=value");
  }
  const std::string path = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  const auto dot = path.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == path.size()) {
    throw ConfigError(path, "override key must look like section.key");
  }
  set(path.substr(0, dot), path.substr(dot + 1), value);
}

bool ConfigMap::has(const std::string& section, const std::string& key) const {
  const auto sec = sections_.find(section);
  return sec != sections_.end() && sec->second.count(key) > 0;
}

std::optional<std::string> ConfigMap::get_raw(const std::string& section,
                                              const std::string& key) const {
  const auto sec = sections_.find(section);
  if (sec == sections_.end()) return std::nullopt;
  const auto it = sec->second.find(key);
  if (it == sec->second.end()) return std::nullopt;
  return it->second;
}

void ConfigMap::mark_consumed(const std::string& section, const std::string& key) const {
  consumed_.insert(section + "." + key);
}

std::optional<std::string> ConfigMap::get_string(const std::string& section,
                                                 const std::string& key) const {
  auto raw = get_raw(section, key);
  if (raw) mark_consumed(section, key);
  return raw;
}

std::optional<double> ConfigMap::get_double(const std::string& section,
                                            const std::string& key) const {
  const auto raw = get_string(section, key);
  if (!raw) return std::nullopt;
  try {
    size_t used = 0;
    const double v = std::stod(*raw, &used);
    if (trim(raw->substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(section + "." + key, "expected a number, got '" + *raw + "'");
}

std::optional<int> ConfigMap::get_int(const std::string& section, const std::string& key) const {
  const auto v = get_double(section, key);
  if (!v) return std::nullopt;
  const int i = static_cast<int>(*v);
  if (static_cast<double>(i) != *v) {
    throw ConfigError(section + "." + key, "expected an integer");
  }
  return i;
}

std::optional<bool> ConfigMap::get_bool(const std::string& section,
                                        const std::string& key) const {
  const auto raw = get_string(section, key);
  if (!raw) return std::nullopt;
  if (*raw == "true" || *raw == "1" || *raw == "yes") return true;
  if (*raw == "false" || *raw == "0" || *raw == "no") return false;
  throw ConfigError(section + "." + key, "expected true/false, got '" + *raw + "'");
}

std::optional<VectorXd> ConfigMap::get_vector(const std::string& section,
                                              const std::string& key) const {
  const auto raw = get_string(section, key);
  if (!raw) return std::nullopt;
  std::vector<double> values;
  std::string token;
  std::istringstream in(*raw);
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (token.empty()) {
      throw ConfigError(section + "." + key, "empty element in list '" + *raw + "'");
    }
    try {
      size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (!trim(token.substr(used)).empty()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ConfigError(section + "." + key, "expected numbers, got '" + *raw + "'");
    }
  }
  if (values.empty()) {
    throw ConfigError(section + "." + key, "empty list");
  }
  return Eigen::Map<const VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::vector<std::string> ConfigMap::sections() const {
  std::vector<std::string> names;
  names.reserve(sections_.size());
  for (const auto& [name, _] : sections_) names.push_back(name);
  return names;
}

std::vector<std::string> ConfigMap::keys(const std::string& section) const {
  std::vector<std::string> names;
  const auto sec = sections_.find(section);
  if (sec == sections_.end()) return names;
  for (const auto& [key, _] : sec->second) names.push_back(key);
  return names;
}

std::vector<std::string> ConfigMap::unconsumed() const {
  std::vector<std::string> left;
  for (const auto& [section, kv] : sections_) {
    for (const auto& [key, _] : kv) {
      if (consumed_.count(section + "." + key) == 0) left.push_back(section + "." + key);
    }
  }
  return left;
}

std::string ConfigMap::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [section, kv] : sections_) {
    if (!first) out << '\n';
    first = false;
    out << '[' << section << "]\n";
    for (const auto& [key, value] : kv) {
      out << key << " = " << value << '\n';
    }
  }
  return out.str();
}

}  // namespace steadyarm
