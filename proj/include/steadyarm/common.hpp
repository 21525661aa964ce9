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

#ifndef STEADYARM_COMMON_HPP_
#define STEADYARM_COMMON_HPP_

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace steadyarm {

using Eigen::MatrixXd;
using Eigen::Vector2d;
using Eigen::VectorXd;

/// Thrown when a caller violates a documented precondition (dimension
/// mismatch, non-finite input, out-of-range parameter).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a model invariant fails at runtime, e.g. the inertia matrix
/// stops being positive definite.
class ModelInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by pseudoinverse/IK code on rank-deficient Jacobians when no
/// damping was requested.
class SingularJacobianError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a task-space target lies outside the reachable workspace.
class ReachabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a log is missing columns (or rows) an analysis needs.
class LogSchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration/schema problem. Carries the offending "section.key" so the
/// CLI can name it in diagnostics.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message),
        key_(std::move(key)) {}
  explicit ConfigError(const std::string& message) : ConfigError("", message) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// File read/write failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

inline void require_finite(const VectorXd& v, const std::string& what) {
  if (!v.allFinite()) throw ContractViolation(what + " contains non-finite entries");
}

}  // namespace steadyarm

#endif  // STEADYARM_COMMON_HPP_
