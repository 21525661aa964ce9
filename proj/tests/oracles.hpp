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

// Test-only numerical oracles. Everything here is independent of the library
// implementation it checks: plain central differences and quadrature.

#ifndef STEADYARM_TESTS_ORACLES_HPP_
#define STEADYARM_TESTS_ORACLES_HPP_

#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;

using ScalarField = std::function<double(const VectorXd&)>;
using VectorField = std::function<VectorXd(const VectorXd&)>;
using MatrixField = std::function<MatrixXd(const VectorXd&)>;

inline VectorXd gradient(const ScalarField& f, const VectorXd& x, double h) {
  VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

inline MatrixXd hessian(const ScalarField& f, const VectorXd& x, double h) {
  const auto n = x.size();
  MatrixXd hess(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
      xpp[i] += h;
      xpp[j] += h;
      xpm[i] += h;
      xpm[j] -= h;
      xmp[i] -= h;
      xmp[j] += h;
      xmm[i] -= h;
      xmm[j] -= h;
      hess(i, j) = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
      hess(j, i) = hess(i, j);
    }
  }
  return hess;
}

/// d/ds M(x + s v) at s = 0 -- the time derivative of M along a flow with
/// velocity v.
inline MatrixXd matrix_flow_derivative(const MatrixField& m, const VectorXd& x,
                                       const VectorXd& v, double h) {
  return (m(x + h * v) - m(x - h * v)) / (2.0 * h);
}

inline MatrixXd jacobian(const VectorField& f, const VectorXd& x, double h) {
  const VectorXd f0 = f(x);
  MatrixXd jac(f0.size(), x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    jac.col(i) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return jac;
}

inline std::vector<double> cumtrapz(const std::vector<double>& t,
                                    const std::vector<double>& y) {
  std::vector<double> out(t.size(), 0.0);
  for (size_t k = 1; k < t.size(); ++k) {
    out[k] = out[k - 1] + 0.5 * (y[k] + y[k - 1]) * (t[k] - t[k - 1]);
  }
  return out;
}

class Rng {
 public:
  explicit Rng(uint32_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  VectorXd uniform_vec(const VectorXd& lo, const VectorXd& hi) {
    VectorXd v(lo.size());
    for (Eigen::Index i = 0; i < lo.size(); ++i) v[i] = uniform(lo[i], hi[i]);
    return v;
  }

  VectorXd uniform_vec(int n, double lo, double hi) {
    VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  VectorXd unit_vec(int n) {
    VectorXd v = uniform_vec(n, -1.0, 1.0);
    while (v.norm() < 1e-6) v = uniform_vec(n, -1.0, 1.0);
    return v / v.norm();
  }

 private:
  std::mt19937 gen_;
};

}  // namespace oracle

#endif  // STEADYARM_TESTS_ORACLES_HPP_
