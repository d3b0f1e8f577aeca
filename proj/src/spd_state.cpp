// Copyright 2026 The moglb Authors.
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

#include "moglb/spd_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "moglb/errors.hpp"

namespace moglb {

namespace {

constexpr double kProjectionTolerance = 1e-10;
constexpr int kProjectionMaxIterations = 200;

void check_size(const SpdState& state, const Eigen::VectorXd& v) {
  if (v.size() != state.dim()) {
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                " does not match dimension " +
                                std::to_string(state.dim()));
  }
}

}  // namespace

SpdState::SpdState(int dim, double lambda) : dim_(dim), lambda_(lambda) {
  if (dim <= 0) throw std::invalid_argument("SpdState: dim must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("SpdState: lambda must be positive and finite");
  }
  z_ = Eigen::MatrixXd::Identity(dim, dim) * lambda;
  z_inv_ = Eigen::MatrixXd::Identity(dim, dim) / lambda;
}

void SpdState::rank1_update(const Eigen::VectorXd& x, double weight) {
  check_size(*this, x);
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("rank1_update: weight must be finite and >= 0");
  }
  ++update_count_;

  const Eigen::VectorXd u = z_inv_ * x;
  const double quad = x.dot(u);
  if (weight > 0.0 && quad > 0.0) {
    // Products are formed as w * (a_i * a_j) so both triangles get identical
    // bits and Z stays exactly symmetric.
    const double shrink = weight / (1.0 + weight * quad);
    for (int j = 0; j < dim_; ++j) {
      for (int i = 0; i < dim_; ++i) {
        z_(i, j) += weight * (x(i) * x(j));
        z_inv_(i, j) -= shrink * (u(i) * u(j));
      }
    }
    logdet_ratio_ += std::log1p(weight * quad);
  }

  if (update_count_ % kRefreshInterval == 0) refresh();
}

double SpdState::mahalanobis_sq(const Eigen::VectorXd& v,
                                bool use_inverse) const {
  check_size(*this, v);
  const double q = use_inverse ? v.dot(z_inv_ * v) : v.dot(z_ * v);
  return std::max(q, 0.0);
}

void SpdState::refresh() {
  z_ = 0.5 * (z_ + z_.transpose()).eval();
  Eigen::LLT<Eigen::MatrixXd> llt(z_);
  if (llt.info() != Eigen::Success) {
    throw NumericalFailure("SpdState: Cholesky factorization failed", 0.0);
  }
  z_inv_ = llt.solve(Eigen::MatrixXd::Identity(dim_, dim_));
  z_inv_ = 0.5 * (z_inv_ + z_inv_.transpose()).eval();

  const Eigen::MatrixXd l = llt.matrixL();
  double logdet = 0.0;
  for (int i = 0; i < dim_; ++i) logdet += 2.0 * std::log(l(i, i));
  const double direct = logdet - dim_ * std::log(lambda_);
  // The direct value differs from the running sum only by rounding; keeping
  // the larger one preserves monotonicity across refreshes.
  logdet_ratio_ = std::max(direct, logdet_ratio_);
}

Eigen::VectorXd ball_project(const SpdState& state, const Eigen::VectorXd& point,
                             double radius) {
  check_size(state, point);
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball_project: radius must be positive");
  }
  if (!point.allFinite()) {
    throw std::invalid_argument("ball_project: point must be finite");
  }
  if (point.norm() <= radius) return point;

  const Eigen::MatrixXd& z = state.matrix();
  const Eigen::VectorXd zp = z * point;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(state.dim(), state.dim());
  auto solve = [&](double nu) -> Eigen::VectorXd {
    return (z + nu * eye).llt().solve(zp);
  };

  // trace(Z) >= lambda_max(Z), so |y(nu_hi)| <= lambda_max |p| / nu_hi <= radius.
  double lo = 0.0;
  double hi = z.trace() * point.norm() / radius;
  Eigen::VectorXd y_hi = solve(hi);
  double residual = radius - y_hi.norm();

  for (int iter = 0; iter < kProjectionMaxIterations; ++iter) {
    if (residual >= 0.0 && residual <= kProjectionTolerance) return y_hi;
    const double mid = 0.5 * (lo + hi);
    Eigen::VectorXd y = solve(mid);
    if (y.norm() <= radius) {
      hi = mid;
      y_hi = std::move(y);
      residual = radius - y_hi.norm();
    } else {
      lo = mid;
    }
  }
  if (residual >= 0.0 && residual <= kProjectionTolerance) return y_hi;
  throw NumericalFailure("ball_project: bisection did not converge, residual " +
                             std::to_string(residual),
                         residual);
}

}  // namespace moglb
