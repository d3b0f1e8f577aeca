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

#ifndef MOGLB_SPD_STATE_HPP_
#define MOGLB_SPD_STATE_HPP_

#include <cstddef>

#include <Eigen/Dense>

namespace moglb {

/// Symmetric positive definite design matrix Z = lambda*I + sum_s w_s x_s x_s^T
/// with a maintained inverse and log-determinant.
///
/// The inverse follows Sherman-Morrison on every rank-1 update and is
/// recomputed from Z by Cholesky every kRefreshInterval updates, which also
/// resets the accumulated drift in the log-determinant. logdet_ratio() is
/// log det(Z) - log det(lambda*I) and never decreases.
class SpdState {
 public:
  static constexpr std::size_t kRefreshInterval = 500;

  /// Z = lambda*I. Throws std::invalid_argument unless dim > 0, lambda > 0.
  SpdState(int dim, double lambda);

  /// Z += weight * x x^T. Throws std::invalid_argument on a size mismatch or
  /// a negative / non-finite weight.
  void rank1_update(const Eigen::VectorXd& x, double weight);

  /// v^T Z v, or v^T Z^{-1} v when use_inverse is set.
  double mahalanobis_sq(const Eigen::VectorXd& v, bool use_inverse) const;

  /// Recomputes the inverse and log-determinant from Z directly.
  void refresh();

  int dim() const { return dim_; }
  double lambda() const { return lambda_; }
  const Eigen::MatrixXd& matrix() const { return z_; }
  const Eigen::MatrixXd& inverse() const { return z_inv_; }
  double logdet_ratio() const { return logdet_ratio_; }
  std::size_t update_count() const { return update_count_; }

 private:
  int dim_;
  double lambda_;
  Eigen::MatrixXd z_;
  Eigen::MatrixXd z_inv_;
  double logdet_ratio_ = 0.0;
  std::size_t update_count_ = 0;
};

/// Generalized projection onto the centered ball of the given radius:
/// argmin_{|y| <= radius} (y - point)^T Z (y - point).
///
/// Interior points are returned unchanged. Otherwise y = (Z + nu I)^{-1} Z point
/// with nu >= 0 found by bisection so that radius - |y| <= 1e-10; the returned
/// point always lies inside the ball. Throws NumericalFailure if bisection
/// does not converge within 200 iterations.
Eigen::VectorXd ball_project(const SpdState& state, const Eigen::VectorXd& point,
                             double radius);

}  // namespace moglb

#endif  // MOGLB_SPD_STATE_HPP_
