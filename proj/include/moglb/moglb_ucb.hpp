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

#ifndef MOGLB_MOGLB_UCB_HPP_
#define MOGLB_MOGLB_UCB_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "moglb/arm_set.hpp"
#include "moglb/glm.hpp"
#include "moglb/pareto.hpp"
#include "moglb/policy.hpp"
#include "moglb/spd_state.hpp"

namespace moglb {

// Width of the confidence ellipsoids.
struct GammaMode {
  enum class Kind { kTheoretical, kTuned };

  Kind kind = Kind::kTuned;
  double c = 0.1;  // tuned mode: gamma = c * logdet_ratio

  static GammaMode theoretical() { return {Kind::kTheoretical, 0.0}; }
  static GammaMode tuned(double c) { return {Kind::kTuned, c}; }
};

struct MoglbOptions {
  GammaMode gamma;
  double delta = 0.1;
  // Defaults to max(1, kappa / 2).
  std::optional<double> lambda;
  // Bound D on every |theta_i|.
  double radius = 1.0;
  // Only consulted for identity links (reward bound R = D + noise).
  double identity_noise = 0.1;
};

/// Multi-objective generalized linear bandit with UCB fronts.
///
/// Every objective shares one design matrix Z grown by (kappa/2) x x^T per
/// round; each coefficient estimate takes an online Newton step in the Z
/// metric followed by a generalized projection back onto the radius-D ball.
/// The next front is the Pareto front of the linear UCB matrix
/// theta_hat_i^T x + sqrt(gamma) |x|_{Z^{-1}}, and arms are drawn uniformly
/// from it. The link is monotone, so it never needs to be evaluated there.
///
/// kappa, U and R are the worst case over the objectives' links on [-D, D].
/// Confidence width after t updates in theoretical mode:
/// 16 (R+U)^2 / kappa * log(m / delta * sqrt(1 + 4 D^2 t)) + lambda D^2
///   + 2 (R+U)^2 / kappa * logdet_ratio + kappa / 2.
double theoretical_gamma(const LinkBounds& bounds, double lambda, double radius,
                         std::size_t num_objectives, double delta, std::size_t t,
                         double logdet_ratio);

class MoglbUcb final : public Policy {
 public:
  MoglbUcb(ArmSet arms, std::vector<LinkKind> links, MoglbOptions options = {});

  std::string_view name() const override { return "moglb"; }
  std::size_t select_arm(std::size_t round, Rng& rng) override;
  void update(std::size_t arm, std::span<const double> reward) override;
  std::optional<ParetoFront> current_front() const override { return front_; }

  /// One online Newton step for every objective: grows Z by (kappa/2) x x^T,
  /// then theta_i <- Proj_Z(theta_i - Z^{-1} (link_i(theta_i^T x) - y_i) x).
  /// Leaves gamma and the front untouched; update() does both.
  void update_estimates(const Eigen::VectorXd& x, std::span<const double> y);

  /// Confidence width after t updates, evaluated with the current log-det.
  double gamma(std::size_t t) const;

  /// Entry (k, i) = theta_i^T x_k + sqrt(gamma) |x_k|_{Z^{-1}}.
  RewardMatrix ucb_matrix(double gamma) const;

  /// d log(1 + kappa t / (2 lambda d)): the bound logdet_ratio obeys after t
  /// updates with unit-bounded contexts.
  double logdet_bound(std::size_t t) const;

  const ArmSet& arms() const { return arms_; }
  const SpdState& spd() const { return spd_; }
  const std::vector<Eigen::VectorXd>& estimates() const { return estimates_; }
  const std::vector<LinkKind>& links() const { return links_; }
  const MoglbOptions& options() const { return options_; }
  // gamma used to build the current front.
  double current_gamma() const { return current_gamma_; }
  std::size_t rounds_observed() const { return spd_.update_count(); }

  double kappa() const { return bounds_.kappa; }
  double lipschitz() const { return bounds_.lipschitz; }
  double max_abs_mean() const { return bounds_.max_abs_mean; }
  double reward_bound() const { return bounds_.reward_bound; }
  double lambda() const { return spd_.lambda(); }

 private:
  ArmSet arms_;
  std::vector<LinkKind> links_;
  MoglbOptions options_;
  LinkBounds bounds_;
  SpdState spd_;
  std::vector<Eigen::VectorXd> estimates_;
  double current_gamma_;
  ParetoFront front_;
};

}  // namespace moglb

#endif  // MOGLB_MOGLB_UCB_HPP_
