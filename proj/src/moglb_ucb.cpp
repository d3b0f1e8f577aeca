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

#include "moglb/moglb_ucb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "moglb/errors.hpp"

namespace moglb {

namespace {

constexpr double kGammaFloor = 1e-12;
constexpr double kLogdetSlack = 1e-9;

LinkBounds worst_case_bounds(const std::vector<LinkKind>& links, double radius,
                             double identity_noise) {
  if (links.empty()) throw std::invalid_argument("MoglbUcb: no objectives");
  LinkBounds out = derive_bounds(links.front(), radius, identity_noise);
  for (LinkKind link : links) {
    const LinkBounds b = derive_bounds(link, radius, identity_noise);
    out.kappa = std::min(out.kappa, b.kappa);
    out.lipschitz = std::max(out.lipschitz, b.lipschitz);
    out.max_abs_mean = std::max(out.max_abs_mean, b.max_abs_mean);
    out.reward_bound = std::max(out.reward_bound, b.reward_bound);
  }
  return out;
}

double resolve_lambda(const MoglbOptions& options, double kappa) {
  const double lambda = options.lambda.value_or(std::max(1.0, kappa / 2.0));
  if (!(lambda > 0.0)) throw std::invalid_argument("MoglbUcb: lambda <= 0");
  return lambda;
}

ParetoFront all_arms(std::size_t k) {
  ParetoFront f(k);
  std::iota(f.begin(), f.end(), std::size_t{0});
  return f;
}

}  // namespace

MoglbUcb::MoglbUcb(ArmSet arms, std::vector<LinkKind> links,
                   MoglbOptions options)
    : arms_(std::move(arms)),
      links_(std::move(links)),
      options_(options),
      bounds_(worst_case_bounds(links_, options.radius, options.identity_noise)),
      spd_(arms_.dim(), resolve_lambda(options, bounds_.kappa)),
      estimates_(links_.size(), Eigen::VectorXd::Zero(arms_.dim())),
      front_(all_arms(arms_.size())) {
  if (arms_.size() == 0) throw std::invalid_argument("MoglbUcb: empty arm set");
  if (!(options_.delta > 0.0 && options_.delta < 1.0)) {
    throw std::invalid_argument("MoglbUcb: delta must lie in (0, 1)");
  }
  if (options_.gamma.kind == GammaMode::Kind::kTuned &&
      !(options_.gamma.c > 0.0 && std::isfinite(options_.gamma.c))) {
    throw std::invalid_argument("MoglbUcb: tuned c must be positive");
  }
  current_gamma_ = gamma(0);
}

std::size_t MoglbUcb::select_arm(std::size_t /*round*/, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, front_.size() - 1);
  return front_[pick(rng)];
}

void MoglbUcb::update(std::size_t arm, std::span<const double> reward) {
  if (arm >= arms_.size()) throw std::invalid_argument("MoglbUcb: bad arm");
  update_estimates(arms_[arm], reward);

  const std::size_t t = spd_.update_count();
  const double bound = logdet_bound(t);
  if (spd_.logdet_ratio() > bound + kLogdetSlack) {
    throw NumericalFailure("MoglbUcb: log-det ratio " +
                               std::to_string(spd_.logdet_ratio()) +
                               " exceeds its bound " + std::to_string(bound),
                           spd_.logdet_ratio() - bound);
  }
  current_gamma_ = gamma(t);
  front_ = pareto_front(ucb_matrix(current_gamma_));
}

void MoglbUcb::update_estimates(const Eigen::VectorXd& x,
                                std::span<const double> y) {
  if (x.size() != arms_.dim()) {
    throw std::invalid_argument("MoglbUcb: context dimension mismatch");
  }
  if (y.size() != links_.size()) {
    throw std::invalid_argument("MoglbUcb: reward vector has wrong length");
  }
  for (double v : y) {
    if (!std::isfinite(v) || std::abs(v) > bounds_.reward_bound + 1e-12) {
      throw std::invalid_argument("MoglbUcb: reward outside [-R, R]");
    }
  }

  spd_.rank1_update(x, bounds_.kappa / 2.0);
  for (std::size_t i = 0; i < links_.size(); ++i) {
    Eigen::VectorXd& theta = estimates_[i];
    const double residual = link_value(links_[i], theta.dot(x)) - y[i];
    if (residual == 0.0) continue;
    const Eigen::VectorXd newton = theta - residual * (spd_.inverse() * x);
    theta = ball_project(spd_, newton, options_.radius);
  }
}

double theoretical_gamma(const LinkBounds& bounds, double lambda, double radius,
                         std::size_t num_objectives, double delta, std::size_t t,
                         double logdet_ratio) {
  const double m = static_cast<double>(num_objectives);
  const double d2 = radius * radius;
  const double ru = bounds.reward_bound + bounds.max_abs_mean;
  const double ru2 = ru * ru;
  const double kappa = bounds.kappa;
  return 16.0 * ru2 / kappa *
             std::log(m / delta * std::sqrt(1.0 + 4.0 * d2 * static_cast<double>(t))) +
         lambda * d2 + 2.0 * ru2 / kappa * logdet_ratio + kappa / 2.0;
}

double MoglbUcb::gamma(std::size_t t) const {
  const double logdet = spd_.logdet_ratio();
  if (options_.gamma.kind == GammaMode::Kind::kTuned) {
    return std::max(options_.gamma.c * logdet, kGammaFloor);
  }
  return theoretical_gamma(bounds_, spd_.lambda(), options_.radius, links_.size(),
                           options_.delta, t, logdet);
}

RewardMatrix MoglbUcb::ucb_matrix(double gamma) const {
  if (!(gamma >= 0.0)) throw std::invalid_argument("ucb_matrix: gamma < 0");
  const std::size_t k_arms = arms_.size();
  const std::size_t m = links_.size();
  const double width = std::sqrt(gamma);
  RewardMatrix ucb(k_arms, m);
  for (std::size_t k = 0; k < k_arms; ++k) {
    const double bonus = width * std::sqrt(spd_.mahalanobis_sq(arms_[k], true));
    for (std::size_t i = 0; i < m; ++i) {
      ucb(k, i) = estimates_[i].dot(arms_[k]) + bonus;
    }
  }
  return ucb;
}

double MoglbUcb::logdet_bound(std::size_t t) const {
  const double d = spd_.dim();
  const double growth = bounds_.kappa * static_cast<double>(t) / (2.0 * spd_.lambda() * d);
  return d * std::log1p(growth);
}

}  // namespace moglb
