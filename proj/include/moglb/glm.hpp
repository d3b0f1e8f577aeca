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

#ifndef MOGLB_GLM_HPP_
#define MOGLB_GLM_HPP_

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "moglb/rng.hpp"

namespace moglb {

enum class LinkKind { kIdentity, kLogit, kProbit };

std::string_view to_string(LinkKind kind);
// Throws std::invalid_argument for anything other than
// "identity", "logit" or "probit".
LinkKind parse_link(std::string_view name);

// Mean reward as a function of the linear predictor.
double link_value(LinkKind kind, double z);

// Slope of link_value.
double link_derivative(LinkKind kind, double z);

// Constants of a link restricted to [-radius, radius].
struct LinkBounds {
  double kappa = 0.0;         // min slope
  double lipschitz = 0.0;     // max slope
  double max_abs_mean = 0.0;  // max |link|
  double reward_bound = 0.0;  // almost-sure bound on |reward|
};

// identity_noise is the half-width of the uniform noise added to identity
// rewards; it only affects reward_bound for kIdentity.
LinkBounds derive_bounds(LinkKind kind, double radius,
                         double identity_noise = 0.1);

/// One objective of the reward model: E[y | x] = link(theta^T x).
struct GlmObjective {
  LinkKind link = LinkKind::kLogit;
  Eigen::VectorXd theta;
  double radius = 1.0;          // bound on |theta|
  double identity_noise = 0.1;  // uniform noise half-width, identity link only
  LinkBounds bounds;

  /// Validates |theta| <= radius and fills in bounds.
  static GlmObjective make(LinkKind link, Eigen::VectorXd theta,
                           double radius = 1.0, double identity_noise = 0.1);

  double mean(const Eigen::VectorXd& x) const {
    return link_value(link, theta.dot(x));
  }
};

// Draws one reward for context x. Binary links give y in {0, 1}; the identity
// link gives theta^T x plus uniform noise. Throws std::invalid_argument if
// |x| > 1 + 1e-9 or on a size mismatch.
double sample_reward(const GlmObjective& objective, const Eigen::VectorXd& x,
                     Rng& rng);

}  // namespace moglb

#endif  // MOGLB_GLM_HPP_
