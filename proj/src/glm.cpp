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

#include "moglb/glm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace moglb {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

std::string_view to_string(LinkKind kind) {
  switch (kind) {
    case LinkKind::kIdentity:
      return "identity";
    case LinkKind::kLogit:
      return "logit";
    case LinkKind::kProbit:
      return "probit";
  }
  return "unknown";
}

LinkKind parse_link(std::string_view name) {
  if (name == "identity") return LinkKind::kIdentity;
  if (name == "logit") return LinkKind::kLogit;
  if (name == "probit") return LinkKind::kProbit;
  throw std::invalid_argument("unknown link '" + std::string(name) +
                              "' (expected identity, logit or probit)");
}

double link_value(LinkKind kind, double z) {
  switch (kind) {
    case LinkKind::kIdentity:
      return z;
    case LinkKind::kLogit:
      return sigmoid(z);
    case LinkKind::kProbit:
      // erfc keeps full relative accuracy in the lower tail.
      return 0.5 * std::erfc(-z / std::numbers::sqrt2);
  }
  return z;
}

double link_derivative(LinkKind kind, double z) {
  switch (kind) {
    case LinkKind::kIdentity:
      return 1.0;
    case LinkKind::kLogit: {
      const double s = sigmoid(z);
      return s * (1.0 - s);
    }
    case LinkKind::kProbit:
      return normal_pdf(z);
  }
  return 1.0;
}

LinkBounds derive_bounds(LinkKind kind, double radius, double identity_noise) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("derive_bounds: radius must be positive");
  }
  // Both binary links have an even slope that peaks at 0, so the extremes on
  // [-D, D] sit at 0 and at the endpoints.
  switch (kind) {
    case LinkKind::kIdentity:
      return {1.0, 1.0, radius, radius + identity_noise};
    case LinkKind::kLogit:
      return {link_derivative(kind, radius), 0.25, sigmoid(radius), 1.0};
    case LinkKind::kProbit:
      return {normal_pdf(radius), normal_pdf(0.0), link_value(kind, radius),
              1.0};
  }
  return {};
}

GlmObjective GlmObjective::make(LinkKind link, Eigen::VectorXd theta,
                                double radius, double identity_noise) {
  if (theta.size() == 0) {
    throw std::invalid_argument("GlmObjective: empty coefficient vector");
  }
  if (!theta.allFinite() || theta.norm() > radius * (1.0 + 1e-12)) {
    throw std::invalid_argument("GlmObjective: |theta| exceeds the radius");
  }
  if (!(identity_noise >= 0.0) || !std::isfinite(identity_noise)) {
    throw std::invalid_argument("GlmObjective: noise bound must be >= 0");
  }
  GlmObjective obj;
  obj.link = link;
  obj.theta = std::move(theta);
  obj.radius = radius;
  obj.identity_noise = identity_noise;
  obj.bounds = derive_bounds(link, radius, identity_noise);
  return obj;
}

double sample_reward(const GlmObjective& objective, const Eigen::VectorXd& x,
                     Rng& rng) {
  if (x.size() != objective.theta.size()) {
    throw std::invalid_argument("sample_reward: context dimension mismatch");
  }
  if (x.norm() > 1.0 + 1e-9) {
    throw std::invalid_argument("sample_reward: context norm exceeds 1");
  }
  const double z = objective.theta.dot(x);
  if (objective.link == LinkKind::kIdentity) {
    if (objective.identity_noise == 0.0) return z;
    std::uniform_real_distribution<double> noise(-objective.identity_noise,
                                                 objective.identity_noise);
    return z + noise(rng);
  }
  std::bernoulli_distribution coin(link_value(objective.link, z));
  return coin(rng) ? 1.0 : 0.0;
}

}  // namespace moglb
