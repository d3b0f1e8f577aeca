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

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "moglb/glm.hpp"
#include "moglb/rng.hpp"

using namespace moglb;

namespace {

const LinkKind kAll[] = {LinkKind::kIdentity, LinkKind::kLogit, LinkKind::kProbit};

double mc_mean(const GlmObjective& obj, const Eigen::VectorXd& x, int n, Rng& rng) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += sample_reward(obj, x, rng);
  return s / n;
}

}  // namespace

TEST_CASE("link values") {
  CHECK(link_value(LinkKind::kLogit, 0.0) == 0.5);
  CHECK(link_value(LinkKind::kProbit, 0.0) == 0.5);
  CHECK(link_value(LinkKind::kIdentity, 1.7) == 1.7);
  // 40-digit references.
  CHECK(link_value(LinkKind::kProbit, 1.0) ==
        doctest::Approx(0.8413447460685429).epsilon(1e-15));
  CHECK(link_value(LinkKind::kProbit, -2.5) ==
        doctest::Approx(0.006209665325776132).epsilon(1e-12));
  CHECK(link_value(LinkKind::kLogit, 1.0) ==
        doctest::Approx(0.7310585786300049).epsilon(1e-15));
}

TEST_CASE("names round-trip") {
  for (LinkKind k : kAll) CHECK(parse_link(to_string(k)) == k);
  CHECK_THROWS_AS(parse_link("cloglog"), std::invalid_argument);
}

TEST_CASE("derived bounds at D = 1") {
  const LinkBounds logit = derive_bounds(LinkKind::kLogit, 1.0);
  CHECK(logit.kappa == doctest::Approx(0.19661193324148185).epsilon(1e-14));
  CHECK(logit.lipschitz == 0.25);
  CHECK(logit.max_abs_mean == doctest::Approx(0.7310585786300049).epsilon(1e-14));
  CHECK(logit.reward_bound == 1.0);

  const LinkBounds probit = derive_bounds(LinkKind::kProbit, 1.0);
  CHECK(probit.kappa == doctest::Approx(0.24197072451914337).epsilon(1e-14));
  CHECK(probit.lipschitz == doctest::Approx(0.3989422804014327).epsilon(1e-14));
  CHECK(probit.max_abs_mean == doctest::Approx(0.8413447460685429).epsilon(1e-14));
  CHECK(probit.reward_bound == 1.0);

  const LinkBounds id = derive_bounds(LinkKind::kIdentity, 1.0);
  CHECK(id.kappa == 1.0);
  CHECK(id.lipschitz == 1.0);
  CHECK(id.max_abs_mean == 1.0);
  CHECK(id.reward_bound == doctest::Approx(1.1));

  CHECK_THROWS_AS(derive_bounds(LinkKind::kLogit, 0.0), std::invalid_argument);
}

TEST_CASE("bounds agree with finite differences on a grid") {
  for (double radius : {0.5, 1.0, 2.0}) {
    for (LinkKind k : kAll) {
      const LinkBounds b = derive_bounds(k, radius);
      CHECK(b.kappa > 0.0);
      CHECK(b.lipschitz >= b.kappa);
      double lo = 1e300, hi = 0.0, umax = 0.0;
      const double h = 1e-5;
      for (double z = -radius + h; z <= radius - h; z += radius / 500.0) {
        const double slope = (link_value(k, z + h) - link_value(k, z - h)) / (2 * h);
        lo = std::min(lo, slope);
        hi = std::max(hi, slope);
        umax = std::max(umax, std::abs(link_value(k, z)));
        CHECK(link_derivative(k, z) == doctest::Approx(slope).epsilon(1e-6));
      }
      CHECK(lo >= b.kappa - 1e-6);
      CHECK(hi <= b.lipschitz + 1e-6);
      CHECK(umax <= b.max_abs_mean + 1e-12);
    }
  }
}

TEST_CASE("links are monotone and Lipschitz") {
  auto rng = make_stream(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (LinkKind k : kAll) {
    std::vector<double> z(2000);
    for (double& x : z) x = u(rng);
    std::sort(z.begin(), z.end());
    const double lip = derive_bounds(k, 1.0).lipschitz;
    for (std::size_t i = 1; i < z.size(); ++i) {
      const double dv = link_value(k, z[i]) - link_value(k, z[i - 1]);
      CHECK(dv >= 0.0);
      CHECK(dv <= lip * (z[i] - z[i - 1]) + 1e-15);
    }
  }
}

TEST_CASE("sampling") {
  auto rng = make_stream(99);
  const int n = 100000;
  Eigen::VectorXd x(2);
  x << 1.0, 0.0;

  const auto zero = GlmObjective::make(LinkKind::kLogit, Eigen::Vector2d::Zero());
  CHECK(std::abs(mc_mean(zero, x, n, rng) - 0.5) < 0.01);

  const auto probit = GlmObjective::make(LinkKind::kProbit, Eigen::Vector2d(1.0, 0.0));
  CHECK(std::abs(mc_mean(probit, x, n, rng) - 0.8413447460685429) < 0.01);

  const auto exact = GlmObjective::make(LinkKind::kIdentity, Eigen::Vector2d(0.3, 0.0), 1.0, 0.0);
  CHECK(sample_reward(exact, x, rng) == doctest::Approx(0.3).epsilon(1e-15));

  const auto noisy = GlmObjective::make(LinkKind::kIdentity, Eigen::Vector2d(0.3, 0.0));
  for (int i = 0; i < 1000; ++i) {
    const double y = sample_reward(noisy, x, rng);
    CHECK(std::abs(y - 0.3) <= 0.1);
  }
  CHECK(std::abs(mc_mean(noisy, x, n, rng) - 0.3) < 0.01);

  // Binary rewards, and the mean tracks the link at an interior point.
  Eigen::VectorXd x2(2);
  x2 << 0.6, -0.5;
  const auto logit = GlmObjective::make(LinkKind::kLogit, Eigen::Vector2d(0.8, 0.4));
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double y = sample_reward(logit, x2, rng);
    REQUIRE((y == 0.0 || y == 1.0));
    s += y;
  }
  CHECK(std::abs(s / n - logit.mean(x2)) < 0.01);

  CHECK_THROWS_AS(sample_reward(logit, Eigen::Vector2d(1.0, 0.1), rng), std::invalid_argument);
  CHECK_THROWS_AS(GlmObjective::make(LinkKind::kLogit, Eigen::Vector2d(1.0, 1.0)),
                  std::invalid_argument);
}
