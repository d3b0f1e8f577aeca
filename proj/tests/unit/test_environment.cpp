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
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "moglb/environment.hpp"
#include "moglb/errors.hpp"

using namespace moglb;

TEST_CASE("coefficients: construction and laws") {
  auto rng = make_stream(17);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::VectorXd th = sample_coefficients(4, rng);
    CHECK((th.array() >= 0.0).all());
    CHECK(th.norm() <= 1.0);
  }

  const int n = 100000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += sample_coefficients(1, rng)[0];
  CHECK(std::abs(s / n - 0.5) < 0.01);

  // Kolmogorov-Smirnov distance of the norm against the r^3 law.
  std::vector<double> r(n);
  for (double& x : r) x = sample_coefficients(3, rng).norm();
  std::sort(r.begin(), r.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cdf = r[i] * r[i] * r[i];
    ks = std::max({ks, std::abs(cdf - static_cast<double>(i) / n),
                   std::abs(cdf - static_cast<double>(i + 1) / n)});
  }
  CHECK(ks < 0.01);
}

TEST_CASE("generated instances follow the recipe") {
  const ProblemInstance a = generate_instance(5, 5, 7);
  CHECK(a.num_arms() == 20);
  CHECK(a.true_front.size() <= 5);
  CHECK(a.links() == std::vector<LinkKind>{LinkKind::kProbit, LinkKind::kProbit,
                                           LinkKind::kLogit, LinkKind::kLogit,
                                           LinkKind::kLogit});
  for (std::size_t k = 0; k < a.num_arms(); ++k) {
    CHECK(a.arms[k].norm() <= 1.0);
    if (k < 15) CHECK(a.arms[k].norm() <= 0.5);
  }
  CHECK(generate_instance(10, 5, 1).num_arms() == 40);
  CHECK(generate_instance(4, 3, 2).links() ==
        std::vector<LinkKind>{LinkKind::kProbit, LinkKind::kLogit, LinkKind::kProbit});

  CHECK_THROWS_AS(generate_instance(1, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(3, 0, 1), std::invalid_argument);
}

TEST_CASE("ground truth is self-consistent") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProblemInstance inst = generate_instance(6, 5, seed);
    CHECK(pareto_front(inst.expected_rewards) == inst.true_front);
    CHECK(psg_table(inst.expected_rewards) == inst.psg_table);
    for (auto k : inst.true_front) CHECK(inst.psg_table[k] == 0.0);
    CHECK((inst.expected_rewards.array() >= 0.0).all());
    CHECK((inst.expected_rewards.array() <= 1.0).all());
    for (std::size_t k = 0; k < inst.num_arms(); ++k)
      for (std::size_t i = 0; i < inst.num_objectives(); ++i)
        CHECK(inst.expected_rewards(k, i) == inst.objectives[i].mean(inst.arms[k]));
  }
}

TEST_CASE("same seed, same bits") {
  const ProblemInstance a = generate_instance(10, 5, 123);
  const ProblemInstance b = generate_instance(10, 5, 123);
  CHECK(instance_to_json(a) == instance_to_json(b));
  CHECK(instance_to_json(a) != instance_to_json(generate_instance(10, 5, 124)));

  // Round trip through text keeps every double.
  const ProblemInstance c = instance_from_json(instance_to_json(a));
  CHECK(instance_to_json(c) == instance_to_json(a));
  for (std::size_t k = 0; k < a.num_arms(); ++k) CHECK(c.arms[k] == a.arms[k]);
  CHECK(c.expected_rewards == a.expected_rewards);
  CHECK(c.true_front == a.true_front);
  CHECK(c.seed == a.seed);

  const auto path = std::filesystem::temp_directory_path() / "moglb_env_test.json";
  save_instance(a, path);
  CHECK(instance_to_json(load_instance(path)) == instance_to_json(a));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(instance_from_json("{\"format\": \"other\"}"), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json("not json"), std::invalid_argument);
}

TEST_CASE("rejection loop gives up") {
  // Seed 24 draws three arm sets whose fronts all have 3 arms.
  GenerateOptions opts;
  opts.max_attempts = 3;
  try {
    generate_instance(2, 12, 24, opts);
    FAIL("expected GenerationFailure");
  } catch (const GenerationFailure& e) {
    CHECK(e.smallest_front() == 3);
  }
}
