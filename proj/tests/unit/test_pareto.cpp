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
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "moglb/pareto.hpp"
#include "oracles.hpp"

using namespace moglb;
using moglb::testing::oracle_front;
using moglb::testing::oracle_psg;
using moglb::testing::random_matrix;

namespace {

std::vector<double> v(std::initializer_list<double> xs) { return xs; }

RewardMatrix four_rows() {
  RewardMatrix r(4, 2);
  r << 1, 0, 0, 1, 0.5, 0.5, 0.2, 0.2;
  return r;
}

std::span<const double> row(const RewardMatrix& r, Eigen::Index k) {
  return {r.data() + k * r.cols(), static_cast<std::size_t>(r.cols())};
}

}  // namespace

TEST_CASE("dominance predicates") {
  CHECK(dominates(v({2, 3}), v({1, 2})));
  CHECK_FALSE(dominates(v({1, 2}), v({1, 2})));
  CHECK_FALSE(dominates(v({2, 1}), v({1, 2})));
  CHECK(not_dominated(v({1, 2}), v({1, 2})));
  CHECK_FALSE(not_dominated(v({1, 2}), v({2, 3})));
  CHECK(not_dominated(v({2, 1}), v({1, 2})));
  CHECK_THROWS_AS(dominates(v({1}), v({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(not_dominated(v({1}), v({1, 2})), std::invalid_argument);
}

TEST_CASE("front extraction") {
  CHECK(pareto_front(four_rows()) == ParetoFront{0, 1, 2});
  RewardMatrix dup(2, 2);
  dup << 1, 1, 1, 1;
  CHECK(pareto_front(dup) == ParetoFront{0, 1});
  CHECK_THROWS_AS(pareto_front(RewardMatrix(0, 2)), std::invalid_argument);
  RewardMatrix bad(1, 1);
  bad << std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(pareto_front(bad), std::invalid_argument);
}

TEST_CASE("psg") {
  const RewardMatrix r = four_rows();
  CHECK(psg(r, 2) == 0.0);
  CHECK(psg(r, 3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(psg(r, 3) == doctest::Approx(oracle_psg(r, 3)).epsilon(1e-9));
  RewardMatrix one(1, 3);
  one << 0.1, 0.2, 0.3;
  CHECK(psg(one, 0) == 0.0);
  CHECK_THROWS_AS(psg(r, 4), std::invalid_argument);
  const auto table = psg_table(r);
  REQUIRE(table.size() == 4);
  CHECK(table[3] == psg(r, 3));
}

TEST_CASE("jaccard") {
  CHECK(jaccard({1, 2, 3}, {1, 2, 3}) == 1.0);
  CHECK(jaccard({1, 2}, {3, 4}) == 0.0);
  CHECK(jaccard({1, 2, 3}, {2, 3, 4}) == 0.5);
  CHECK(jaccard({3, 1}, {1}) == 0.5);
  CHECK(jaccard({}, {2}) == 0.0);
  CHECK_THROWS_AS(jaccard({}, {}), std::invalid_argument);
}

TEST_CASE("random matrices agree with the brute-force oracles") {
  auto rng = make_stream(2024);
  std::uniform_int_distribution<std::size_t> kd(1, 50), md(1, 5);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t k = kd(rng), m = md(rng);
    const RewardMatrix r = random_matrix(k, m, rng);
    const ParetoFront front = pareto_front(r);
    REQUIRE(front == oracle_front(r));
    REQUIRE_FALSE(front.empty());
    for (std::size_t a = 0; a < k; ++a) {
      const double g = psg(r, a);
      CHECK(g >= 0.0);
      CHECK(std::abs(g - oracle_psg(r, a)) <= 1e-9);
      const bool member = std::binary_search(front.begin(), front.end(), a);
      CHECK((g == 0.0) == member);
    }
  }
}

TEST_CASE("order properties on random pairs") {
  auto rng = make_stream(77);
  std::uniform_int_distribution<int> grid(0, 3);  // small grid produces ties
  for (int rep = 0; rep < 5000; ++rep) {
    std::array<double, 3> u{}, w{};
    for (int i = 0; i < 3; ++i) {
      u[i] = grid(rng);
      w[i] = grid(rng);
    }
    const bool uw = dominates(u, w);
    const bool wu = dominates(w, u);
    CHECK_FALSE((uw && wu));  // at most one direction
    CHECK(not_dominated(w, u) == !uw);
  }
}

TEST_CASE("front is invariant under a common shift") {
  auto rng = make_stream(3);
  for (int rep = 0; rep < 100; ++rep) {
    const RewardMatrix r = random_matrix(30, 4, rng);
    const RewardMatrix shifted = (r.array() + 0.75).matrix();
    CHECK(pareto_front(shifted) == pareto_front(r));
  }
}

TEST_CASE("members of a front are pairwise incomparable or equal") {
  auto rng = make_stream(8);
  for (int rep = 0; rep < 50; ++rep) {
    const RewardMatrix r = random_matrix(40, 3, rng);
    const ParetoFront f = pareto_front(r);
    for (auto a : f)
      for (auto b : f) CHECK_FALSE(dominates(row(r, a), row(r, b)));
  }
}
