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

#include <string>

#include "doctest.h"
#include "moglb/config.hpp"

using namespace moglb;

TEST_CASE("text round trip") {
  ExperimentConfig c;
  CHECK(config_from_text(config_to_text(c)) == c);

  c.d = 7;
  c.m = 2;
  c.horizon = 123;
  c.trials = 4;
  c.base_seed = 18446744073709551615ULL;
  c.algorithms = {Algorithm::kPts, Algorithm::kMoglb};
  c.gamma = GammaMode::tuned(0.1 + 0.2);  // not exactly representable as 0.3
  c.delta = 0.05;
  c.lambda = 1.0 / 3.0;
  c.output = "out/run.csv";
  c.instance = "inst.json";
  c.jobs = 8;
  c.max_attempts = 17;
  const ExperimentConfig back = config_from_text(config_to_text(c));
  CHECK(back == c);
  CHECK(back.gamma.c == 0.1 + 0.2);

  c.gamma = GammaMode::theoretical();
  c.lambda.reset();
  CHECK(config_from_text(config_to_text(c)) == c);
}

TEST_CASE("parsing") {
  const ExperimentConfig c = config_from_text(
      "# comment\nformat_version = 1\n\n  T=50  # trailing\nalgorithms = moglb, sucb\n");
  CHECK(c.horizon == 50);
  CHECK(c.algorithms == std::vector<Algorithm>{Algorithm::kMoglb, Algorithm::kSucb});
  CHECK(c.d == 10);

  CHECK_THROWS_AS(config_from_text("T = 5\n"), ConfigError);
  CHECK_THROWS_AS(config_from_text("format_version = 2\n"), ConfigError);
  CHECK_THROWS_AS(config_from_text("format_version = 1\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(config_from_text("format_version = 1\nT = ten\n"), ConfigError);
  CHECK_THROWS_AS(config_from_text("format_version = 1\nT\n"), ConfigError);
  CHECK_THROWS_AS(config_from_text("format_version = 1\ngamma_mode = wide\n"), ConfigError);
}

TEST_CASE("roster names") {
  for (Algorithm a : all_algorithms()) CHECK(parse_algorithm(algorithm_name(a)) == a);
  try {
    parse_algorithm("egreedy");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    for (const char* name : {"moglb", "pucb", "sucb", "pts"})
      CHECK(what.find(name) != std::string::npos);
  }
}

TEST_CASE("validation") {
  auto bad = [](auto mutate) {
    ExperimentConfig c;
    mutate(c);
    return c;
  };
  CHECK_NOTHROW(validate(ExperimentConfig{}));
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.d = 1; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.m = 0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.horizon = 0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.trials = 0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.delta = 1.0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.delta = 0.0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.gamma.c = 2.0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.gamma.c = 1e-4; })), ConfigError);
  CHECK_NOTHROW(validate(bad([](auto& c) { c.gamma = GammaMode::theoretical(); })));
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.lambda = -1.0; })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.algorithms.clear(); })), ConfigError);
  CHECK_THROWS_AS(validate(bad([](auto& c) { c.jobs = 0; })), ConfigError);
}
