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

#ifndef MOGLB_CONFIG_HPP_
#define MOGLB_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moglb/moglb_ucb.hpp"

namespace moglb {

// Thrown for any configuration that violates its documented ranges.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The integer value is the key used to derive per-algorithm random streams,
// so it must never change for an existing algorithm.
enum class Algorithm { kMoglb = 0, kPucb = 1, kSucb = 2, kPts = 3 };

std::string_view algorithm_name(Algorithm algo);
// Throws ConfigError listing the valid names.
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();
// Comma separated list, e.g. "moglb,pucb".
std::vector<Algorithm> parse_roster(std::string_view list);

struct ExperimentConfig {
  int d = 10;
  std::size_t m = 5;
  std::size_t horizon = 3000;
  std::size_t trials = 10;
  std::uint64_t base_seed = 1;
  std::vector<Algorithm> algorithms = all_algorithms();
  GammaMode gamma = GammaMode::tuned(0.1);
  double delta = 0.1;
  std::optional<double> lambda;  // unset: max(1, kappa / 2)
  std::string output;            // CSV path; empty picks a default
  std::string instance;          // pinned instance file; empty draws one per trial
  std::size_t jobs = 1;
  std::size_t max_attempts = 1000;
};

// d >= 2, m >= 1, horizon >= 1, trials >= 1, delta in (0, 1),
// c in [1e-3, 1] in tuned mode, lambda > 0 when set, non-empty roster,
// jobs >= 1. Throws ConfigError.
void validate(const ExperimentConfig& config);

inline constexpr int kConfigFormatVersion = 1;

// Flat "key = value" document, one key per line, '#' comments. Every field is
// written, doubles with 17 significant digits, so parsing the text gives back
// an equal config.
std::string config_to_text(const ExperimentConfig& config);
// Starts from the defaults and applies the keys present. Throws ConfigError on
// unknown keys, bad values or a format_version mismatch.
ExperimentConfig config_from_text(std::string_view text);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace moglb

#endif  // MOGLB_CONFIG_HPP_
