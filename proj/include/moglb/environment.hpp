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

#ifndef MOGLB_ENVIRONMENT_HPP_
#define MOGLB_ENVIRONMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "moglb/arm_set.hpp"
#include "moglb/glm.hpp"
#include "moglb/pareto.hpp"
#include "moglb/rng.hpp"

namespace moglb {

// Synthetic problem with its ground truth precomputed. Immutable once built.
struct ProblemInstance {
  ArmSet arms;
  std::vector<GlmObjective> objectives;
  RewardMatrix expected_rewards;  // (k, i) = link_i(theta_i^T x_k)
  ParetoFront true_front;
  std::vector<double> psg_table;
  std::optional<std::uint64_t> seed;

  std::size_t num_arms() const { return arms.size(); }
  std::size_t num_objectives() const { return objectives.size(); }
  int dim() const { return arms.dim(); }
  std::vector<LinkKind> links() const;
};

// Computes expected rewards, true front and gaps.
ProblemInstance build_instance(ArmSet arms, std::vector<GlmObjective> objectives,
                               std::optional<std::uint64_t> seed = std::nullopt);

// Uniform draw from the centered ball of the given radius.
Eigen::VectorXd sample_in_ball(int d, double radius, Rng& rng);

// Uniform draw from the non-negative orthant part of the unit ball.
Eigen::VectorXd sample_coefficients(int d, Rng& rng);

// Two probit then three logit objectives when m == 5, otherwise alternating
// probit / logit starting with probit.
std::vector<LinkKind> default_links(std::size_t m);

struct GenerateOptions {
  std::size_t max_attempts = 1000;
  // Empty means default_links(m).
  std::vector<LinkKind> links;
};

/// Draws coefficients once per objective, then resamples arm sets (3d arms
/// from the radius-0.5 ball followed by d arms from the unit ball) until the
/// true front has at most d arms. Throws std::invalid_argument for d < 2 or
/// m < 1 and GenerationFailure when max_attempts is exhausted.
ProblemInstance generate_instance(int d, std::size_t m, std::uint64_t seed,
                                  const GenerateOptions& options = {});

// Self-describing JSON with a format version. Derived fields are recomputed
// on load, so a round trip reproduces the instance bit for bit.
std::string instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(std::string_view text);
void save_instance(const ProblemInstance& instance,
                   const std::filesystem::path& path);
ProblemInstance load_instance(const std::filesystem::path& path);

}  // namespace moglb

#endif  // MOGLB_ENVIRONMENT_HPP_
