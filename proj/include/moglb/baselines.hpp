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

#ifndef MOGLB_BASELINES_HPP_
#define MOGLB_BASELINES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "moglb/pareto.hpp"
#include "moglb/policy.hpp"
#include "moglb/rng.hpp"

// Context-free multi-objective bandits: Pareto UCB, scalarized UCB and
// Pareto Thompson sampling with Beta-Bernoulli posteriors.
namespace moglb {

// Per-arm pull counts, per-(arm, objective) reward sums and Beta(alpha, beta)
// posteriors starting from Beta(1, 1).
struct MabStats {
  MabStats(std::size_t num_arms, std::size_t num_objectives);

  std::size_t num_arms() const { return counts.size(); }
  std::size_t num_objectives() const { return static_cast<std::size_t>(sums.cols()); }
  double mean(std::size_t arm, std::size_t objective) const;

  // Adds one observation. Posteriors move only for rewards in {0, 1}; when
  // require_binary is set anything else throws std::invalid_argument.
  void record(std::size_t arm, std::span<const double> reward,
              bool require_binary = false);

  std::vector<std::size_t> counts;
  RewardMatrix sums;
  RewardMatrix alpha;
  RewardMatrix beta;
};

// sqrt(2 ln(t (m K)^{1/4}) / n).
double pucb_bonus(std::size_t t, std::size_t pulls, std::size_t num_objectives,
                  std::size_t num_arms);

// Lowest-index arm that was never pulled, if any.
std::optional<std::size_t> first_unplayed(const MabStats& stats);

// Pareto UCB. Unplayed arms are pulled first in index order; afterwards the
// front of the per-objective UCB vectors is computed and an arm is drawn
// uniformly from it. The front is written to *front when given (all arms
// during the forced pulls).
std::size_t pucb_select(const MabStats& stats, std::size_t t, Rng& rng,
                        ParetoFront* front = nullptr);

// Scalarized UCB1 on the weighted mean. Weights must be non-negative and sum
// to 1 within 1e-9. Ties are broken uniformly at random.
std::size_t sucb_select(const MabStats& stats, std::span<const double> weights,
                        std::size_t t, Rng& rng);

// Pareto Thompson sampling: one Beta draw per (arm, objective), an arm drawn
// uniformly from the front of the sampled matrix.
std::size_t pts_select(const MabStats& stats, Rng& rng,
                       ParetoFront* front = nullptr);

double sample_beta(double alpha, double beta, Rng& rng);

class ParetoUcb final : public Policy {
 public:
  ParetoUcb(std::size_t num_arms, std::size_t num_objectives);

  std::string_view name() const override { return "pucb"; }
  std::size_t select_arm(std::size_t round, Rng& rng) override;
  void update(std::size_t arm, std::span<const double> reward) override;
  std::optional<ParetoFront> current_front() const override { return front_; }

  const MabStats& stats() const { return stats_; }

 private:
  MabStats stats_;
  ParetoFront front_;
};

class ScalarizedUcb final : public Policy {
 public:
  // Empty weights mean equal weights 1/m.
  ScalarizedUcb(std::size_t num_arms, std::size_t num_objectives,
                std::vector<double> weights = {});

  std::string_view name() const override { return "sucb"; }
  std::size_t select_arm(std::size_t round, Rng& rng) override;
  void update(std::size_t arm, std::span<const double> reward) override;
  std::optional<ParetoFront> current_front() const override {
    return std::nullopt;
  }

  const MabStats& stats() const { return stats_; }

 private:
  MabStats stats_;
  std::vector<double> weights_;
};

// Rewards must be binary. Every arm is pulled once before sampling starts.
class ParetoThompson final : public Policy {
 public:
  ParetoThompson(std::size_t num_arms, std::size_t num_objectives);

  std::string_view name() const override { return "pts"; }
  std::size_t select_arm(std::size_t round, Rng& rng) override;
  void update(std::size_t arm, std::span<const double> reward) override;
  std::optional<ParetoFront> current_front() const override { return front_; }

  const MabStats& stats() const { return stats_; }

 private:
  MabStats stats_;
  ParetoFront front_;
};

}  // namespace moglb

#endif  // MOGLB_BASELINES_HPP_
