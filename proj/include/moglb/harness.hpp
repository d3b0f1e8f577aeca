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

#ifndef MOGLB_HARNESS_HPP_
#define MOGLB_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "moglb/config.hpp"
#include "moglb/environment.hpp"
#include "moglb/policy.hpp"

namespace moglb {

struct RoundRecord {
  std::string algo;
  std::size_t trial = 0;
  std::size_t t = 0;  // 1-based
  std::size_t arm = 0;
  double instant_psg = 0.0;
  double cum_pareto_regret = 0.0;
  std::size_t front_size = 0;     // 0 when the policy keeps no front
  std::optional<double> jaccard;  // against the true front

  bool operator==(const RoundRecord&) const = default;
};

struct CheckpointStats {
  std::size_t t = 0;
  double regret_mean = 0.0;
  double regret_std = 0.0;
  std::optional<double> jaccard_mean;
  std::optional<double> jaccard_std;
};

struct AlgorithmSummary {
  std::string algo;
  std::vector<CheckpointStats> checkpoints;
};

// Per-algorithm mean and sample standard deviation across trials at 10%, 50%
// and 100% of the horizon.
struct RunSummary {
  std::size_t horizon = 0;
  std::size_t trials = 0;
  std::vector<AlgorithmSummary> algorithms;

  const AlgorithmSummary* find(std::string_view algo) const;
};

struct ExperimentResult {
  std::vector<RoundRecord> records;  // sorted by (algorithm id, trial, t)
  RunSummary summary;
};

// A trial that threw; identifies the failing job.
class ExperimentFailure : public std::runtime_error {
 public:
  ExperimentFailure(const std::string& what, Algorithm algo, std::size_t trial,
                    std::uint64_t seed)
      : std::runtime_error(what), algo_(algo), trial_(trial), seed_(seed) {}

  Algorithm algo() const { return algo_; }
  std::size_t trial() const { return trial_; }
  std::uint64_t seed() const { return seed_; }

 private:
  Algorithm algo_;
  std::size_t trial_;
  std::uint64_t seed_;
};

/// Runs one policy for `horizon` rounds. Rewards come from the stream
/// (seed, algo_key, trial, 0) and the policy's own randomness from
/// (seed, algo_key, trial, 1), so records depend only on these keys.
std::vector<RoundRecord> run_trial(const ProblemInstance& instance, Policy& policy,
                                   std::size_t horizon, std::uint64_t seed,
                                   std::uint64_t algo_key, std::size_t trial);

std::unique_ptr<Policy> make_policy(Algorithm algo, const ProblemInstance& instance,
                                    const ExperimentConfig& config);

// Seed of the instance drawn for a trial when none is pinned.
std::uint64_t instance_seed(std::uint64_t base_seed, std::size_t trial);

// 10%, 50% and 100% of the horizon (at least round 1, duplicates removed).
std::vector<std::size_t> checkpoints(std::size_t horizon);

/// Every (algorithm, trial) pair as an independent job on up to config.jobs
/// threads. With a pinned instance every trial uses it; otherwise trial j
/// uses generate_instance(d, m, instance_seed(base_seed, j)). Output does
/// not depend on the job count or the roster order.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const ProblemInstance* pinned = nullptr);

RunSummary summarize(const std::vector<RoundRecord>& records, std::size_t horizon,
                     std::size_t trials);

// Header algo,trial,t,arm,instant_psg,cum_pareto_regret,front_size,jaccard;
// reals with 9 significant digits, empty jaccard when absent.
void write_csv(std::ostream& out, const std::vector<RoundRecord>& records);
std::string summary_to_json(const RunSummary& summary, const ExperimentConfig& config);

struct TuneRow {
  double c = 0.0;
  double regret_mean = 0.0;
  double regret_std = 0.0;
};

struct TuneResult {
  std::vector<TuneRow> rows;  // ascending c
  double best_c = 0.0;        // smallest mean final regret; ties go to smaller c
};

/// Runs MOGLB-UCB in tuned mode once per distinct grid value with the rest of
/// `config` unchanged. Grid values must lie in [1e-3, 1] (ConfigError).
TuneResult tune_gamma(const ExperimentConfig& config, std::vector<double> grid,
                      const ProblemInstance* pinned = nullptr);
std::string tune_to_json(const TuneResult& result);

}  // namespace moglb

#endif  // MOGLB_HARNESS_HPP_
