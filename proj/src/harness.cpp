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

#include "moglb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "json.hpp"

#include "moglb/baselines.hpp"
#include "moglb/glm.hpp"
#include "moglb/moglb_ucb.hpp"

namespace moglb {

namespace {

constexpr std::uint64_t kInstanceStreamKey = 0x696e7374616e6365ULL;  // "instance"
constexpr std::uint64_t kEnvironmentSubstream = 0;
constexpr std::uint64_t kPolicySubstream = 1;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// Fixed left-to-right summation; sample standard deviation.
MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd out;
  if (xs.empty()) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return out;
}

}  // namespace

const AlgorithmSummary* RunSummary::find(std::string_view algo) const {
  for (const auto& a : algorithms) {
    if (a.algo == algo) return &a;
  }
  return nullptr;
}

std::vector<RoundRecord> run_trial(const ProblemInstance& instance, Policy& policy,
                                   std::size_t horizon, std::uint64_t seed,
                                   std::uint64_t algo_key, std::size_t trial) {
  if (horizon < 1) throw std::invalid_argument("run_trial: horizon must be >= 1");
  Rng env_rng = make_stream(seed, {algo_key, trial, kEnvironmentSubstream});
  Rng policy_rng = make_stream(seed, {algo_key, trial, kPolicySubstream});

  const std::size_t m = instance.num_objectives();
  std::vector<double> reward(m);
  std::vector<RoundRecord> records;
  records.reserve(horizon);
  double cumulative = 0.0;

  for (std::size_t t = 1; t <= horizon; ++t) {
    const std::size_t arm = policy.select_arm(t, policy_rng);
    if (arm >= instance.num_arms()) {
      throw std::out_of_range("run_trial: policy returned arm " + std::to_string(arm));
    }
    const std::optional<ParetoFront> front = policy.current_front();

    const Eigen::VectorXd& x = instance.arms[arm];
    for (std::size_t i = 0; i < m; ++i) {
      reward[i] = sample_reward(instance.objectives[i], x, env_rng);
    }
    policy.update(arm, reward);

    RoundRecord rec;
    rec.algo = std::string(policy.name());
    rec.trial = trial;
    rec.t = t;
    rec.arm = arm;
    rec.instant_psg = instance.psg_table[arm];
    cumulative += rec.instant_psg;
    rec.cum_pareto_regret = cumulative;
    if (front) {
      rec.front_size = front->size();
      rec.jaccard = jaccard(*front, instance.true_front);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::unique_ptr<Policy> make_policy(Algorithm algo, const ProblemInstance& instance,
                                    const ExperimentConfig& config) {
  const std::size_t k = instance.num_arms();
  const std::size_t m = instance.num_objectives();
  switch (algo) {
    case Algorithm::kMoglb: {
      MoglbOptions opts;
      opts.gamma = config.gamma;
      opts.delta = config.delta;
      opts.lambda = config.lambda;
      double radius = 0.0;
      for (const auto& obj : instance.objectives) radius = std::max(radius, obj.radius);
      opts.radius = radius;
      return std::make_unique<MoglbUcb>(instance.arms, instance.links(), opts);
    }
    case Algorithm::kPucb:
      return std::make_unique<ParetoUcb>(k, m);
    case Algorithm::kSucb:
      return std::make_unique<ScalarizedUcb>(k, m);
    case Algorithm::kPts:
      return std::make_unique<ParetoThompson>(k, m);
  }
  throw std::invalid_argument("make_policy: unknown algorithm");
}

std::uint64_t instance_seed(std::uint64_t base_seed, std::size_t trial) {
  return derive_seed(base_seed, {kInstanceStreamKey, trial});
}

std::vector<std::size_t> checkpoints(std::size_t horizon) {
  std::vector<std::size_t> cps = {std::max<std::size_t>(1, horizon / 10),
                                  std::max<std::size_t>(1, horizon / 2), horizon};
  cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
  return cps;
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const ProblemInstance* pinned) {
  validate(config);

  std::vector<ProblemInstance> instances;
  if (!pinned) {
    GenerateOptions gen;
    gen.max_attempts = config.max_attempts;
    instances.reserve(config.trials);
    for (std::size_t j = 0; j < config.trials; ++j) {
      instances.push_back(generate_instance(config.d, config.m,
                                            instance_seed(config.base_seed, j), gen));
    }
  }
  auto instance_for = [&](std::size_t trial) -> const ProblemInstance& {
    return pinned ? *pinned : instances[trial];
  };

  // Canonical job order: algorithm id, then trial.
  std::vector<Algorithm> roster = config.algorithms;
  std::sort(roster.begin(), roster.end());
  roster.erase(std::unique(roster.begin(), roster.end()), roster.end());

  struct Job {
    Algorithm algo;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (Algorithm a : roster) {
    for (std::size_t j = 0; j < config.trials; ++j) jobs.push_back({a, j});
  }
  std::vector<std::vector<RoundRecord>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const ProblemInstance& inst = instance_for(jobs[i].trial);
        auto policy = make_policy(jobs[i].algo, inst, config);
        results[i] = run_trial(inst, *policy, config.horizon, config.base_seed,
                               static_cast<std::uint64_t>(jobs[i].algo), jobs[i].trial);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(config.jobs, jobs.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i]) continue;
    std::string what = "unknown error";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    throw ExperimentFailure("trial failed (algo " +
                                std::string(algorithm_name(jobs[i].algo)) + ", trial " +
                                std::to_string(jobs[i].trial) + ", seed " +
                                std::to_string(config.base_seed) + "): " + what,
                            jobs[i].algo, jobs[i].trial, config.base_seed);
  }

  ExperimentResult out;
  out.records.reserve(jobs.size() * config.horizon);
  for (auto& r : results) {
    std::move(r.begin(), r.end(), std::back_inserter(out.records));
  }
  out.summary = summarize(out.records, config.horizon, config.trials);
  return out;
}

RunSummary summarize(const std::vector<RoundRecord>& records, std::size_t horizon,
                     std::size_t trials) {
  RunSummary summary;
  summary.horizon = horizon;
  summary.trials = trials;
  const std::vector<std::size_t> cps = checkpoints(horizon);

  std::vector<std::string> order;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.algo) == order.end()) {
      order.push_back(r.algo);
    }
  }
  for (const auto& algo : order) {
    AlgorithmSummary as;
    as.algo = algo;
    for (std::size_t cp : cps) {
      std::vector<double> regrets;
      std::vector<double> jaccards;
      bool all_jaccard = true;
      for (const auto& r : records) {
        if (r.algo != algo || r.t != cp) continue;
        regrets.push_back(r.cum_pareto_regret);
        if (r.jaccard) {
          jaccards.push_back(*r.jaccard);
        } else {
          all_jaccard = false;
        }
      }
      CheckpointStats cs;
      cs.t = cp;
      const MeanStd reg = mean_std(regrets);
      cs.regret_mean = reg.mean;
      cs.regret_std = reg.std;
      if (all_jaccard && !jaccards.empty()) {
        const MeanStd ji = mean_std(jaccards);
        cs.jaccard_mean = ji.mean;
        cs.jaccard_std = ji.std;
      }
      as.checkpoints.push_back(cs);
    }
    summary.algorithms.push_back(std::move(as));
  }
  return summary;
}

void write_csv(std::ostream& out, const std::vector<RoundRecord>& records) {
  out << "algo,trial,t,arm,instant_psg,cum_pareto_regret,front_size,jaccard\n";
  for (const auto& r : records) {
    out << r.algo << ',' << r.trial << ',' << r.t << ',' << r.arm << ','
        << format_real(r.instant_psg) << ',' << format_real(r.cum_pareto_regret) << ','
        << r.front_size << ',';
    if (r.jaccard) out << format_real(*r.jaccard);
    out << '\n';
  }
}

std::string summary_to_json(const RunSummary& summary, const ExperimentConfig& config) {
  using nlohmann::json;
  json doc;
  doc["format"] = "moglb-summary";
  doc["format_version"] = 1;
  doc["config"] = config_to_text(config);
  doc["horizon"] = summary.horizon;
  doc["trials"] = summary.trials;
  json algos = json::array();
  for (const auto& a : summary.algorithms) {
    json cps = json::array();
    for (const auto& c : a.checkpoints) {
      json j;
      j["t"] = c.t;
      j["regret_mean"] = c.regret_mean;
      j["regret_std"] = c.regret_std;
      j["jaccard_mean"] = c.jaccard_mean ? json(*c.jaccard_mean) : json(nullptr);
      j["jaccard_std"] = c.jaccard_std ? json(*c.jaccard_std) : json(nullptr);
      cps.push_back(std::move(j));
    }
    algos.push_back({{"algo", a.algo}, {"checkpoints", std::move(cps)}});
  }
  doc["algorithms"] = std::move(algos);
  return doc.dump(2) + "\n";
}

TuneResult tune_gamma(const ExperimentConfig& config, std::vector<double> grid,
                      const ProblemInstance* pinned) {
  if (grid.empty()) throw ConfigError("tune_gamma: empty grid");
  for (double c : grid) {
    if (!(c >= 1e-3 && c <= 1.0)) {
      throw ConfigError("tune_gamma: grid value " + format_real(c) +
                        " outside [1e-3, 1]");
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  TuneResult result;
  double best = std::numeric_limits<double>::infinity();
  for (double c : grid) {
    ExperimentConfig cfg = config;
    cfg.algorithms = {Algorithm::kMoglb};
    cfg.gamma = GammaMode::tuned(c);
    const ExperimentResult run = run_experiment(cfg, pinned);
    const CheckpointStats& last = run.summary.algorithms.front().checkpoints.back();
    result.rows.push_back({c, last.regret_mean, last.regret_std});
    if (last.regret_mean < best) {
      best = last.regret_mean;
      result.best_c = c;
    }
  }
  return result;
}

std::string tune_to_json(const TuneResult& result) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"c", r.c},
                    {"regret_mean", r.regret_mean},
                    {"regret_std", r.regret_std},
                    {"best", r.c == result.best_c}});
  }
  json doc;
  doc["format"] = "moglb-tune";
  doc["format_version"] = 1;
  doc["best_c"] = result.best_c;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace moglb
