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

#include "moglb/baselines.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moglb {

namespace {

ParetoFront all_arms(std::size_t k) {
  ParetoFront f(k);
  std::iota(f.begin(), f.end(), std::size_t{0});
  return f;
}

std::size_t uniform_member(const ParetoFront& front, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, front.size() - 1);
  return front[pick(rng)];
}

void check_round(std::size_t t) {
  if (t < 1) throw std::invalid_argument("rounds are numbered from 1");
}

}  // namespace

MabStats::MabStats(std::size_t num_arms, std::size_t num_objectives)
    : counts(num_arms, 0),
      sums(RewardMatrix::Zero(num_arms, num_objectives)),
      alpha(RewardMatrix::Ones(num_arms, num_objectives)),
      beta(RewardMatrix::Ones(num_arms, num_objectives)) {
  if (num_arms == 0 || num_objectives == 0) {
    throw std::invalid_argument("MabStats: need at least one arm and objective");
  }
}

double MabStats::mean(std::size_t arm, std::size_t objective) const {
  if (counts[arm] == 0) return 0.0;
  return sums(arm, objective) / static_cast<double>(counts[arm]);
}

void MabStats::record(std::size_t arm, std::span<const double> reward,
                      bool require_binary) {
  if (arm >= num_arms()) throw std::invalid_argument("MabStats: bad arm");
  if (reward.size() != num_objectives()) {
    throw std::invalid_argument("MabStats: reward vector has wrong length");
  }
  for (double y : reward) {
    if (!std::isfinite(y)) throw std::invalid_argument("MabStats: non-finite reward");
    if (require_binary && y != 0.0 && y != 1.0) {
      throw std::invalid_argument("Thompson sampling needs rewards in {0, 1}");
    }
  }
  ++counts[arm];
  for (std::size_t i = 0; i < reward.size(); ++i) {
    sums(arm, i) += reward[i];
    if (reward[i] == 1.0) alpha(arm, i) += 1.0;
    if (reward[i] == 0.0) beta(arm, i) += 1.0;
  }
}

double pucb_bonus(std::size_t t, std::size_t pulls, std::size_t num_objectives,
                  std::size_t num_arms) {
  const double scale = std::pow(static_cast<double>(num_objectives * num_arms), 0.25);
  return std::sqrt(2.0 * std::log(static_cast<double>(t) * scale) /
                   static_cast<double>(pulls));
}

std::optional<std::size_t> first_unplayed(const MabStats& stats) {
  for (std::size_t k = 0; k < stats.num_arms(); ++k) {
    if (stats.counts[k] == 0) return k;
  }
  return std::nullopt;
}

std::size_t pucb_select(const MabStats& stats, std::size_t t, Rng& rng,
                        ParetoFront* front) {
  check_round(t);
  if (auto k = first_unplayed(stats)) {
    if (front) *front = all_arms(stats.num_arms());
    return *k;
  }
  const std::size_t k_arms = stats.num_arms();
  const std::size_t m = stats.num_objectives();
  RewardMatrix ucb(k_arms, m);
  for (std::size_t k = 0; k < k_arms; ++k) {
    const double bonus = pucb_bonus(t, stats.counts[k], m, k_arms);
    for (std::size_t i = 0; i < m; ++i) ucb(k, i) = stats.mean(k, i) + bonus;
  }
  ParetoFront f = pareto_front(ucb);
  const std::size_t arm = uniform_member(f, rng);
  if (front) *front = std::move(f);
  return arm;
}

std::size_t sucb_select(const MabStats& stats, std::span<const double> weights,
                        std::size_t t, Rng& rng) {
  check_round(t);
  if (weights.size() != stats.num_objectives()) {
    throw std::invalid_argument("sucb_select: one weight per objective required");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("sucb_select: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("sucb_select: weights must sum to 1");
  }
  if (auto k = first_unplayed(stats)) return *k;

  ParetoFront best;
  double best_index = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < stats.num_arms(); ++k) {
    double mean = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) mean += weights[i] * stats.mean(k, i);
    const double index = mean + pucb_bonus(t, stats.counts[k], 1, 1);
    if (index > best_index) {
      best_index = index;
      best.assign(1, k);
    } else if (index == best_index) {
      best.push_back(k);
    }
  }
  return uniform_member(best, rng);
}

double sample_beta(double alpha, double beta, Rng& rng) {
  std::gamma_distribution<double> ga(alpha, 1.0);
  std::gamma_distribution<double> gb(beta, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  return x / (x + y);
}

std::size_t pts_select(const MabStats& stats, Rng& rng, ParetoFront* front) {
  const std::size_t k_arms = stats.num_arms();
  const std::size_t m = stats.num_objectives();
  RewardMatrix sampled(k_arms, m);
  for (std::size_t k = 0; k < k_arms; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      sampled(k, i) = sample_beta(stats.alpha(k, i), stats.beta(k, i), rng);
    }
  }
  ParetoFront f = pareto_front(sampled);
  const std::size_t arm = uniform_member(f, rng);
  if (front) *front = std::move(f);
  return arm;
}

ParetoUcb::ParetoUcb(std::size_t num_arms, std::size_t num_objectives)
    : stats_(num_arms, num_objectives), front_(all_arms(num_arms)) {}

std::size_t ParetoUcb::select_arm(std::size_t round, Rng& rng) {
  return pucb_select(stats_, round, rng, &front_);
}

void ParetoUcb::update(std::size_t arm, std::span<const double> reward) {
  stats_.record(arm, reward);
}

ScalarizedUcb::ScalarizedUcb(std::size_t num_arms, std::size_t num_objectives,
                             std::vector<double> weights)
    : stats_(num_arms, num_objectives), weights_(std::move(weights)) {
  if (weights_.empty()) {
    weights_.assign(num_objectives, 1.0 / static_cast<double>(num_objectives));
  }
  if (weights_.size() != num_objectives) {
    throw std::invalid_argument("ScalarizedUcb: one weight per objective required");
  }
}

std::size_t ScalarizedUcb::select_arm(std::size_t round, Rng& rng) {
  return sucb_select(stats_, weights_, round, rng);
}

void ScalarizedUcb::update(std::size_t arm, std::span<const double> reward) {
  stats_.record(arm, reward);
}

ParetoThompson::ParetoThompson(std::size_t num_arms, std::size_t num_objectives)
    : stats_(num_arms, num_objectives), front_(all_arms(num_arms)) {}

std::size_t ParetoThompson::select_arm(std::size_t /*round*/, Rng& rng) {
  if (auto k = first_unplayed(stats_)) {
    front_ = all_arms(stats_.num_arms());
    return *k;
  }
  return pts_select(stats_, rng, &front_);
}

void ParetoThompson::update(std::size_t arm, std::span<const double> reward) {
  stats_.record(arm, reward, /*require_binary=*/true);
}

}  // namespace moglb
