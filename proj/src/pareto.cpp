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

#include "moglb/pareto.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace moglb {

namespace {

void check_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("reward vectors have different lengths");
  }
}

std::span<const double> row(const RewardMatrix& m, Eigen::Index k) {
  return {m.data() + k * m.cols(), static_cast<std::size_t>(m.cols())};
}

ParetoFront normalized(ParetoFront s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

bool dominates(std::span<const double> u, std::span<const double> v) {
  check_lengths(u, v);
  bool strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] > u[i]) return false;
    if (u[i] > v[i]) strict = true;
  }
  return strict;
}

bool not_dominated(std::span<const double> v, std::span<const double> u) {
  check_lengths(v, u);
  return !dominates(u, v);
}

ParetoFront pareto_front(const RewardMatrix& rewards) {
  if (rewards.rows() == 0 || rewards.cols() == 0) {
    throw std::invalid_argument("pareto_front: empty reward matrix");
  }
  if (!rewards.allFinite()) {
    throw std::invalid_argument("pareto_front: non-finite reward entry");
  }
  const Eigen::Index k_arms = rewards.rows();
  ParetoFront front;
  for (Eigen::Index k = 0; k < k_arms; ++k) {
    bool dominated = false;
    for (Eigen::Index other = 0; other < k_arms && !dominated; ++other) {
      dominated = other != k && dominates(row(rewards, other), row(rewards, k));
    }
    if (!dominated) front.push_back(static_cast<std::size_t>(k));
  }
  return front;
}

double psg(const RewardMatrix& rewards, std::size_t arm) {
  if (arm >= static_cast<std::size_t>(rewards.rows())) {
    throw std::invalid_argument("psg: arm index out of range");
  }
  const auto k = static_cast<Eigen::Index>(arm);
  double gap = 0.0;
  for (Eigen::Index other = 0; other < rewards.rows(); ++other) {
    if (other == k) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < rewards.cols(); ++i) {
      worst = std::min(worst, rewards(other, i) - rewards(k, i));
    }
    gap = std::max(gap, worst);
  }
  return gap;
}

std::vector<double> psg_table(const RewardMatrix& rewards) {
  std::vector<double> table(static_cast<std::size_t>(rewards.rows()));
  for (std::size_t k = 0; k < table.size(); ++k) table[k] = psg(rewards, k);
  return table;
}

double jaccard(const ParetoFront& a, const ParetoFront& b) {
  const ParetoFront sa = normalized(a);
  const ParetoFront sb = normalized(b);
  if (sa.empty() && sb.empty()) {
    throw std::invalid_argument("jaccard: both sets are empty");
  }
  ParetoFront common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(common));
  const std::size_t unite = sa.size() + sb.size() - common.size();
  return static_cast<double>(common.size()) / static_cast<double>(unite);
}

}  // namespace moglb
