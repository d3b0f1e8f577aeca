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

#ifndef MOGLB_PARETO_HPP_
#define MOGLB_PARETO_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace moglb {

// Row k holds the (expected or optimistic) reward vector of arm k.
using RewardMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Sorted, duplicate-free arm indices.
using ParetoFront = std::vector<std::size_t>;

// u dominates v: u >= v componentwise with at least one strict coordinate.
bool dominates(std::span<const double> u, std::span<const double> v);

// v = u, or v beats u in some coordinate. Complement of dominates(u, v).
bool not_dominated(std::span<const double> v, std::span<const double> u);

// Arms whose rows are dominated by no other row. Equal rows do not dominate
// each other, so duplicated optimal rows all enter the front.
ParetoFront pareto_front(const RewardMatrix& rewards);

// Pareto suboptimality gap of one arm: the smallest uniform boost that makes
// its row non-dominated, max(0, max_k' min_i (r_k'^i - r_k^i)).
double psg(const RewardMatrix& rewards, std::size_t arm);

// Gap of every arm.
std::vector<double> psg_table(const RewardMatrix& rewards);

// |a ∩ b| / |a ∪ b|. Inputs need not be sorted.
double jaccard(const ParetoFront& a, const ParetoFront& b);

}  // namespace moglb

#endif  // MOGLB_PARETO_HPP_
