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

#ifndef MOGLB_ARM_SET_HPP_
#define MOGLB_ARM_SET_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace moglb {

// Finite decision set: K context vectors of a common dimension, each with
// Euclidean norm at most 1.
class ArmSet {
 public:
  ArmSet() = default;

  explicit ArmSet(std::vector<Eigen::VectorXd> arms) : arms_(std::move(arms)) {
    if (arms_.empty()) throw std::invalid_argument("ArmSet: no arms");
    const auto d = arms_.front().size();
    if (d == 0) throw std::invalid_argument("ArmSet: zero-dimensional arm");
    for (const auto& x : arms_) {
      if (x.size() != d) throw std::invalid_argument("ArmSet: ragged arms");
      if (!x.allFinite() || x.norm() > 1.0 + 1e-9) {
        throw std::invalid_argument("ArmSet: arm norm exceeds 1");
      }
    }
  }

  std::size_t size() const { return arms_.size(); }
  int dim() const { return arms_.empty() ? 0 : static_cast<int>(arms_[0].size()); }
  const Eigen::VectorXd& operator[](std::size_t k) const { return arms_[k]; }
  const std::vector<Eigen::VectorXd>& arms() const { return arms_; }

 private:
  std::vector<Eigen::VectorXd> arms_;
};

}  // namespace moglb

#endif  // MOGLB_ARM_SET_HPP_
