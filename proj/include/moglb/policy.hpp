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

#ifndef MOGLB_POLICY_HPP_
#define MOGLB_POLICY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "moglb/pareto.hpp"
#include "moglb/rng.hpp"

namespace moglb {

// Sequential decision maker over a fixed arm set. Calls strictly alternate:
// select_arm(t) then update(arm, reward) for t = 1, 2, ...
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;

  // Round numbers start at 1.
  virtual std::size_t select_arm(std::size_t round, Rng& rng) = 0;

  virtual void update(std::size_t arm, std::span<const double> reward) = 0;

  // The front the most recent selection was drawn from, or nullopt for
  // policies that do not maintain one.
  virtual std::optional<ParetoFront> current_front() const = 0;
};

}  // namespace moglb

#endif  // MOGLB_POLICY_HPP_
