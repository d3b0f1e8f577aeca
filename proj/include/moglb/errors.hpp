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

#ifndef MOGLB_ERRORS_HPP_
#define MOGLB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

// Argument and precondition violations are reported with std::invalid_argument.
// The types below cover the failures that are not the caller's fault.
namespace moglb {

// An iterative routine did not reach its tolerance.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Rejection sampling of a problem instance ran out of attempts.
class GenerationFailure : public std::runtime_error {
 public:
  GenerationFailure(const std::string& what, std::size_t smallest_front)
      : std::runtime_error(what), smallest_front_(smallest_front) {}

  std::size_t smallest_front() const noexcept { return smallest_front_; }

 private:
  std::size_t smallest_front_;
};

}  // namespace moglb

#endif  // MOGLB_ERRORS_HPP_
