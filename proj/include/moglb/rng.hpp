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

#ifndef MOGLB_RNG_HPP_
#define MOGLB_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace moglb {

using Rng = std::mt19937_64;

// Folds a base seed and a list of keys into one 64-bit seed with the
// splitmix64 finalizer. Order of keys matters; scheduling order never enters.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> keys) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(seed);
  for (std::uint64_t k : keys) h = mix(h ^ mix(k));
  return h;
}

inline Rng make_stream(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> keys = {}) {
  return Rng(derive_seed(seed, keys));
}

}  // namespace moglb

#endif  // MOGLB_RNG_HPP_
