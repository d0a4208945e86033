// Copyright 2026 The clockham Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace clockham {

// splitmix64 step; used to mix seeds so that nearby master seeds do not
// produce correlated mt19937_64 streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent per-item stream derived from (master seed, item index).
/// Results do not depend on how many streams were drawn before this one,
/// which keeps parallel and serial shot loops bit-identical.
inline std::mt19937_64 derive_stream(std::uint64_t master_seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(master_seed) ^ (index + 1)));
}

/// Uniform double in [0, 1). Hand-rolled (53 mantissa bits of one draw) so
/// the mapping is identical on every platform, unlike
/// std::uniform_real_distribution.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [1, upper]; upper must be small against 2^53.
inline int uniform_index(std::mt19937_64& rng, int upper) {
  return 1 + static_cast<int>(uniform_unit(rng) * upper);
}

}  // namespace clockham
