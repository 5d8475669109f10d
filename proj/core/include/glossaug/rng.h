// Copyright 2026 The glossaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLOSSAUG_RNG_H_
#define GLOSSAUG_RNG_H_

#include <cstdint>
#include <random>

namespace glossaug {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Key for item `index` of the stream rooted at `seed`. Distinct (seed, index)
// pairs give statistically independent keys.
constexpr std::uint64_t StreamKey(std::uint64_t seed, std::uint64_t index) {
  return Mix64(Mix64(seed) ^ Mix64(index ^ 0xD1B54A32D192ED03ULL));
}

// Independent engine for item `index` (an utterance, a bootstrap replicate).
// Results depend only on (seed, index), never on evaluation order.
inline Rng SubstreamRng(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t key = StreamKey(seed, index);
  std::seed_seq seq{static_cast<std::uint32_t>(key),
                    static_cast<std::uint32_t>(key >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(seed)};
  return Rng(seq);
}

}  // namespace glossaug

#endif  // GLOSSAUG_RNG_H_
