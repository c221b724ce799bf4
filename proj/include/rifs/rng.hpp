// Copyright 2026 The rifslab authors
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

#ifndef RIFS_RNG_HPP_
#define RIFS_RNG_HPP_

#include <cstdint>

// Counter-based randomness: every draw is a pure function of (seed, counter),
// so sequences can be extended or evaluated out of order on any number of
// threads and still come out bitwise identical.

namespace rifs::rng {

// SplitMix64 finalizer; bijective on 64-bit integers.
constexpr std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream tags: one user seed feeds several independent draw streams.
inline constexpr std::uint64_t kRealizationStream = 0x7265616c697aULL;
inline constexpr std::uint64_t kWordStream = 0x776f7264ULL;
inline constexpr std::uint64_t kMonteCarloStream = 0x6d63ULL;

constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) noexcept {
  return mix(seed ^ mix(tag));
}

constexpr std::uint64_t at(std::uint64_t stream, std::uint64_t counter) noexcept {
  return mix(stream ^ mix(counter));
}

// Top 53 bits, uniform in [0, 1).
constexpr double uniform01(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double uniform01_at(std::uint64_t stream, std::uint64_t counter) noexcept {
  return uniform01(at(stream, counter));
}

}  // namespace rifs::rng

#endif  // RIFS_RNG_HPP_
