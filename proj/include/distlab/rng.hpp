//------------------------------------------------------------------------------
//
//   Copyright 2026 the distlab authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace distlab::rng {

// distlab-rng v1: SplitMix64 run in counter mode.
//
//   value(seed, i) = mix64(seed + (i + 1) * GOLDEN)
//   split(seed, tag) = mix64(seed ^ mix64(tag ^ SPLIT_TWEAK))
//
// mix64 is the finalizer from Steele, Lea & Flood's SplitMix64. Every random
// quantity in this library is a pure function of (seed, counter), so streams
// can be consumed out of order and experiments parallelize by splitting the
// seed space. Fixtures depend on these exact constants; treat any change as a
// new generator version.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kSplitTweak = 0xA5A5A5A5A5A5A5A5ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// A stateless stream: the i-th value is a pure function of (seed, i).
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t value(std::uint64_t counter) const {
    return mix64(seed_ + (counter + 1) * kGolden);
  }

  /// Derives an independent child stream. Distinct tags give distinct
  /// streams; splitting is associative-free (split(split(s,a),b) is simply
  /// another stream).
  Stream split(std::uint64_t tag) const {
    return Stream(mix64(seed_ ^ mix64(tag ^ kSplitTweak)));
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double uniform01(std::uint64_t counter) const {
    return static_cast<double>(value(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n) by rejection; consumes counters from *counter
  /// onward and advances it. n must be positive.
  std::uint64_t below(std::uint64_t n, std::uint64_t& counter) const {
    const std::uint64_t limit = (~0ULL) - ((~0ULL) % n + 1) % n;
    for (;;) {
      const std::uint64_t v = value(counter++);
      if (v <= limit) return v % n;
    }
  }

 private:
  std::uint64_t seed_;
};

}  // namespace distlab::rng
