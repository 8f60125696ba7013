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
#include <vector>

#include "distlab/distribution.hpp"
#include "distlab/family.hpp"
#include "distlab/rng.hpp"

namespace distlab {

/// Inverse-CDF sampler over a Distribution. Cumulative probabilities are
/// frozen as floor(cum * 2^64) thresholds; for dyadic probabilities (every
/// circuit family) this is exact, otherwise each outcome's mass is off by
/// less than 2^-64. One draw consumes exactly one stream value.
class Sampler {
 public:
  explicit Sampler(const Distribution& d);

  BitString draw(const rng::Stream& s, std::uint64_t& counter) const;
  /// Maps one u64 variate; the same variate maps consistently under samplers
  /// built from different distributions (shared-coin draws).
  BitString map(std::uint64_t variate) const;

 private:
  int support_len_;
  std::vector<std::uint64_t> thresholds;  // ascending; last is 2^64-1 sentinel
  std::vector<std::uint32_t> values;
};

/// Ordered list of drawn outcomes together with the seed that produced it.
struct SampleSet {
  std::vector<BitString> samples;
  std::uint64_t seed = 0;
  std::size_t t() const { return samples.size(); }
};

/// t i.i.d. draws from fam's distribution at z, deterministic per seed.
SampleSet draw_samples(const Family& fam, const BitString& z, std::size_t t,
                       std::uint64_t seed);

/// t i.i.d. draws from an explicit distribution.
SampleSet draw_samples(const Distribution& d, std::size_t t, std::uint64_t seed);

/// Outcome frequencies of a sample set (values must share a length).
std::vector<std::pair<BitString, std::size_t>> frequency_table(
    const SampleSet& samples);

}  // namespace distlab
