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

#include "distlab/sampling.hpp"

#include <algorithm>
#include <map>

namespace distlab {

Sampler::Sampler(const Distribution& d) : support_len_(d.support_len()) {
  Rational cum(0);
  const Int two64 = Int(1) << 64;
  for (const auto& [v, p] : d.probs()) {
    cum += p;
    Int scaled = (numerator(cum) * two64) / denominator(cum);
    if (scaled >= two64) scaled = two64 - 1;
    thresholds.push_back(scaled.convert_to<std::uint64_t>());
    values.push_back(v);
  }
  if (!thresholds.empty()) thresholds.back() = ~0ULL;  // catch-all
}

BitString Sampler::map(std::uint64_t variate) const {
  // Outcome i covers variates in [threshold_{i-1}, threshold_i).
  const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), variate);
  const std::size_t idx =
      (it == thresholds.end()) ? thresholds.size() - 1
                               : static_cast<std::size_t>(it - thresholds.begin());
  return BitString(values[idx], support_len_);
}

BitString Sampler::draw(const rng::Stream& s, std::uint64_t& counter) const {
  return map(s.value(counter++));
}

BitString Family::draw_one(const BitString& z, const rng::Stream& s,
                           std::uint64_t& counter) const {
  return Sampler(dist(z)).draw(s, counter);
}

const Distribution& FamilyTable::dist(const BitString& z) const {
  fam_->check_param(z);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(z.value());
  if (it == cache_.end()) {
    it = cache_
             .emplace(z.value(),
                      std::make_shared<const Distribution>(fam_->dist(z)))
             .first;
  }
  return *it->second;
}

SampleSet draw_samples(const Family& fam, const BitString& z, std::size_t t,
                       std::uint64_t seed) {
  fam.check_param(z);
  if (t < 1) throw DomainError("draw_samples: t must be >= 1");
  SampleSet out;
  out.seed = seed;
  out.samples.reserve(t);
  const rng::Stream s(seed);
  std::uint64_t ctr = 0;
  if (fam.dist_enumerable()) {
    const Sampler sampler(fam.dist(z));
    for (std::size_t i = 0; i < t; ++i) out.samples.push_back(sampler.draw(s, ctr));
  } else {
    for (std::size_t i = 0; i < t; ++i)
      out.samples.push_back(fam.draw_one(z, s, ctr));
  }
  return out;
}

SampleSet draw_samples(const Distribution& d, std::size_t t, std::uint64_t seed) {
  if (t < 1) throw DomainError("draw_samples: t must be >= 1");
  SampleSet out;
  out.seed = seed;
  out.samples.reserve(t);
  const Sampler sampler(d);
  const rng::Stream s(seed);
  std::uint64_t ctr = 0;
  for (std::size_t i = 0; i < t; ++i) out.samples.push_back(sampler.draw(s, ctr));
  return out;
}

std::vector<std::pair<BitString, std::size_t>> frequency_table(
    const SampleSet& samples) {
  std::map<BitString, std::size_t> freq;
  for (const BitString& x : samples.samples) {
    if (!samples.samples.empty() && x.size() != samples.samples.front().size())
      throw DomainError("frequency_table: mixed sample lengths");
    ++freq[x];
  }
  return {freq.begin(), freq.end()};
}

}  // namespace distlab
