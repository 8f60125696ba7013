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

#include "distlab/estimator.hpp"

namespace distlab {

Estimator::Estimator(Mode mode, FamilyPtr fam, long eps_mult, long fail,
                     std::uint64_t seed)
    : mode_(mode),
      table_(std::make_shared<FamilyTable>(std::move(fam))),
      eps_mult_(eps_mult),
      fail_(fail),
      seed_(seed) {
  if (mode_ == Mode::Noisy) {
    if (eps_mult_ < 2 || fail_ < 2)
      throw DomainError("noisy estimator: eps_mult and fail must be >= 2");
    if (eps_mult_ > (1L << 40))
      throw DomainError("noisy estimator: eps_mult too large");
    fail_threshold_ = (~0ULL) / static_cast<std::uint64_t>(fail_);
  }
}

Estimator Estimator::exact(FamilyPtr fam) {
  return Estimator(Mode::Exact, std::move(fam), 0, 0, 0);
}

Estimator Estimator::noisy(FamilyPtr fam, long eps_mult, long fail,
                           std::uint64_t seed) {
  return Estimator(Mode::Noisy, std::move(fam), eps_mult, fail, seed);
}

Estimator::NoiseFactor Estimator::noise_factor(std::uint64_t counter) const {
  if (mode_ == Mode::Exact) return {1, 1, false};
  const rng::Stream s(seed_);
  if (s.value(2 * counter) < fail_threshold_) return {0, 1, true};
  const std::uint64_t j = s.value(2 * counter + 1) & 0xFFFFULL;
  const std::uint64_t em = static_cast<std::uint64_t>(eps_mult_);
  // 1 + u with u = (2j+1-2^16)/(2^16 em), so |u| < 1/eps_mult exactly.
  return {(em << 16) + 2 * j + 1 - (1ULL << 16), em << 16, false};
}

EstimateResult Estimator::apply(const Rational& p, std::uint64_t counter) const {
  const NoiseFactor f = noise_factor(counter);
  if (f.failed) return {Rational(0), true};
  if (f.num == f.den) return {p, false};
  return {p * Rational(Int(f.num), Int(f.den)), false};
}

EstimateResult Estimator::estimate(const BitString& z, const BitString& x,
                                   std::uint64_t counter) const {
  family().check_param(z);
  family().check_outcome(x);
  return apply(table_->dist(z).prob(x), counter);
}

}  // namespace distlab
