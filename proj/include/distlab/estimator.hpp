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

#include <memory>

#include "distlab/family.hpp"
#include "distlab/rng.hpp"

namespace distlab {

/// Result of one probability query. `failed` exists for test introspection
/// only; algorithms under test must decide from `value` alone.
struct EstimateResult {
  Rational value;
  bool failed = false;
};

/// Probability-query oracle over a family: either exact, or multiplicatively
/// noisy with a per-query failure probability.
///
/// Noisy semantics, fixed for reproducibility: a query at counter c draws
/// two stream values, at 2c (failure coin) and 2c+1 (noise). With
/// probability floor(2^64/fail)/2^64 <= 1/fail the query fails and returns
/// 0 (the adversarial worst case for threshold comparisons). Otherwise it
/// returns p*(1+u), where u = (2j+1-2^16)/(2^16*eps_mult) and j is 16 noise
/// bits, so |u| < 1/eps_mult holds exactly and every returned value is an
/// exact rational.
class Estimator {
 public:
  enum class Mode { Exact, Noisy };

  static Estimator exact(FamilyPtr fam);
  static Estimator noisy(FamilyPtr fam, long eps_mult, long fail,
                         std::uint64_t seed);

  Mode mode() const { return mode_; }
  long eps_mult() const { return eps_mult_; }
  long fail() const { return fail_; }
  std::uint64_t seed() const { return seed_; }
  const Family& family() const { return table_->family(); }
  const FamilyTable& table() const { return *table_; }

  /// Per-query determinism is keyed by (seed, counter); the counter is the
  /// caller's to manage, so estimators are freely shared across threads.
  EstimateResult estimate(const BitString& z, const BitString& x,
                          std::uint64_t counter) const;

  /// Noise application alone, for callers that already hold the exact
  /// probability. Exact mode returns p unchanged.
  EstimateResult apply(const Rational& p, std::uint64_t counter) const;

  /// The multiplicative factor a query at this counter applies to the true
  /// probability: value = p * num/den, failed queries have num = 0. Exact
  /// mode is the constant factor 1/1. estimate() and apply() are defined in
  /// terms of this, so scans may replicate queries without drift.
  struct NoiseFactor {
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    bool failed = false;
  };
  NoiseFactor noise_factor(std::uint64_t counter) const;

 private:
  Estimator(Mode mode, FamilyPtr fam, long eps_mult, long fail,
            std::uint64_t seed);

  Mode mode_;
  std::shared_ptr<FamilyTable> table_;
  long eps_mult_ = 0;
  long fail_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t fail_threshold_ = 0;
};

inline Estimator exact_estimator(FamilyPtr fam) {
  return Estimator::exact(std::move(fam));
}
inline Estimator noisy_estimator(FamilyPtr fam, long eps_mult, long fail,
                                 std::uint64_t seed) {
  return Estimator::noisy(std::move(fam), eps_mult, fail, seed);
}
inline EstimateResult estimate(const Estimator& est, const BitString& z,
                               const BitString& x, std::uint64_t counter) {
  return est.estimate(z, x, counter);
}

}  // namespace distlab
