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

#include <utility>
#include <vector>

#include "distlab/family.hpp"
#include "distlab/sampling.hpp"

namespace distlab {

struct MleResult {
  BitString argmax_z;        // lexicographically smallest maximizer
  Rational max_likelihood;
  std::size_t tie_count = 0;
};

/// Exact sample-set likelihood: prod_i Pr[x_i <- D(z)]. Rationals are
/// mandatory here; long sample sets underflow any fixed-precision type.
Rational likelihood(const Family& fam, const BitString& z,
                    const SampleSet& samples);

/// Likelihood from an outcome->count table (order of samples is irrelevant).
Rational likelihood_counts(
    const Family& fam, const BitString& z,
    const std::vector<std::pair<BitString, std::size_t>>& counts);

/// Exhaustive scan of all 2^param_bits parameters; ties broken toward the
/// lexicographically smallest z and surfaced via tie_count.
MleResult eval_mle(const Family& fam, const SampleSet& samples);
MleResult eval_mle_counts(
    const Family& fam,
    const std::vector<std::pair<BitString, std::size_t>>& counts);

/// max_a Pr[x <- D(a)] / Pr[x <- D(h)]; infinite iff the denominator is 0.
/// Requires max_a Pr[x <- D(a)] > 0.
struct MlRatio {
  bool infinite = false;
  Rational value;  // meaningful only when !infinite
};
MlRatio ml_ratio(const Family& fam, const BitString& x, const BitString& h);

}  // namespace distlab
