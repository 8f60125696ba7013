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

#include "distlab/mle.hpp"

namespace distlab {

Rational likelihood_counts(
    const Family& fam, const BitString& z,
    const std::vector<std::pair<BitString, std::size_t>>& counts) {
  fam.check_param(z);
  const Distribution d = fam.dist(z);
  Rational acc(1);
  for (const auto& [x, c] : counts) {
    fam.check_outcome(x);
    const Rational p = d.prob(x);
    if (p == 0) return Rational(0);
    acc *= rat_pow(p, static_cast<unsigned>(c));
  }
  return acc;
}

Rational likelihood(const Family& fam, const BitString& z,
                    const SampleSet& samples) {
  return likelihood_counts(fam, z, frequency_table(samples));
}

MleResult eval_mle_counts(
    const Family& fam,
    const std::vector<std::pair<BitString, std::size_t>>& counts) {
  const int k = fam.param_bits();
  MleResult best;
  bool first = true;
  for (std::uint32_t zv = 0; zv < (1u << k); ++zv) {
    const BitString z(zv, k);
    const Rational like = likelihood_counts(fam, z, counts);
    if (first || like > best.max_likelihood) {
      best.argmax_z = z;
      best.max_likelihood = like;
      best.tie_count = 1;
      first = false;
    } else if (like == best.max_likelihood) {
      ++best.tie_count;
    }
  }
  return best;
}

MleResult eval_mle(const Family& fam, const SampleSet& samples) {
  return eval_mle_counts(fam, frequency_table(samples));
}

MlRatio ml_ratio(const Family& fam, const BitString& x, const BitString& h) {
  fam.check_outcome(x);
  fam.check_param(h);
  const int k = fam.param_bits();
  Rational max(0);
  for (std::uint32_t av = 0; av < (1u << k); ++av) {
    const Rational p = fam.prob(BitString(av, k), x);
    if (p > max) max = p;
  }
  if (max == 0)
    throw SupportError("ml_ratio: x has probability 0 under every parameter");
  const Rational ph = fam.prob(h, x);
  if (ph == 0) return {true, Rational(0)};
  return {false, max / ph};
}

}  // namespace distlab
