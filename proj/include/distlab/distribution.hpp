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
#include <map>
#include <vector>

#include "distlab/bitstring.hpp"
#include "distlab/common.hpp"

namespace distlab {

/// Exact probability vector over fixed-length bit strings. Entries are
/// rationals in lowest terms; zero-probability outcomes are not stored.
/// Construction checks that the entries sum to exactly 1.
class Distribution {
 public:
  using Map = std::map<std::uint32_t, Rational>;

  /// Point mass on the empty string.
  Distribution() { probs_[0] = Rational(1); }
  Distribution(int support_len, Map probs);

  static Distribution point_mass(const BitString& x);
  static Distribution uniform(int support_len);
  /// (1 - weight) * base + weight * other, exact.
  static Distribution mixture(const Distribution& base,
                              const Distribution& other,
                              const Rational& weight);

  int support_len() const { return support_len_; }
  const Map& probs() const { return probs_; }

  /// Probability of x (0 if outside the stored support).
  Rational prob(const BitString& x) const;
  Rational prob_value(std::uint32_t v) const;

  bool operator==(const Distribution& other) const = default;

 private:
  int support_len_ = 0;
  Map probs_;
};

/// (1/2) * sum_x |P(x) - Q(x)|, exact.
Rational statistical_distance(const Distribution& p, const Distribution& q);

/// sum over {x : P(x) > Q(x)} of P(x) - Q(x). Equal to statistical_distance
/// by a telescoping identity; both are kept so tests can compare the routes.
Rational sd_one_sided(const Distribution& p, const Distribution& q);

/// sum_x P(x) * log2(P(x)/Q(x)), in bits; terms with P(x) = 0 contribute 0.
/// Throws SupportError if Q(x) = 0 somewhere P(x) > 0.
double kl_divergence(const Distribution& p, const Distribution& q);

/// Product distribution over t-tuples, materialized. Requires
/// support_len * t <= limits::kMaxTupleBits.
Distribution tensor_power(const Distribution& p, int t);

/// SD(P^{(x)t}, Q^{(x)t}) computed exactly without materializing the product
/// distributions, by grouping t-tuples into multisets.
Rational tensor_statistical_distance(const Distribution& p,
                                     const Distribution& q, int t);

}  // namespace distlab
