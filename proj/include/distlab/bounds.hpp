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

#include <functional>
#include <string>
#include <vector>

#include "distlab/distribution.hpp"
#include "distlab/family.hpp"

namespace distlab {

struct BoundReport {
  std::string claim;
  std::string parameters;
  double predicted = 0;   // the closed-form bound
  std::string observed;   // exact observation, as a rational string
  bool holds = false;
};

/// Sample count ceil((M^2/eps^2) * (log2F + log2(1/delta))); all logs base 2.
/// `tight` divides by 2 (the standard two-sided Hoeffding constant) and is
/// off by default so downstream sample counts match the looser closed form.
long hoeffding_T(double M, double eps_acc, double delta, double log2F,
                 bool tight = false);

/// For each t = 1..t_max, checks exactly (no tolerance) that
///   SD(P^t, Q^t) > 1 - 2^{1 - t/(8 eps^2)}
/// holds; the bound may be vacuous (negative) for small t. Requires
/// SD(P, Q) > 1/(2 eps) and support_len * t_max within the tuple cap.
std::vector<BoundReport> verify_tensor_amplification(const Distribution& p,
                                                     const Distribution& q,
                                                     long eps, int t_max);

/// Pr_{x<-P}[P(x) > Q(x)] > alpha, exactly. The dominance event that powers
/// the tensor argument above.
bool likelihood_dominance_holds(const Distribution& p, const Distribution& q,
                                const Rational& alpha);
Rational likelihood_dominance_mass(const Distribution& p, const Distribution& q);

struct TestFn {
  std::string name;
  std::function<double(const BitString&)> f;  // values in [0, 1]
};

/// Draws T = hoeffding_T(1, eps_acc, delta, log2|F|) samples per trial and
/// checks that every f stays within eps_acc of its exact mean; the fraction
/// of good trials must reach 1 - delta at Wilson 99% confidence.
BoundReport verify_hoeffding_empirical(const Family& fam, const BitString& z,
                                       const std::vector<TestFn>& functions,
                                       double eps_acc, double delta,
                                       long trials, std::uint64_t seed);

/// Lower end of the Wilson score interval at confidence quantile zq
/// (2.576 = 99%).
double wilson_lower(double phat, long n, double zq);

}  // namespace distlab
