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

#include "distlab/bounds.hpp"

#include <cmath>

#include "distlab/sampling.hpp"

namespace distlab {

long hoeffding_T(double M, double eps_acc, double delta, double log2F,
                 bool tight) {
  if (M <= 0 || eps_acc <= 0 || delta <= 0 || log2F < 0)
    throw DomainError("hoeffding_T: parameters must be positive");
  double v = (M * M) / (eps_acc * eps_acc) * (log2F + std::log2(1.0 / delta));
  if (tight) v /= 2.0;
  const double ceiled = std::ceil(v);
  return ceiled < 1.0 ? 1 : static_cast<long>(ceiled);
}

std::vector<BoundReport> verify_tensor_amplification(const Distribution& p,
                                                     const Distribution& q,
                                                     long eps, int t_max) {
  if (eps < 1) throw DomainError("verify_tensor_amplification: eps >= 1");
  if (t_max < 1) throw DomainError("verify_tensor_amplification: t_max >= 1");
  if (p.support_len() * t_max > limits::kMaxTupleBits)
    throw DomainError("verify_tensor_amplification: tuple cap exceeded");
  // Non-strict: the Hoeffding route still yields the stated bound at the
  // boundary SD(P,Q) = 1/(2 eps).
  const Rational base_sd = statistical_distance(p, q);
  if (base_sd * Rational(2 * eps) < 1)
    throw DomainError(
        "verify_tensor_amplification: needs SD(P,Q) >= 1/(2 eps)");

  std::vector<BoundReport> reports;
  const long denom = 8 * eps * eps;
  for (int t = 1; t <= t_max; ++t) {
    const Rational observed = tensor_statistical_distance(p, q, t);
    // observed > 1 - 2^{1 - t/denom}  <=>  1 - observed < 2^{(denom-t)/denom}
    const bool holds = less_than_pow2(Rational(1) - observed, denom - t, denom);
    BoundReport r;
    r.claim = "tensor_amplification";
    r.parameters = "eps=" + std::to_string(eps) + ",t=" + std::to_string(t);
    r.predicted =
        1.0 - std::exp2(1.0 - static_cast<double>(t) / static_cast<double>(denom));
    r.observed = rat_to_string(observed);
    r.holds = holds;
    reports.push_back(std::move(r));
  }
  return reports;
}

Rational likelihood_dominance_mass(const Distribution& p,
                                   const Distribution& q) {
  Rational mass(0);
  for (const auto& [v, pp] : p.probs())
    if (pp > q.prob_value(v)) mass += pp;
  return mass;
}

bool likelihood_dominance_holds(const Distribution& p, const Distribution& q,
                                const Rational& alpha) {
  return likelihood_dominance_mass(p, q) > alpha;
}

double wilson_lower(double phat, long n, double zq) {
  if (n <= 0) return 0.0;
  const double z2 = zq * zq;
  const double nn = static_cast<double>(n);
  const double center = phat + z2 / (2 * nn);
  const double margin =
      zq * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn));
  return (center - margin) / (1 + z2 / nn);
}

BoundReport verify_hoeffding_empirical(const Family& fam, const BitString& z,
                                       const std::vector<TestFn>& functions,
                                       double eps_acc, double delta,
                                       long trials, std::uint64_t seed) {
  if (functions.empty())
    throw DomainError("verify_hoeffding_empirical: no test functions");
  if (trials < 1) throw DomainError("verify_hoeffding_empirical: trials >= 1");
  const long T = hoeffding_T(1.0, eps_acc, delta,
                             std::log2(static_cast<double>(functions.size())));

  // Exact means under the family distribution.
  const Distribution d = fam.dist(z);
  std::vector<double> exact_mean(functions.size(), 0.0);
  for (const auto& [v, p] : d.probs()) {
    const BitString x(v, d.support_len());
    for (std::size_t fi = 0; fi < functions.size(); ++fi)
      exact_mean[fi] += rat_to_double(p) * functions[fi].f(x);
  }

  const rng::Stream root(seed);
  long good = 0;
  for (long trial = 0; trial < trials; ++trial) {
    const SampleSet s =
        draw_samples(fam, z, static_cast<std::size_t>(T),
                     root.split(static_cast<std::uint64_t>(trial)).seed());
    bool ok = true;
    for (std::size_t fi = 0; fi < functions.size() && ok; ++fi) {
      double sum = 0.0;
      for (const BitString& x : s.samples) sum += functions[fi].f(x);
      ok = std::abs(sum / static_cast<double>(T) - exact_mean[fi]) <=
           eps_acc + 1e-12;
    }
    if (ok) ++good;
  }
  const double frac = static_cast<double>(good) / static_cast<double>(trials);

  BoundReport r;
  r.claim = "uniform_convergence";
  r.parameters = "T=" + std::to_string(T) +
                 ",F=" + std::to_string(functions.size()) +
                 ",eps=" + std::to_string(eps_acc) +
                 ",delta=" + std::to_string(delta) +
                 ",trials=" + std::to_string(trials);
  r.predicted = 1.0 - delta;
  r.observed = std::to_string(good) + "/" + std::to_string(trials);
  r.holds = wilson_lower(frac, trials, 2.5758) >= 1.0 - delta;
  return r;
}

}  // namespace distlab
