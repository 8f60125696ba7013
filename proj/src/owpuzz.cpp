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

#include "distlab/owpuzz.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace distlab {

namespace {

// Shared scratch for the exhaustive experiments: all 2^k distribution
// vectors, the pairwise SD table, and the verifier threshold.
struct InstanceTables {
  std::vector<Distribution> dists;
  std::vector<std::vector<Rational>> sd;
  Rational vrfy_threshold;

  explicit InstanceTables(const LearningInstance& inst) {
    inst.validate();
    const int k = inst.family->param_bits();
    const std::uint32_t n = 1u << k;
    dists.reserve(n);
    for (std::uint32_t z = 0; z < n; ++z)
      dists.push_back(inst.family->dist(BitString(z, k)));
    sd.assign(n, std::vector<Rational>(n));
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b) {
        sd[a][b] = statistical_distance(dists[a], dists[b]);
        sd[b][a] = sd[a][b];
      }
    vrfy_threshold = Rational(3, 2 * inst.params.eps);
  }

  // MLE over the full parameter space from an outcome->count table, with the
  // lexicographic tie break.
  std::uint32_t mle_value(
      const std::vector<std::pair<std::uint32_t, std::size_t>>& counts) const {
    std::uint32_t best = 0;
    Rational best_like(-1);
    for (std::uint32_t z = 0; z < dists.size(); ++z) {
      Rational like(1);
      for (const auto& [xv, c] : counts) {
        const Rational p = dists[z].prob_value(xv);
        if (p == 0) {
          like = 0;
          break;
        }
        like *= rat_pow(p, static_cast<unsigned>(c));
      }
      if (like > best_like) {
        best_like = like;
        best = z;
      }
    }
    return best;
  }

  std::vector<std::pair<std::uint32_t, std::size_t>> count_values(
      const SampleSet& s) const {
    std::map<std::uint32_t, std::size_t> freq;
    for (const BitString& x : s.samples) ++freq[x.value()];
    return {freq.begin(), freq.end()};
  }
};

// Enumerates count vectors (c_1..c_s) with sum t over `support`, calling fn
// with the counts. Multinomial weights are maintained by the callers.
void for_each_count_vector(std::size_t support_size, std::size_t t,
                           std::vector<std::size_t>& counts, std::size_t idx,
                           std::size_t remaining,
                           const std::function<void()>& fn) {
  if (idx + 1 == support_size) {
    counts[idx] = remaining;
    fn();
    return;
  }
  for (std::size_t c = 0; c <= remaining; ++c) {
    counts[idx] = c;
    for_each_count_vector(support_size, t, counts, idx + 1, remaining - c, fn);
  }
}

Int multinomial(const std::vector<std::size_t>& counts) {
  Int acc(1);
  std::size_t used = 0;
  for (std::size_t c : counts) {
    // multiply C(used + c, c) incrementally
    for (std::size_t i = 1; i <= c; ++i) {
      acc *= Int(used + i);
      acc /= Int(i);
    }
    used += c;
  }
  return acc;
}

// Number of count vectors is C(t+s-1, s-1); enumeration is practical only
// when that stays modest.
bool multiset_enumerable(std::size_t support_size, long t) {
  constexpr double kMaxVectors = 2.0e5;
  double acc = 1.0;
  for (std::size_t i = 1; i < support_size; ++i) {
    acc *= static_cast<double>(t + static_cast<long>(i)) / static_cast<double>(i);
    if (acc > kMaxVectors) return false;
  }
  return true;
}

}  // namespace

long owp_default_t(long eps, long n) {
  if (eps < 1 || n < 1) throw DomainError("owp_default_t: eps, n must be >= 1");
  return 16 * eps * eps * n;
}

Puzzle owp_samp(const LearningInstance& inst, std::uint64_t seed) {
  inst.validate();
  const rng::Stream root(seed);
  std::uint64_t ctr = 0;
  const BitString z = Sampler(inst.sampler).draw(root, ctr);
  SampleSet puzz = draw_samples(*inst.family, z,
                                static_cast<std::size_t>(inst.params.t),
                                root.split(1).seed());
  return Puzzle{std::move(puzz), z};
}

bool owp_vrfy(const LearningInstance& inst, const SampleSet& puzz,
              const BitString& h) {
  inst.validate();
  inst.family->check_param(h);
  const MleResult mle = eval_mle(*inst.family, puzz);
  const Rational sd = statistical_distance(inst.family->dist(mle.argmax_z),
                                           inst.family->dist(h));
  return sd <= Rational(3, 2 * inst.params.eps);
}

double owp_completeness(const LearningInstance& inst, long trials,
                        std::uint64_t seed) {
  inst.validate();
  if (trials < 1) throw DomainError("owp_completeness: trials must be >= 1");
  const InstanceTables tables(inst);
  const Sampler zsampler(inst.sampler);
  const rng::Stream root(seed);
  long accepted = 0;
  for (long i = 0; i < trials; ++i) {
    const rng::Stream trial = root.split(static_cast<std::uint64_t>(i));
    std::uint64_t ctr = 0;
    const BitString z = zsampler.draw(trial, ctr);
    const SampleSet puzz =
        draw_samples(*inst.family, z, static_cast<std::size_t>(inst.params.t),
                     trial.split(1).seed());
    const std::uint32_t zstar = tables.mle_value(tables.count_values(puzz));
    if (tables.sd[zstar][z.value()] <= tables.vrfy_threshold) ++accepted;
  }
  return static_cast<double>(accepted) / static_cast<double>(trials);
}

namespace {

// Union of outcome supports across parameters with positive sampler mass,
// plus every parameter's support needed for MLE likelihoods.
std::vector<std::uint32_t> union_support(const InstanceTables& tables) {
  std::map<std::uint32_t, bool> seen;
  for (const Distribution& d : tables.dists)
    for (const auto& [v, p] : d.probs()) seen[v] = true;
  std::vector<std::uint32_t> out;
  out.reserve(seen.size());
  for (const auto& [v, b] : seen) out.push_back(v);
  return out;
}

}  // namespace

AttackResult owp_best_attack(const LearningInstance& inst,
                             bool allow_monte_carlo, long trials,
                             std::uint64_t seed) {
  inst.validate();
  const InstanceTables tables(inst);
  const long t = inst.params.t;
  const int m = inst.family->out_bits();
  const std::uint32_t nparams = 1u << inst.family->param_bits();

  // Small union supports stay enumerable beyond the bit cap; what matters is
  // the number of count vectors, not 2^(t*m).
  const bool enumerable = t * m <= limits::kMaxTupleBits ||
                          multiset_enumerable(union_support(tables).size(), t);

  if (!enumerable) {
    if (!allow_monte_carlo)
      throw DomainError(
          "owp_best_attack: puzzle space too large; enable the Monte Carlo "
          "fallback");
    if (trials < 1) throw DomainError("owp_best_attack: trials must be >= 1");
    const Sampler zsampler(inst.sampler);
    const rng::Stream root(seed);
    long wins = 0;
    for (long i = 0; i < trials; ++i) {
      const rng::Stream trial = root.split(static_cast<std::uint64_t>(i));
      std::uint64_t ctr = 0;
      const BitString z = zsampler.draw(trial, ctr);
      const SampleSet puzz = draw_samples(
          *inst.family, z, static_cast<std::size_t>(t), trial.split(1).seed());
      const std::uint32_t zstar = tables.mle_value(tables.count_values(puzz));
      for (std::uint32_t h = 0; h < nparams; ++h)
        if (tables.sd[zstar][h] <= tables.vrfy_threshold) {
          ++wins;
          break;
        }
    }
    return {Rational(wins, trials), false};
  }

  // Exact: enumerate puzzle multisets; the acceptance predicate and the
  // puzzle probability are both permutation invariant.
  const std::vector<std::uint32_t> support = union_support(tables);
  std::vector<std::size_t> counts(support.size(), 0);
  Rational success(0);
  for_each_count_vector(
      support.size(), static_cast<std::size_t>(t), counts, 0,
      static_cast<std::size_t>(t), [&]() {
        std::vector<std::pair<std::uint32_t, std::size_t>> freq;
        for (std::size_t i = 0; i < support.size(); ++i)
          if (counts[i] > 0) freq.emplace_back(support[i], counts[i]);
        // Probability of this multiset under the honest sampler.
        Rational mass(0);
        for (const auto& [zv, zp] : inst.sampler.probs()) {
          Rational like(1);
          for (const auto& [xv, c] : freq) {
            const Rational p = tables.dists[zv].prob_value(xv);
            if (p == 0) {
              like = 0;
              break;
            }
            like *= rat_pow(p, static_cast<unsigned>(c));
          }
          mass += zp * like;
        }
        if (mass == 0) return;
        const std::uint32_t zstar = tables.mle_value(freq);
        bool any = false;
        for (std::uint32_t h = 0; h < nparams && !any; ++h)
          any = tables.sd[zstar][h] <= tables.vrfy_threshold;
        if (any)
          success += mass * Rational(multinomial(counts));
      });
  return {success, true};
}

Rational mle_recovery_prob_exact(const LearningInstance& inst,
                                 const BitString& z) {
  inst.validate();
  inst.family->check_param(z);
  const InstanceTables tables(inst);
  const long t = inst.params.t;
  const Rational radius(1, 2 * inst.params.eps);
  const Distribution& dz = tables.dists[z.value()];
  std::vector<std::uint32_t> support;
  for (const auto& [v, p] : dz.probs()) support.push_back(v);
  if (t * inst.family->out_bits() > limits::kMaxTupleBits &&
      !multiset_enumerable(support.size(), t))
    throw DomainError("mle_recovery_prob_exact: puzzle space too large");

  std::vector<std::size_t> counts(support.size(), 0);
  Rational good(0);
  for_each_count_vector(
      support.size(), static_cast<std::size_t>(t), counts, 0,
      static_cast<std::size_t>(t), [&]() {
        Rational like(1);
        std::vector<std::pair<std::uint32_t, std::size_t>> freq;
        for (std::size_t i = 0; i < support.size(); ++i) {
          if (counts[i] == 0) continue;
          freq.emplace_back(support[i], counts[i]);
          like *= rat_pow(dz.prob_value(support[i]),
                          static_cast<unsigned>(counts[i]));
        }
        const std::uint32_t zstar = tables.mle_value(freq);
        if (tables.sd[z.value()][zstar] <= radius)
          good += like * Rational(multinomial(counts));
      });
  return good;
}

double mle_recovery_prob_mc(const LearningInstance& inst, const BitString& z,
                            long trials, std::uint64_t seed) {
  inst.validate();
  inst.family->check_param(z);
  if (trials < 1) throw DomainError("mle_recovery_prob_mc: trials >= 1");
  const InstanceTables tables(inst);
  const Rational radius(1, 2 * inst.params.eps);
  const rng::Stream root(seed);
  long good = 0;
  for (long i = 0; i < trials; ++i) {
    const SampleSet s = draw_samples(
        *inst.family, z, static_cast<std::size_t>(inst.params.t),
        root.split(static_cast<std::uint64_t>(i)).seed());
    const std::uint32_t zstar = tables.mle_value(tables.count_values(s));
    if (tables.sd[z.value()][zstar] <= radius) ++good;
  }
  return static_cast<double>(good) / static_cast<double>(trials);
}

}  // namespace distlab
