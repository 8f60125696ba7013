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
#include <optional>
#include <vector>

#include "distlab/estimator.hpp"
#include "distlab/instance.hpp"
#include "distlab/owpuzz.hpp"
#include "distlab/sampling.hpp"

namespace distlab {

/// Pairwise threshold distinguisher: queries the estimator at (l, x) with
/// counter query_ctr and at (m, x) with query_ctr + 1, and outputs 1 iff
/// E_l >= (1 + 1/(16 eps)) * E_m.
int dis(const Estimator& est, const BitString& l, const BitString& m,
        const BitString& x, long eps, std::uint64_t query_ctr);

/// Coin layout for the empirical-gap statistic, fixed so the whole scan over
/// (a, b) reuses one batch of coins: sample index i uses estimator counters
/// (4i, 4i+1) on the target side and (4i+2, 4i+3) on the fresh side, and the
/// i-th fresh draw from D(a) maps the i-th value of the fresh stream (the
/// same variate for every a).
///
/// empirical_gap returns |mean_i dis(a,b,x_i) - mean_i dis(a,b,X_i)| with
/// X_i <- D(a), as an exact rational with denominator t.
Rational empirical_gap(const Estimator& est, const BitString& a,
                       const BitString& b, const SampleSet& target_samples,
                       std::uint64_t fresh_seed, long eps);

/// Exhaustive exists/forall query: true iff some suffix a makes
/// empirical_gap(prefix||a, b, ...) <= omega for every b.
bool sigma3_query(const Estimator& est, const BitString& prefix,
                  const Rational& omega, const SampleSet& target_samples,
                  std::uint64_t fresh_seed, long eps);

struct LearnReport {
  BitString hypothesis;
  Rational achieved_sd;  // exact, post hoc, against the reference target
  Rational opt;          // exact min over a of SD(target, D(a))
  Rational bound;        // (3 + 1/eps) * opt + 1/eps
  bool within_bound = false;
};

struct LearnOptions {
  /// Estimator used inside dis. The default follows the construction: a
  /// noisy estimator with multiplicative precision and failure rate both
  /// 500 * eps. Exact mode is available for sensitivity experiments.
  enum class Mode { Noisy, Exact };
  Mode mode = Mode::Noisy;
  long dis_precision_factor = 500;  // eps_mult = fail = factor * eps
};

/// Default sample count ceil(100 k^2 eps^2 (k + log2(delta))).
long learn_default_t(long k, long eps, long delta);

/// Bit-by-bit agnostic learner: for each output index the threshold p(j) is
/// binary searched over k rounds, querying the exists/forall oracle for both
/// candidate bits. Returns the hypothesis only.
BitString learn_sd_hypothesis(FamilyPtr fam, const SampleSet& t_samples,
                              long eps, long delta, std::uint64_t seed,
                              const LearnOptions& opts = {});

/// Full run plus the exact post-hoc report. `target` is the distribution the
/// report is scored against; when absent the empirical distribution of the
/// samples is used.
LearnReport learn_sd_agnostic(FamilyPtr fam, const SampleSet& t_samples,
                              long eps, long delta, std::uint64_t seed,
                              const std::optional<Distribution>& target =
                                  std::nullopt,
                              const LearnOptions& opts = {});

/// Oracle-mode variant used for cross-validation: exact probabilities stand
/// in for the empirical means, dis is deterministic, and stage I accepts a
/// candidate bit iff some completion keeps every gap within
/// opt + (4I-3)/(8 k eps). Records the prefix accepted at each stage.
struct OracleModeResult {
  BitString hypothesis;
  std::vector<BitString> stage_prefixes;
};
OracleModeResult learn_sd_oracle_mode(FamilyPtr fam,
                                      const Distribution& target, long eps);

/// Deterministic dis under exact probabilities; the pointwise object the
/// distinguisher claims are about.
int dis_deterministic(const Distribution& dl, const Distribution& dm,
                      std::uint32_t x_value, long eps);

/// |Pr[dis=1 : x<-P] - Pr[dis=1 : x<-D(a)]| with exact probabilities.
Rational true_gap(const FamilyTable& table, const Distribution& target,
                  const BitString& a, const BitString& b, long eps);

/// KL learner: exhaustive MLE over a fully supported family (every outcome
/// positive under every parameter); lexicographic tie break.
BitString learn_kl(FamilyPtr fam, const SampleSet& t_samples, long eps);

/// A learner as used by the benchmark harness.
using LearnerFn = std::function<BitString(
    const LearningInstance&, const SampleSet&, std::uint64_t seed)>;

LearnerFn mle_learner();
LearnerFn agnostic_sd_learner(const LearnOptions& opts = {});
LearnerFn constant_learner(const BitString& h);

/// Monte Carlo estimate of Pr[SD(D(z), D(h)) <= 1/eps] in the average-case
/// proper-learning experiment (z <- sampler, samples <- D(z)^t, h from the
/// supplied learner).
double learn_proper_avg_benchmark(const LearningInstance& inst,
                                  const LearnerFn& learner, long trials,
                                  std::uint64_t seed);

/// Exact acceptance mass of a fixed hypothesis in the same experiment.
Rational proper_success_mass(const LearningInstance& inst, const BitString& h);

}  // namespace distlab
