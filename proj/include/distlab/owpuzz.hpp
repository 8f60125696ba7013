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

#include "distlab/instance.hpp"
#include "distlab/mle.hpp"
#include "distlab/sampling.hpp"

namespace distlab {

/// One-way-puzzle experiments built on a learning instance: the sampler
/// draws a secret parameter z, the puzzle is a t-sample set from D(z), and
/// the (unbounded) verifier accepts a hypothesis h iff the distribution it
/// indexes is close to the one indexed by the sample-set MLE.

struct Puzzle {
  SampleSet puzz;
  BitString ans;
};

/// Default sample count 16 * eps^2 * n.
long owp_default_t(long eps, long n);

/// z <- sampler, puzz <- D(z)^t, deterministic per seed.
Puzzle owp_samp(const LearningInstance& inst, std::uint64_t seed);

/// Accept iff SD(D(z*), D(h)) <= 3/(2 eps), boundary inclusive, where z* is
/// the exhaustive-MLE parameter for puzz.
bool owp_vrfy(const LearningInstance& inst, const SampleSet& puzz,
              const BitString& h);

/// Monte Carlo estimate of Pr[accept] on honest (puzz, ans) pairs.
double owp_completeness(const LearningInstance& inst, long trials,
                        std::uint64_t seed);

struct AttackResult {
  Rational success;
  bool exact = false;  // true when the puzzle space was enumerated
};

/// Success probability of the information-theoretically optimal adversary:
/// for each puzzle, the best hypothesis any algorithm could output. Exact
/// when t * out_bits fits the tuple cap; otherwise requires the Monte Carlo
/// fallback to be enabled.
AttackResult owp_best_attack(const LearningInstance& inst,
                             bool allow_monte_carlo = false, long trials = 0,
                             std::uint64_t seed = 0);

/// Pr over {x_i} <- D(z)^t that the MLE z* lands within SD 1/(2 eps) of z.
/// Exact (enumerates the puzzle space); requires t * out_bits <= tuple cap.
Rational mle_recovery_prob_exact(const LearningInstance& inst,
                                 const BitString& z);
/// Monte Carlo variant for larger t.
double mle_recovery_prob_mc(const LearningInstance& inst, const BitString& z,
                            long trials, std::uint64_t seed);

}  // namespace distlab
