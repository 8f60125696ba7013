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

#include <string>

#include "distlab/circuit.hpp"
#include "distlab/learner.hpp"

namespace distlab {

// ---------------------------------------------------------------------------
// Postselection gadget

/// A machine emitting (b, b*) from an input x and randomness. The underlying
/// circuit's two outputs are the designated b and b* wires, in that order.
struct PostselectMachine {
  std::shared_ptr<const CircuitFamily> circuit;

  int input_bits() const { return circuit->param_bits(); }
  /// Exact Pr[b = c and b* = 1] on input x.
  Rational joint_mass(const BitString& x, int c) const;
  /// Exact Pr[b* = 1] on input x.
  Rational postselect_mass(const BitString& x) const;
};

/// Circuit JSON plus {"role": "postselect", "b_wire": int, "bstar_wire": int}.
PostselectMachine postselect_from_json(const std::string& text);

/// Exact distribution of the wrapped machine M*(x, c) over {x, bottom},
/// encoded on one bit: 1 carries Pr[b = c and b* = 1], 0 the rest.
Distribution postselect_gadget(const PostselectMachine& mach,
                               const BitString& x, int c);

/// One-parameter family c -> gadget(x, c); the hypothesis space for the
/// membership decision below.
FamilyPtr gadget_family(const PostselectMachine& mach, const BitString& x);

enum class Membership { InLanguage, NotInLanguage, PromiseViolation };

/// Exhaustive MLE over c in {0,1} on observation (x, 1): in-language iff the
/// accept likelihood under c=1 beats c=0 by at least the promise factor 3,
/// out iff it loses by the same factor, and a violation report otherwise.
/// Throws if Pr[b*=1] = 0 (machine invariant violated).
Membership decide_by_mle(const PostselectMachine& mach, const BitString& x,
                         long eps);

// ---------------------------------------------------------------------------
// Uniform smoothing and tensor powers

inline constexpr int kSmoothingDyadicBits = 32;

struct SmoothedFamilyResult {
  FamilyPtr family;
  Rational mix_weight;       // the dyadic C actually used
  int min_prob_exponent = 0; // smallest m with every positive prob >= 2^-m
};

/// Mixture family that outputs a fresh uniform string with probability C and
/// the base sample otherwise, with
///   C = (2^{-1/(2 eps)} - 2^{-1/eps}) * 2^{-(m+1-p)}
/// rounded down to kSmoothingDyadicBits dyadic places (the rounding keeps
/// every downstream inequality valid; the gap is below 2^-32). Every outcome
/// of the result has probability >= C * 2^-p under every parameter.
SmoothedFamilyResult smooth_family(FamilyPtr fam, long eps);

struct RepeatedFamily {
  FamilyPtr base;
  long t = 0;
  /// Non-null iff t * base->out_bits() fits the tuple cap; then the tuples
  /// are a Family in their own right.
  FamilyPtr as_family;

  Rational tuple_likelihood(const BitString& z, const SampleSet& tuple) const;
  MleResult tuple_mle(const SampleSet& tuple) const;
  SampleSet draw_tuple(const BitString& z, std::uint64_t seed) const;
};

/// t = ceil(1000 m^2 eps^2 (k + log2(2 delta))) with m as above and
/// k = param_bits.
RepeatedFamily repeat_family(FamilyPtr fam, long eps, long delta);
long repeat_default_t(int min_prob_exponent, long eps, long delta, int k);

/// The t-tuple family itself, for tuples that fit the cap.
FamilyPtr tuple_family(FamilyPtr base, int t);

// ---------------------------------------------------------------------------
// Generator-based hard instance, Check and breaker

struct PrgSpec {
  std::shared_ptr<const CircuitFamily> gen;  // advice bits -> n-bit strings
  int n = 0;                                 // output length; advice in [0, n)

  int advice_bits() const { return gen->param_bits(); }
};

/// Circuit JSON plus {"role": "prg"}; "n" defaults to the circuit out_bits.
PrgSpec prg_from_json(const std::string& text);

struct PrgInstance {
  LearningInstance inst;
  PrgSpec prg;
  int mu_bits = 0;

  BitString encode_param(int mu, int b) const;
  /// Builds the observation tuples (xi_i, mu) a learner sees.
  SampleSet tag_samples(const std::vector<BitString>& xis, int mu) const;
};

/// Parameter (mu, b); output (xi, mu) where xi <- Gen(mu) if b = 0 and
/// xi <- U_n if b = 1. Advice values outside [0, n) behave like b = 1.
PrgInstance prg_learning_instance(const PrgSpec& prg);

/// True iff the learner answers b = 1 on every one of `reps` runs over fresh
/// uniform samples tagged with mu.
bool check_mu(const LearnerFn& learner, const PrgInstance& prg, int mu,
              long reps, std::uint64_t seed);

/// 1 = "uniform", 0 = "generator": outputs 0 iff some mu has b_mu = 0 on the
/// given samples while check_mu(mu) raised the flag.
int prg_breaker(const LearnerFn& learner, const PrgInstance& prg,
                const std::vector<BitString>& xis, long reps,
                std::uint64_t seed);

struct BreakerAdvantage {
  double p1_uniform = 0;  // Pr[breaker = 1 | samples uniform]
  double p1_gen = 0;      // Pr[breaker = 1 | samples from Gen(mu*)]
  int mu_star = 0;        // advice maximizing SD(Gen(mu), U_n)
  double advantage = 0;
};

/// Seeded two-world experiment over `trials` runs per world, t samples each.
BreakerAdvantage breaker_advantage(const PrgSpec& prg, const LearnerFn& learner,
                                   long trials, long reps, long t,
                                   std::uint64_t seed);

}  // namespace distlab
