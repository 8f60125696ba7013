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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "distlab/learner.hpp"
#include "helpers.hpp"

using namespace distlab;
using namespace distlab::test;

namespace {

// Two-parameter family with P_0(1) = 1/2 and P_1(1) = 1/4, for the direct
// threshold examples: z=0 -> out OR of two coins? No: out = r0 for z=0 and
// r0 AND r1 for z=1, muxed on z.
std::shared_ptr<const CircuitFamily> half_quarter_family() {
  // wires: z=0, r0=1, r1=2; gates: 3=AND(1,2), 4=NOT(0), 5=AND(4,1),
  // 6=AND(0,3), 7=OR(5,6): z==0 -> r0, z==1 -> r0&r1.
  return compile_family(R"({"param_bits":1,"rand_bits":2,"out_bits":1,
    "gates":[{"op":"AND","in":[1,2]},{"op":"NOT","in":[0]},
             {"op":"AND","in":[4,1]},{"op":"AND","in":[0,3]},
             {"op":"OR","in":[5,6]}],
    "outputs":[7]})");
}

SampleSet constant_samples(const BitString& x, std::size_t t) {
  SampleSet s;
  for (std::size_t i = 0; i < t; ++i) s.samples.push_back(x);
  return s;
}

}  // namespace

TEST_CASE("dis threshold examples with the exact estimator") {
  const auto fam = half_quarter_family();
  const Estimator est = exact_estimator(fam);
  const BitString l = BitString::parse("0");  // P_l(1) = 1/2
  const BitString m = BitString::parse("1");  // P_m(1) = 1/4
  // 1/2 >= (17/16)(1/4): output 1.
  CHECK(dis(est, l, m, BitString::parse("1"), 1, 0) == 1);
  // Equal positive probabilities: 0.
  CHECK(dis(est, l, l, BitString::parse("1"), 1, 0) == 0);
  // P_m = 0 < P_l: any positive beats (1+c) * 0.
  const auto id = identity_family();
  const Estimator ide = exact_estimator(id);
  CHECK(dis(ide, BitString::parse("1"), BitString::parse("0"),
            BitString::parse("1"), 2, 0) == 1);
}

TEST_CASE("dis pointwise claims, exact estimator, exhaustive") {
  // dis = 1 whenever P_l >= (1 + 1/(8 eps)) P_m, dis = 0 whenever
  // P_m > P_l >= 0; checked over every (l, m, x) of a k=3 fixture.
  const auto fam = biased_family(3);
  const FamilyTable table(fam);
  for (long eps : {1L, 2L, 4L}) {
    for (std::uint32_t lv = 0; lv < 8; ++lv)
      for (std::uint32_t mv = 0; mv < 8; ++mv) {
        const Distribution& dl = table.dist(BitString(lv, 3));
        const Distribution& dm = table.dist(BitString(mv, 3));
        for (std::uint32_t xv = 0; xv < 8; ++xv) {
          const Rational pl = dl.prob_value(xv);
          const Rational pm = dm.prob_value(xv);
          const int d = dis_deterministic(dl, dm, xv, eps);
          if (pl * Rational(8 * eps) >= pm * Rational(8 * eps + 1))
            CHECK(d == 1);
          if (pm > pl) CHECK(d == 0);
        }
      }
  }
}

TEST_CASE("distinguisher advantage inequality, exact estimator") {
  // SD <= (1 + 1/(4 eps)) |Pr_l[dis] - Pr_m[dis]| + 1/(4 eps) for every
  // ordered pair at SD >= 1/eps.
  for (int k : {2, 3}) {
    const auto fam = biased_family(k);
    const FamilyTable table(fam);
    for (long eps : {1L, 2L}) {
      for (std::uint32_t lv = 0; lv < (1u << k); ++lv)
        for (std::uint32_t mv = 0; mv < (1u << k); ++mv) {
          const Distribution& dl = table.dist(BitString(lv, k));
          const Distribution& dm = table.dist(BitString(mv, k));
          const Rational sd = statistical_distance(dl, dm);
          if (sd * eps < 1) continue;
          Rational pr_l(0), pr_m(0);
          for (std::uint32_t xv = 0; xv < (1u << k); ++xv) {
            if (!dis_deterministic(dl, dm, xv, eps)) continue;
            pr_l += dl.prob_value(xv);
            pr_m += dm.prob_value(xv);
          }
          const Rational adv = abs(pr_l - pr_m);
          CHECK(sd <= Rational(4 * eps + 1, 4 * eps) * adv +
                          Rational(1, 4 * eps));
        }
    }
  }
}

TEST_CASE("empirical gap: identical streams give gap 0") {
  const auto fam = biased_family(2);
  const Estimator est = exact_estimator(fam);
  const BitString a = BitString::parse("10");
  const std::uint64_t seed = 314;
  const SampleSet samples = draw_samples(*fam, a, 24, seed);
  CHECK(empirical_gap(est, a, BitString::parse("01"), samples, seed, 2) == 0);
}

TEST_CASE("empirical gap on point-mass families") {
  const auto id = identity_family();
  const Estimator est = exact_estimator(id);
  const BitString a = BitString::parse("0");
  const BitString b = BitString::parse("1");
  // Target = point mass on a: dis is 1 on both streams.
  CHECK(empirical_gap(est, a, b, constant_samples(a, 10), 7, 1) == 0);
  // Target = point mass on b: dis(a,b,b) = 0 but fresh draws give 1.
  CHECK(empirical_gap(est, a, b, constant_samples(b, 10), 7, 1) == 1);
}

TEST_CASE("sigma3 query extremes and the point-mass witness") {
  const auto id = identity_family();
  const Estimator est = exact_estimator(id);
  const SampleSet s = constant_samples(BitString::parse("1"), 6);
  CHECK(sigma3_query(est, BitString(0, 0), Rational(1), s, 5, 1));
  CHECK_FALSE(sigma3_query(est, BitString(0, 0), Rational(-1), s, 5, 1));
  // k=1 family; prefix = the first (only) bit of the target parameter.
  CHECK(sigma3_query(est, BitString::parse("1"), Rational(0), s, 5, 1));
  CHECK_FALSE(sigma3_query(est, BitString::parse("0"), Rational(0), s, 5, 1));
}

TEST_CASE("learn_default_t formula") {
  CHECK(learn_default_t(1, 1, 1) == 100);
  CHECK(learn_default_t(2, 1, 2) == 100 * 4 * 3);
  CHECK_THROWS_AS(learn_default_t(0, 1, 1), DomainError);
}

TEST_CASE("learner rejects parameterless families") {
  CHECK_THROWS_AS(
      learn_sd_hypothesis(uniform_family(0, 1),
                          constant_samples(BitString::parse("1"), 4), 1, 10, 1),
      DomainError);
}

TEST_CASE("agnostic learner recovers a point-mass target in the family") {
  for (int k : {2, 3, 4}) {
    const auto id = point_family(k);
    const BitString target(static_cast<std::uint32_t>(k == 2 ? 2 : 5), k);
    const SampleSet samples = constant_samples(target, 32);
    const LearnReport r = learn_sd_agnostic(id, samples, 2, 10, 99,
                                            Distribution::point_mass(target));
    CHECK(r.hypothesis == target);
    CHECK(r.achieved_sd == 0);
    CHECK(r.opt == 0);
    CHECK(r.within_bound);
  }
}

TEST_CASE("uniform family: every hypothesis is within the agnostic bound") {
  const auto fam = uniform_family(2, 2);
  const SampleSet samples = constant_samples(BitString::parse("01"), 16);
  const LearnReport r =
      learn_sd_agnostic(fam, samples, 2, 10, 3, Distribution::uniform(2));
  CHECK(r.within_bound);
  CHECK(r.achieved_sd == r.opt);
}

TEST_CASE("gap-table learner agrees with the public-surface reference") {
  // Reference implementation straight from dis/empirical_gap/sigma3_query,
  // sharing the learner's seed layout.
  const auto fam = biased_family(2);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const long eps = 2;
    const SampleSet samples =
        draw_samples(*fam, BitString::parse("10"), 12, seed * 17);

    const rng::Stream root(seed);
    const Estimator est =
        noisy_estimator(fam, 500 * eps, 500 * eps, root.split(1).seed());
    const std::uint64_t fresh_seed = root.split(2).seed();
    const int k = 2;
    BitString out(0, 0);
    for (int index = 1; index <= k; ++index) {
      int decided = -1;
      Rational p(1, 2);
      for (int j = 1; j <= k; ++j) {
        const bool q0 = sigma3_query(
            est, out.concat(BitString(0, 1)), p, samples, fresh_seed, eps);
        const bool q1 = sigma3_query(
            est, out.concat(BitString(1, 1)), p, samples, fresh_seed, eps);
        if (q0 != q1) {
          decided = q1 ? 1 : 0;
          break;
        }
        if (j == k) {
          decided = 1;
          break;
        }
        if (q0 && q1)
          p -= pow2_rat(-(j + 1));
        else
          p += pow2_rat(-(j + 1));
      }
      out = out.concat(BitString(static_cast<std::uint32_t>(decided), 1));
    }

    CHECK(learn_sd_hypothesis(fam, samples, eps, 10, seed) == out);
  }
}

TEST_CASE("oracle-mode learner honors the stage schedule") {
  // At every stage I the accepted prefix extends to a full h with
  // max_b gap <= opt + I/(2 k eps), checked exactly.
  for (int k : {2, 3}) {
    const auto fam = biased_family(k);
    const FamilyTable table(fam);
    const long eps = 2;
    // Mixture target: a family member with 15% uniform noise.
    const Distribution target = Distribution::mixture(
        table.dist(BitString(1, k)), Distribution::uniform(k),
        Rational(3, 20));
    Rational opt;
    bool first = true;
    for (std::uint32_t a = 0; a < (1u << k); ++a) {
      const Rational sd = statistical_distance(target, table.dist(BitString(a, k)));
      if (first || sd < opt) opt = sd;
      first = false;
    }
    const OracleModeResult res = learn_sd_oracle_mode(fam, target, eps);
    for (std::size_t stage = 0; stage < res.stage_prefixes.size(); ++stage) {
      const BitString& prefix = res.stage_prefixes[stage];
      const int suffix_bits = k - prefix.size();
      const Rational allowance =
          opt + Rational(static_cast<long>(stage) + 1, 2L * k * eps);
      bool extends = false;
      for (std::uint32_t s = 0; s < (1u << suffix_bits) && !extends; ++s) {
        const BitString h = prefix.concat(BitString(s, suffix_bits));
        bool all = true;
        for (std::uint32_t b = 0; b < (1u << k) && all; ++b)
          all = true_gap(table, target, h, BitString(b, k), eps) <= allowance;
        extends = all;
      }
      CHECK(extends);
    }
  }
}

TEST_CASE("learn_kl: argmax recovery, ties, and support checking") {
  const auto fam = biased_bit_family();
  const SampleSet s = draw_samples(*fam, BitString::parse("1"), 41, 7);
  CHECK(learn_kl(fam, s, 1) == BitString::parse("1"));

  const auto uni = uniform_family(2, 1);
  CHECK(learn_kl(uni, draw_samples(*uni, BitString::parse("00"), 8, 3), 1) ==
        BitString::parse("00"));

  CHECK_THROWS_AS(
      learn_kl(identity_family(),
               constant_samples(BitString::parse("1"), 4), 1),
      SupportError);
}

TEST_CASE("learn_kl minimizes empirical KL exactly") {
  const auto fam = biased_family(2);
  const rng::Stream s(55);
  for (int rep = 0; rep < 8; ++rep) {
    const SampleSet samples =
        draw_samples(*fam, BitString(static_cast<std::uint32_t>(rep % 4), 2),
                     15, s.split(static_cast<std::uint64_t>(rep)).seed());
    const BitString h = learn_kl(fam, samples, 1);
    // Empirical distribution of the samples.
    Distribution::Map m;
    for (const BitString& x : samples.samples)
      m[x.value()] += Rational(1, 15);
    const Distribution emp(2, std::move(m));
    const double got = kl_divergence(emp, fam->dist(h));
    for (std::uint32_t a = 0; a < 4; ++a)
      CHECK(got <= kl_divergence(emp, fam->dist(BitString(a, 2))) + 1e-12);
  }
}

TEST_CASE("proper-learning benchmark") {
  // Perfect learner on a point-mass sampler: rate 1.
  LearningInstance inst;
  inst.family = biased_family(2);
  inst.sampler = Distribution::point_mass(BitString::parse("11"));
  inst.params = LearnParams{2, 10, 24};
  CHECK(learn_proper_avg_benchmark(inst, constant_learner(BitString::parse("11")),
                                   40, 5) == 1.0);

  // Constant hypothesis: Monte Carlo rate approaches the exact mass.
  LearningInstance u;
  u.family = biased_family(2);
  u.sampler = Distribution::uniform(2);
  u.params = LearnParams{4, 10, 12};
  const Rational mass = proper_success_mass(u, BitString::parse("00"));
  // With eps=4, only z = 00 is within 1/4 of D(00): mass = 1/4.
  CHECK(mass == Rational(1, 4));
  const double rate =
      learn_proper_avg_benchmark(u, constant_learner(BitString::parse("00")),
                                 600, 8);
  CHECK(std::abs(rate - 0.25) < 0.06);

  // The exhaustive MLE learner does well on the biased fixture.
  LearningInstance m;
  m.family = biased_family(2);
  m.sampler = Distribution::uniform(2);
  m.params = LearnParams{2, 10, owp_default_t(2, 2)};
  CHECK(learn_proper_avg_benchmark(m, mle_learner(), 120, 4) >= 0.95);
}
