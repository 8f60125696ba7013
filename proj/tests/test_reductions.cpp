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

#include <cmath>

#include "distlab/reductions.hpp"
#include "helpers.hpp"

using namespace distlab;
using namespace distlab::test;

namespace {

// b and b* independent: b = NOT(r1 AND r2) (prob 3/4), b* = r0 (prob 1/2).
PostselectMachine three_quarters_machine() {
  return postselect_from_json(R"({"role":"postselect",
    "param_bits":0,"rand_bits":3,"out_bits":2,
    "gates":[{"op":"AND","in":[1,2]},{"op":"NOT","in":[3]}],
    "b_wire":4,"bstar_wire":0,"outputs":[]})");
}

// b = r1 AND r2 (prob 1/4), b* = r0.
PostselectMachine quarter_machine() {
  return postselect_from_json(R"({"role":"postselect",
    "param_bits":0,"rand_bits":3,"out_bits":2,
    "gates":[{"op":"AND","in":[1,2]}],
    "b_wire":3,"bstar_wire":0,"outputs":[]})");
}

// b fair coin, b* constant 1 (built as NOT(r AND NOT r)).
PostselectMachine fair_machine() {
  return postselect_from_json(R"({"role":"postselect",
    "param_bits":0,"rand_bits":1,"out_bits":2,
    "gates":[{"op":"NOT","in":[0]},{"op":"AND","in":[0,1]},
             {"op":"NOT","in":[2]}],
    "b_wire":0,"bstar_wire":3,"outputs":[]})");
}

// Parity generator: advice 00 outputs the 8 even-parity 4-bit strings
// uniformly; any other advice outputs all 16 uniformly.
PrgSpec parity_prg() {
  return prg_from_json(R"({"role":"prg","n":4,
    "param_bits":2,"rand_bits":4,"out_bits":4,
    "gates":[{"op":"XOR","in":[2,3]},{"op":"XOR","in":[6,4]},
             {"op":"NOT","in":[0]},{"op":"NOT","in":[1]},
             {"op":"AND","in":[8,9]},{"op":"AND","in":[10,7]},
             {"op":"NOT","in":[10]},{"op":"AND","in":[12,5]},
             {"op":"OR","in":[11,13]}],
    "outputs":[2,3,4,14]})");
}

}  // namespace

TEST_CASE("postselect gadget: constant machine") {
  // b == 1, b* == 1 always.
  const PostselectMachine m = postselect_from_json(R"({"role":"postselect",
    "param_bits":0,"rand_bits":1,"out_bits":2,
    "gates":[{"op":"NOT","in":[0]},{"op":"AND","in":[0,1]},
             {"op":"NOT","in":[2]}],
    "b_wire":3,"bstar_wire":3,"outputs":[]})");
  const BitString x(0, 0);
  const Distribution g1 = postselect_gadget(m, x, 1);
  CHECK(g1.prob_value(1) == 1);
  const Distribution g0 = postselect_gadget(m, x, 0);
  CHECK(g0.prob_value(0) == 1);
}

TEST_CASE("postselect gadget: conditional arithmetic and symmetry") {
  const PostselectMachine m = three_quarters_machine();
  const BitString x(0, 0);
  CHECK(m.postselect_mass(x) == Rational(1, 2));
  // Ratio Pr[(x,1) | c=1] / Pr[(x,1) | c=0] = 3.
  const Rational p1 = postselect_gadget(m, x, 1).prob_value(1);
  const Rational p0 = postselect_gadget(m, x, 0).prob_value(1);
  CHECK(p1 == Rational(3, 8));
  CHECK(p0 == Rational(1, 8));
  CHECK(p1 / p0 == 3);

  const PostselectMachine fair = fair_machine();
  const Rational f1 = postselect_gadget(fair, x, 1).prob_value(1);
  const Rational f0 = postselect_gadget(fair, x, 0).prob_value(1);
  CHECK(f1 == f0);
}

TEST_CASE("decide_by_mle on the promise and in the gap") {
  const BitString x(0, 0);
  CHECK(decide_by_mle(three_quarters_machine(), x, 1) ==
        Membership::InLanguage);
  CHECK(decide_by_mle(quarter_machine(), x, 1) == Membership::NotInLanguage);
  CHECK(decide_by_mle(fair_machine(), x, 1) == Membership::PromiseViolation);

  // Machine that never postselects: invariant violated.
  const PostselectMachine dead = postselect_from_json(R"({"role":"postselect",
    "param_bits":0,"rand_bits":1,"out_bits":2,
    "gates":[{"op":"NOT","in":[0]},{"op":"AND","in":[0,1]}],
    "b_wire":0,"bstar_wire":2,"outputs":[]})");
  CHECK_THROWS_AS(decide_by_mle(dead, x, 1), SupportError);
}

TEST_CASE("gadget monotonicity across a seeded machine corpus") {
  // Pr[b=1|b*=1] >= 2/3 forces likelihood ratio >= 2; <= 1/3 forces <= 1/2.
  const rng::Stream s(909);
  std::uint64_t ctr = 0;
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    // Random 3-coin machine: b and b* random monotone gadgets.
    const std::string js = R"({"role":"postselect",
      "param_bits":0,"rand_bits":3,"out_bits":2,
      "gates":[{"op":")" +
                           std::string(s.value(ctr++) % 2 ? "AND" : "OR") +
                           R"(","in":[0,1]},{"op":")" +
                           std::string(s.value(ctr++) % 2 ? "OR" : "XOR") +
                           R"(","in":[2,3]}],
      "b_wire":)" + std::to_string(3 + s.value(ctr++) % 2) +
                           R"(,"bstar_wire":4,"outputs":[]})";
    const PostselectMachine m = postselect_from_json(js);
    const BitString x(0, 0);
    const Rational mass = m.postselect_mass(x);
    if (mass == 0) continue;
    const Rational p1 = m.joint_mass(x, 1);
    const Rational p0 = m.joint_mass(x, 0);
    ++checked;
    if (p1 * 3 >= (p0 + p1) * 2) CHECK(p1 >= 2 * p0);   // cond >= 2/3
    if (p1 * 3 <= (p0 + p1)) CHECK(2 * p1 <= p0);       // cond <= 1/3
  }
  CHECK(checked > 100);
}

TEST_CASE("smoothing constant and full support") {
  // Family with min positive probability 1/8 over 2-bit outcomes: m=3, p=2.
  const auto fam = compile_family(R"({"param_bits":1,"rand_bits":3,"out_bits":2,
    "gates":[{"op":"AND","in":[1,2]}],"outputs":[4,3]})");
  // outputs: (r0 AND r1, r2): probabilities {00:3/8,01:3/8,10:1/8,11:1/8}.
  const Distribution d = fam->dist(BitString::parse("0"));
  CHECK(d.prob_value(2) == Rational(1, 8));

  const SmoothedFamilyResult sm = smooth_family(fam, 1);
  CHECK(sm.min_prob_exponent == 3);
  const double c_exact = (std::exp2(-0.5) - 0.5) * std::exp2(-2.0);
  const double c_used = rat_to_double(sm.mix_weight);
  CHECK(c_used <= c_exact);
  CHECK(c_exact - c_used <= std::exp2(-32.0) + 1e-15);
  CHECK(c_used == doctest::Approx(0.051777).epsilon(1e-4));

  // Full support with the promised floor.
  const Rational floor_mass = sm.mix_weight * pow2_rat(-2);
  for (std::uint32_t z = 0; z < 2; ++z) {
    const Distribution smoothed = sm.family->dist(BitString(z, 1));
    for (std::uint32_t v = 0; v < 4; ++v)
      CHECK(smoothed.prob_value(v) >= floor_mass);
  }
}

TEST_CASE("smoothing a uniform family changes nothing") {
  const auto fam = uniform_family(1, 2);
  const SmoothedFamilyResult sm = smooth_family(fam, 3);
  for (std::uint32_t z = 0; z < 2; ++z)
    CHECK(sm.family->dist(BitString(z, 1)) == fam->dist(BitString(z, 1)));
}

TEST_CASE("smoothing ratio chain bound, exhaustive") {
  // If the smoothed ratio is <= 2^{1/(2 eps)}, the original family's ratio
  // is <= 2^{1/eps}; checked for every (x, h) over small fixtures.
  for (long eps : {1L, 2L}) {
    const auto fam = biased_family(2);
    const SmoothedFamilyResult sm = smooth_family(fam, eps);
    for (std::uint32_t xv = 0; xv < 4; ++xv)
      for (std::uint32_t hv = 0; hv < 4; ++hv) {
        const BitString x(xv, 2), h(hv, 2);
        const MlRatio smoothed = ml_ratio(*sm.family, x, h);
        REQUIRE_FALSE(smoothed.infinite);
        if (leq_pow2(smoothed.value, 1, 2 * eps)) {
          const MlRatio orig = ml_ratio(*fam, x, h);
          REQUIRE_FALSE(orig.infinite);
          CHECK(leq_pow2(orig.value, 1, eps));
        }
      }
  }
}

TEST_CASE("repeat_family: default t and product structure") {
  CHECK(repeat_default_t(1, 1, 1, 1) == 2000);
  const auto id = identity_family();  // min prob exponent 1
  const RepeatedFamily rep = repeat_family(id, 1, 1);
  CHECK(rep.t == 2000);
  CHECK(rep.as_family == nullptr);  // 2000 coordinates exceed the tuple cap

  const SampleSet tuple = rep.draw_tuple(BitString::parse("1"), 4);
  CHECK(tuple.t() == 2000);
  CHECK(rep.tuple_likelihood(BitString::parse("1"), tuple) == 1);
  CHECK(rep.tuple_mle(tuple).argmax_z == BitString::parse("1"));

  // Explicit small tuple family: likelihoods are coordinate products and
  // the tuple distribution is the tensor power.
  const auto biased = biased_bit_family();
  const FamilyPtr tf = tuple_family(biased, 3);
  const BitString z = BitString::parse("0");
  CHECK(tf->dist(z) == tensor_power(biased->dist(z), 3));
  CHECK(tf->prob(z, BitString::parse("010")) ==
        biased->prob(z, BitString::parse("0")) *
            biased->prob(z, BitString::parse("1")) *
            biased->prob(z, BitString::parse("0")));
  // MLE over tuples == MLE over the flattened sample multiset.
  SampleSet flat;
  flat.samples = {BitString::parse("0"), BitString::parse("1"),
                  BitString::parse("0")};
  SampleSet as_tuple;
  as_tuple.samples = {BitString::parse("010")};
  CHECK(eval_mle(*tf, as_tuple).argmax_z == eval_mle(*biased, flat).argmax_z);
}

TEST_CASE("generator instance: marginals and the statistically far advice") {
  const PrgSpec prg = parity_prg();
  const PrgInstance pi = prg_learning_instance(prg);
  pi.inst.validate();

  // b=1 branch: xi uniform, mu echoed.
  const Distribution d1 = pi.inst.family->dist(pi.encode_param(2, 1));
  CHECK(d1.probs().size() == 16);
  for (const auto& [v, p] : d1.probs()) {
    CHECK(p == Rational(1, 16));
    CHECK((v & 3u) == 2u);  // echoed advice
  }

  // Advice 0 is statistically far: SD(D((0,0)), D((0,1))) = 1/2.
  CHECK(statistical_distance(pi.inst.family->dist(pi.encode_param(0, 0)),
                             pi.inst.family->dist(pi.encode_param(0, 1))) ==
        Rational(1, 2));
  // Other advice values collapse the two branches.
  CHECK(statistical_distance(pi.inst.family->dist(pi.encode_param(1, 0)),
                             pi.inst.family->dist(pi.encode_param(1, 1))) == 0);
}

TEST_CASE("constant generator gives point masses") {
  // Gen outputs 11 always (advice ignored): D((mu,0)) is a point mass.
  const PrgSpec prg = prg_from_json(R"({"role":"prg","n":2,
    "param_bits":1,"rand_bits":1,"out_bits":2,
    "gates":[{"op":"NOT","in":[1]},{"op":"AND","in":[1,2]},
             {"op":"NOT","in":[3]}],
    "outputs":[4,4]})");
  const PrgInstance pi = prg_learning_instance(prg);
  const Distribution d = pi.inst.family->dist(pi.encode_param(1, 0));
  CHECK(d.probs().size() == 1);
  CHECK(d.prob(BitString::parse("111")) == 1);  // (xi=11, mu=1)
}

TEST_CASE("check_mu on constant learners") {
  const PrgInstance pi = prg_learning_instance(parity_prg());
  const LearnerFn always1 = constant_learner(pi.encode_param(0, 1));
  const LearnerFn always0 = constant_learner(pi.encode_param(0, 0));
  CHECK(check_mu(always1, pi, 0, 8, 5));
  CHECK_FALSE(check_mu(always0, pi, 0, 8, 5));
}

TEST_CASE("breaker on constant learner never distinguishes") {
  const PrgInstance pi = prg_learning_instance(parity_prg());
  const LearnerFn always1 = constant_learner(pi.encode_param(0, 1));
  std::vector<BitString> xis(16, BitString::parse("0000"));
  CHECK(prg_breaker(always1, pi, xis, 4, 9) == 1);
}

TEST_CASE("breaker separates the parity generator with the MLE learner") {
  const BreakerAdvantage adv =
      breaker_advantage(parity_prg(), mle_learner(), 60, 16, 16, 31337);
  CHECK(adv.mu_star == 0);
  CHECK(adv.advantage >= 0.9);
  CHECK(adv.p1_uniform >= 0.95);
  CHECK(adv.p1_gen <= 0.05);
}
