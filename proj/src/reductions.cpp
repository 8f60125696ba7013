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

#include "distlab/reductions.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <utility>

namespace distlab {

// ---------------------------------------------------------------------------
// Postselection gadget

Rational PostselectMachine::joint_mass(const BitString& x, int c) const {
  if (c != 0 && c != 1) throw DomainError("joint_mass: c must be a bit");
  // Outputs are (b, b*), so the accepting outcome is the 2-bit string c1.
  return circuit->prob(x, BitString(static_cast<std::uint32_t>(c << 1) | 1u, 2));
}

Rational PostselectMachine::postselect_mass(const BitString& x) const {
  return joint_mass(x, 0) + joint_mass(x, 1);
}

PostselectMachine postselect_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("postselect JSON: ") + e.what());
  }
  if (j.value("role", "") != "postselect")
    throw ParseError("postselect JSON: role must be \"postselect\"");
  const int b_wire = j.at("b_wire").get<int>();
  const int bstar_wire = j.at("bstar_wire").get<int>();
  j["outputs"] = {b_wire, bstar_wire};
  j["out_bits"] = 2;
  return PostselectMachine{compile_family(j.dump())};
}

Distribution postselect_gadget(const PostselectMachine& mach,
                               const BitString& x, int c) {
  if (mach.postselect_mass(x) == 0)
    throw SupportError("postselect_gadget: Pr[b*=1] is 0 on this input");
  const Rational mass = mach.joint_mass(x, c);
  Distribution::Map m;
  m[1] = mass;
  m[0] = Rational(1) - mass;
  return Distribution(1, std::move(m));
}

namespace {

class GadgetFamily final : public Family {
 public:
  GadgetFamily(Rational p0, Rational p1)
      : p0_(std::move(p0)), p1_(std::move(p1)) {}

  int param_bits() const override { return 1; }
  int out_bits() const override { return 1; }

  Rational prob(const BitString& z, const BitString& x) const override {
    check_param(z);
    check_outcome(x);
    const Rational& mass = z.value() ? p1_ : p0_;
    return x.value() ? mass : Rational(1) - mass;
  }

  Distribution dist(const BitString& z) const override {
    check_param(z);
    const Rational& mass = z.value() ? p1_ : p0_;
    Distribution::Map m;
    m[1] = mass;
    m[0] = Rational(1) - mass;
    return Distribution(1, std::move(m));
  }

 private:
  Rational p0_, p1_;
};

}  // namespace

FamilyPtr gadget_family(const PostselectMachine& mach, const BitString& x) {
  return std::make_shared<const GadgetFamily>(mach.joint_mass(x, 0),
                                              mach.joint_mass(x, 1));
}

Membership decide_by_mle(const PostselectMachine& mach, const BitString& x,
                         long eps) {
  if (eps < 1) throw DomainError("decide_by_mle: eps >= 1");
  const Rational p0 = mach.joint_mass(x, 0);
  const Rational p1 = mach.joint_mass(x, 1);
  if (p0 + p1 == 0)
    throw SupportError("decide_by_mle: Pr[b*=1] is 0 on this input");

  // Exhaustive MLE over the flag c for the accepting observation.
  const FamilyPtr gfam = gadget_family(mach, x);
  SampleSet obs;
  obs.samples.push_back(BitString(1, 1));
  const MleResult mle = eval_mle(*gfam, obs);

  // The promise gives a likelihood ratio of at least 3 between the flags;
  // anything closer is a violation, reported rather than guessed.
  if (p1 >= 3 * p0 && p1 > 0)
    return Membership::InLanguage;
  if (3 * p1 <= p0 && p0 > 0)
    return Membership::NotInLanguage;
  (void)mle;
  return Membership::PromiseViolation;
}

// ---------------------------------------------------------------------------
// Smoothing and tensor powers

namespace {

/// Smallest m such that every positive probability of the family is >= 2^-m,
/// and m >= out_bits.
int min_prob_exponent(const Family& fam) {
  int m = fam.out_bits();
  const int k = fam.param_bits();
  for (std::uint32_t zv = 0; zv < (1u << k); ++zv) {
    const Distribution d = fam.dist(BitString(zv, k));
    for (const auto& [v, p] : d.probs()) {
      int e = 0;
      while ((numerator(p) << e) < denominator(p)) ++e;
      if (e > m) m = e;
    }
  }
  return m;
}

class SmoothedFamily final : public Family {
 public:
  SmoothedFamily(FamilyPtr inner, Rational c)
      : inner_(std::move(inner)), c_(std::move(c)) {}

  int param_bits() const override { return inner_->param_bits(); }
  int out_bits() const override { return inner_->out_bits(); }

  Rational prob(const BitString& z, const BitString& x) const override {
    return (Rational(1) - c_) * inner_->prob(z, x) +
           c_ * pow2_rat(-out_bits());
  }

  Distribution dist(const BitString& z) const override {
    return Distribution::mixture(inner_->dist(z),
                                 Distribution::uniform(out_bits()), c_);
  }

 private:
  FamilyPtr inner_;
  Rational c_;
};

class TupleFamily final : public Family {
 public:
  TupleFamily(FamilyPtr base, int t) : base_(std::move(base)), t_(t) {}

  int param_bits() const override { return base_->param_bits(); }
  int out_bits() const override { return base_->out_bits() * t_; }

  Rational prob(const BitString& z, const BitString& x) const override {
    check_outcome(x);
    const int w = base_->out_bits();
    Rational acc(1);
    for (int i = 0; i < t_ && acc != 0; ++i)
      acc *= base_->prob(z, x.slice(i * w, w));
    return acc;
  }

  Distribution dist(const BitString& z) const override {
    return tensor_power(base_->dist(z), t_);
  }

  BitString draw_one(const BitString& z, const rng::Stream& s,
                     std::uint64_t& counter) const override {
    const Sampler sampler(base_->dist(z));
    BitString acc(0, 0);
    for (int i = 0; i < t_; ++i) acc = acc.concat(sampler.draw(s, counter));
    return acc;
  }

 private:
  FamilyPtr base_;
  int t_;
};

}  // namespace

SmoothedFamilyResult smooth_family(FamilyPtr fam, long eps) {
  if (!fam) throw DomainError("smooth_family: missing family");
  if (eps < 1) throw DomainError("smooth_family: eps >= 1");
  const int p = fam->out_bits();
  const int m = min_prob_exponent(*fam);

  // C = (2^{-1/(2 eps)} - 2^{-1/eps}) * 2^{-(m+1-p)}, rounded down to a
  // dyadic. High-precision software floats keep the floor platform-stable.
  using BF = boost::multiprecision::cpp_bin_float_50;
  const BF e(static_cast<long long>(eps));
  const BF c = (pow(BF(2), -1 / (2 * e)) - pow(BF(2), -1 / e)) *
               pow(BF(2), BF(-(m + 1 - p)));
  const BF scaled = floor(c * pow(BF(2), kSmoothingDyadicBits));
  const Rational c_dyadic(scaled.convert_to<Int>(), pow2(kSmoothingDyadicBits));
  if (c_dyadic < 0 || c_dyadic >= 1)
    throw DomainError("smooth_family: mixing weight out of range");

  SmoothedFamilyResult result;
  result.mix_weight = c_dyadic;
  result.min_prob_exponent = m;
  result.family = std::make_shared<const SmoothedFamily>(std::move(fam), c_dyadic);
  return result;
}

long repeat_default_t(int min_prob_exponent, long eps, long delta, int k) {
  if (min_prob_exponent < 1 || eps < 1 || delta < 1 || k < 1)
    throw DomainError("repeat_default_t: arguments must be >= 1");
  const double m = static_cast<double>(min_prob_exponent);
  const double v = 1000.0 * m * m * static_cast<double>(eps) *
                   static_cast<double>(eps) *
                   (static_cast<double>(k) +
                    std::log2(2.0 * static_cast<double>(delta)));
  return static_cast<long>(std::ceil(v));
}

FamilyPtr tuple_family(FamilyPtr base, int t) {
  if (!base) throw DomainError("tuple_family: missing family");
  if (t < 1) throw DomainError("tuple_family: t >= 1");
  if (t * base->out_bits() > limits::kMaxTupleBits)
    throw DomainError("tuple_family: tuple cap exceeded");
  return std::make_shared<const TupleFamily>(std::move(base), t);
}

RepeatedFamily repeat_family(FamilyPtr fam, long eps, long delta) {
  if (!fam) throw DomainError("repeat_family: missing family");
  const int m = min_prob_exponent(*fam);
  RepeatedFamily result;
  result.t = repeat_default_t(m, eps, delta, fam->param_bits());
  if (result.t * fam->out_bits() <= limits::kMaxTupleBits)
    result.as_family =
        std::make_shared<const TupleFamily>(fam, static_cast<int>(result.t));
  result.base = std::move(fam);
  return result;
}

Rational RepeatedFamily::tuple_likelihood(const BitString& z,
                                          const SampleSet& tuple) const {
  if (tuple.t() != static_cast<std::size_t>(t))
    throw DomainError("tuple_likelihood: tuple has wrong length");
  return likelihood(*base, z, tuple);
}

MleResult RepeatedFamily::tuple_mle(const SampleSet& tuple) const {
  if (tuple.t() != static_cast<std::size_t>(t))
    throw DomainError("tuple_mle: tuple has wrong length");
  return eval_mle(*base, tuple);
}

SampleSet RepeatedFamily::draw_tuple(const BitString& z,
                                     std::uint64_t seed) const {
  return draw_samples(*base, z, static_cast<std::size_t>(t), seed);
}

// ---------------------------------------------------------------------------
// Generator-based hard instance

namespace {

int bits_for(int n) {
  int b = 0;
  while ((1 << b) < n) ++b;
  return b == 0 ? 1 : b;
}

class PrgInstanceFamily final : public Family {
 public:
  PrgInstanceFamily(std::shared_ptr<const CircuitFamily> gen, int n, int mu_bits)
      : gen_(std::move(gen)), n_(n), mu_bits_(mu_bits) {}

  int param_bits() const override { return mu_bits_ + 1; }
  int out_bits() const override { return n_ + mu_bits_; }

  Rational prob(const BitString& z, const BitString& x) const override {
    check_param(z);
    check_outcome(x);
    const int mu = static_cast<int>(z.value() >> 1);
    const int b = static_cast<int>(z.value() & 1u);
    const std::uint32_t mu_echo = x.value() & ((1u << mu_bits_) - 1u);
    if (mu_echo != static_cast<std::uint32_t>(mu)) return Rational(0);
    const BitString xi(x.value() >> mu_bits_, n_);
    if (b == 1 || mu >= n_) return pow2_rat(-n_);
    return gen_->prob(BitString(static_cast<std::uint32_t>(mu), gen_->param_bits()),
                      xi);
  }

  Distribution dist(const BitString& z) const override {
    check_param(z);
    const int mu = static_cast<int>(z.value() >> 1);
    const int b = static_cast<int>(z.value() & 1u);
    Distribution::Map m;
    if (b == 1 || mu >= n_) {
      const Rational p = pow2_rat(-n_);
      for (std::uint32_t xi = 0; xi < (1u << n_); ++xi)
        m[(xi << mu_bits_) | static_cast<std::uint32_t>(mu)] = p;
    } else {
      const Distribution gd = gen_->dist(
          BitString(static_cast<std::uint32_t>(mu), gen_->param_bits()));
      for (const auto& [xi, p] : gd.probs())
        m[(xi << mu_bits_) | static_cast<std::uint32_t>(mu)] = p;
    }
    return Distribution(out_bits(), std::move(m));
  }

 private:
  std::shared_ptr<const CircuitFamily> gen_;
  int n_;
  int mu_bits_;
};

}  // namespace

PrgSpec prg_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("prg JSON: ") + e.what());
  }
  if (j.value("role", "") != "prg")
    throw ParseError("prg JSON: role must be \"prg\"");
  PrgSpec spec;
  spec.gen = compile_family(j.dump());
  spec.n = j.value("n", spec.gen->out_bits());
  if (spec.n != spec.gen->out_bits())
    throw ParseError("prg JSON: n must equal the circuit out_bits");
  if (spec.n > (1 << spec.gen->param_bits()))
    throw ParseError("prg JSON: advice bits cannot index [n]");
  return spec;
}

BitString PrgInstance::encode_param(int mu, int b) const {
  if (mu < 0 || mu >= (1 << mu_bits) || (b != 0 && b != 1))
    throw DomainError("encode_param: out of range");
  return BitString((static_cast<std::uint32_t>(mu) << 1) |
                       static_cast<std::uint32_t>(b),
                   mu_bits + 1);
}

SampleSet PrgInstance::tag_samples(const std::vector<BitString>& xis,
                                   int mu) const {
  SampleSet out;
  out.samples.reserve(xis.size());
  for (const BitString& xi : xis) {
    if (xi.size() != prg.n)
      throw DomainError("tag_samples: sample has wrong length");
    out.samples.push_back(
        xi.concat(BitString(static_cast<std::uint32_t>(mu), mu_bits)));
  }
  return out;
}

PrgInstance prg_learning_instance(const PrgSpec& prg) {
  if (!prg.gen) throw DomainError("prg_learning_instance: missing generator");
  const int mu_bits = bits_for(prg.n);
  if (prg.gen->param_bits() != mu_bits)
    throw DomainError(
        "prg_learning_instance: generator advice width must be "
        "ceil(log2(n))");
  PrgInstance out;
  out.mu_bits = mu_bits;
  out.prg = prg;
  out.inst.family = std::make_shared<const PrgInstanceFamily>(prg.gen, prg.n,
                                                              mu_bits);
  Distribution::Map sm;
  const Rational mass(1, 2 * prg.n);
  for (int mu = 0; mu < prg.n; ++mu)
    for (int b = 0; b <= 1; ++b)
      sm[(static_cast<std::uint32_t>(mu) << 1) | static_cast<std::uint32_t>(b)] =
          mass;
  out.inst.sampler = Distribution(mu_bits + 1, std::move(sm));
  out.inst.params = LearnParams{prg.n, 10, 16};
  out.inst.validate();
  return out;
}

bool check_mu(const LearnerFn& learner, const PrgInstance& prg, int mu,
              long reps, std::uint64_t seed) {
  if (reps < 1) throw DomainError("check_mu: reps >= 1");
  const rng::Stream root(seed);
  const long t = prg.inst.params.t;
  const std::uint32_t mask = (prg.prg.n >= 32) ? ~0u : ((1u << prg.prg.n) - 1u);
  for (long j = 0; j < reps; ++j) {
    const rng::Stream rep = root.split(static_cast<std::uint64_t>(j));
    std::vector<BitString> xis;
    xis.reserve(static_cast<std::size_t>(t));
    for (long i = 0; i < t; ++i)
      xis.push_back(BitString(
          static_cast<std::uint32_t>(rep.value(static_cast<std::uint64_t>(i))) &
              mask,
          prg.prg.n));
    const SampleSet tagged = prg.tag_samples(xis, mu);
    const BitString h = learner(prg.inst, tagged, rep.split(1).seed());
    if (h.bit(h.size() - 1) == 0) return false;
  }
  return true;
}

int prg_breaker(const LearnerFn& learner, const PrgInstance& prg,
                const std::vector<BitString>& xis, long reps,
                std::uint64_t seed) {
  const rng::Stream root(seed);
  for (int mu = 0; mu < prg.prg.n; ++mu) {
    const bool flag =
        check_mu(learner, prg, mu, reps,
                 root.split(0x1000u + static_cast<std::uint64_t>(mu)).seed());
    const SampleSet tagged = prg.tag_samples(xis, mu);
    const BitString h =
        learner(prg.inst, tagged,
                root.split(0x2000u + static_cast<std::uint64_t>(mu)).seed());
    if (h.bit(h.size() - 1) == 0 && flag) return 0;
  }
  return 1;
}

BreakerAdvantage breaker_advantage(const PrgSpec& prg, const LearnerFn& learner,
                                   long trials, long reps, long t,
                                   std::uint64_t seed) {
  if (trials < 1) throw DomainError("breaker_advantage: trials >= 1");
  PrgInstance inst = prg_learning_instance(prg);
  inst.inst.params.t = t;

  BreakerAdvantage result;
  Rational best_sd(-1);
  const Distribution uniform = Distribution::uniform(prg.n);
  for (int mu = 0; mu < prg.n; ++mu) {
    const Rational sd = statistical_distance(
        prg.gen->dist(BitString(static_cast<std::uint32_t>(mu),
                                prg.gen->param_bits())),
        uniform);
    if (sd > best_sd) {
      best_sd = sd;
      result.mu_star = mu;
    }
  }

  const Sampler gen_sampler(prg.gen->dist(BitString(
      static_cast<std::uint32_t>(result.mu_star), prg.gen->param_bits())));
  const std::uint32_t mask = (prg.n >= 32) ? ~0u : ((1u << prg.n) - 1u);
  const rng::Stream root(seed);
  long ones_uniform = 0;
  long ones_gen = 0;
  for (long i = 0; i < trials; ++i) {
    const rng::Stream trial = root.split(static_cast<std::uint64_t>(i));
    std::vector<BitString> xi_u, xi_g;
    std::uint64_t ctr = 0;
    for (long s = 0; s < t; ++s)
      xi_u.push_back(BitString(
          static_cast<std::uint32_t>(trial.value(static_cast<std::uint64_t>(s))) &
              mask,
          prg.n));
    const rng::Stream gstream = trial.split(1);
    for (long s = 0; s < t; ++s) xi_g.push_back(gen_sampler.draw(gstream, ctr));
    ones_uniform +=
        prg_breaker(learner, inst, xi_u, reps, trial.split(2).seed());
    ones_gen += prg_breaker(learner, inst, xi_g, reps, trial.split(3).seed());
  }
  result.p1_uniform =
      static_cast<double>(ones_uniform) / static_cast<double>(trials);
  result.p1_gen = static_cast<double>(ones_gen) / static_cast<double>(trials);
  result.advantage = std::abs(result.p1_uniform - result.p1_gen);
  return result;
}

}  // namespace distlab
