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

#include "distlab/learner.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace distlab {

namespace {

bool dis_compare(const Rational& el, const Rational& em, long eps) {
  // E_l >= (1 + 1/(16 eps)) E_m, cleared of the fraction.
  return el * Rational(16 * eps) >= em * Rational(16 * eps + 1);
}

}  // namespace

int dis(const Estimator& est, const BitString& l, const BitString& m,
        const BitString& x, long eps, std::uint64_t query_ctr) {
  if (eps < 1) throw DomainError("dis: eps must be >= 1");
  const EstimateResult el = est.estimate(l, x, query_ctr);
  const EstimateResult em = est.estimate(m, x, query_ctr + 1);
  return dis_compare(el.value, em.value, eps) ? 1 : 0;
}

int dis_deterministic(const Distribution& dl, const Distribution& dm,
                      std::uint32_t x_value, long eps) {
  return dis_compare(dl.prob_value(x_value), dm.prob_value(x_value), eps) ? 1 : 0;
}

Rational empirical_gap(const Estimator& est, const BitString& a,
                       const BitString& b, const SampleSet& target_samples,
                       std::uint64_t fresh_seed, long eps) {
  const std::size_t t = target_samples.t();
  if (t == 0) throw DomainError("empirical_gap: empty sample set");
  const rng::Stream fresh(fresh_seed);
  const Sampler sampler_a(est.table().dist(a));
  long c_target = 0;
  long c_fresh = 0;
  for (std::size_t i = 0; i < t; ++i) {
    c_target += dis(est, a, b, target_samples.samples[i], eps, 4 * i);
    const BitString xi = sampler_a.map(fresh.value(i));
    c_fresh += dis(est, a, b, xi, eps, 4 * i + 2);
  }
  return Rational(std::abs(c_target - c_fresh), static_cast<long>(t));
}

bool sigma3_query(const Estimator& est, const BitString& prefix,
                  const Rational& omega, const SampleSet& target_samples,
                  std::uint64_t fresh_seed, long eps) {
  if (omega < 0) return false;
  if (omega >= 1) return true;  // a gap never exceeds 1
  const int k = est.family().param_bits();
  const int suffix_bits = k - prefix.size();
  if (suffix_bits < 0) throw DomainError("sigma3_query: prefix longer than k");
  for (std::uint32_t s = 0; s < (1u << suffix_bits); ++s) {
    const BitString a = prefix.concat(BitString(s, suffix_bits));
    bool all = true;
    for (std::uint32_t bv = 0; bv < (1u << k) && all; ++bv)
      all = empirical_gap(est, a, BitString(bv, k), target_samples, fresh_seed,
                          eps) <= omega;
    if (all) return true;
  }
  return false;
}

long learn_default_t(long k, long eps, long delta) {
  if (k < 1 || eps < 1 || delta < 1)
    throw DomainError("learn_default_t: arguments must be >= 1");
  const double v = 100.0 * static_cast<double>(k) * static_cast<double>(k) *
                   static_cast<double>(eps) * static_cast<double>(eps) *
                   (static_cast<double>(k) + std::log2(static_cast<double>(delta)));
  return static_cast<long>(std::ceil(v));
}

namespace {

// Precomputed |mean dis on target - mean dis on fresh| * t for every ordered
// (a, b). One batch of coins serves the entire table: sample i uses
// estimator counters 4i/4i+1 (target) and 4i+2/4i+3 (fresh), and the i-th
// fresh variate is shared by every a.
struct GapTable {
  int k = 0;
  long t = 0;
  std::vector<std::vector<std::uint32_t>> gap_num;  // |c1 - c2|, <= t

  bool gap_leq(std::uint32_t a, std::uint32_t b, const Rational& omega) const {
    return Int(gap_num[a][b]) * denominator(omega) <= numerator(omega) * t;
  }
};

struct U64Probs {
  bool ok = false;
  std::vector<std::vector<std::uint64_t>> pn;  // [z][outcome], common denom
};

// Scales every probability onto one common denominator if everything stays
// within u64 range (true for every circuit family).
U64Probs scale_probs(const std::vector<const Distribution*>& dists,
                     int out_bits) {
  U64Probs result;
  Int common(1);
  for (const auto* d : dists)
    for (const auto& [v, p] : d->probs())
      common = lcm(common, denominator(p));
  if (common > Int(1) << 40) return result;
  result.pn.assign(dists.size(),
                   std::vector<std::uint64_t>(1u << out_bits, 0));
  for (std::size_t z = 0; z < dists.size(); ++z)
    for (const auto& [v, p] : dists[z]->probs()) {
      const Int scaled = numerator(p) * (common / denominator(p));
      if (scaled > Int(1) << 40) return result;
      result.pn[z][v] = scaled.convert_to<std::uint64_t>();
    }
  result.ok = true;
  return result;
}

GapTable build_gap_table(const FamilyTable& table, const Estimator& est,
                         const SampleSet& target, std::uint64_t fresh_seed,
                         long eps) {
  const int k = table.family().param_bits();
  const int m = table.family().out_bits();
  const std::uint32_t nz = 1u << k;
  const long t = static_cast<long>(target.t());
  if (t == 0) throw DomainError("learner: empty sample set");

  std::vector<const Distribution*> dists(nz);
  for (std::uint32_t z = 0; z < nz; ++z) dists[z] = &table.dist(BitString(z, k));

  std::vector<std::uint32_t> xs(static_cast<std::size_t>(t));
  for (long i = 0; i < t; ++i) {
    table.family().check_outcome(target.samples[static_cast<std::size_t>(i)]);
    xs[static_cast<std::size_t>(i)] =
        target.samples[static_cast<std::size_t>(i)].value();
  }

  // Shared fresh variates and per-parameter draws.
  const rng::Stream fresh(fresh_seed);
  std::vector<std::uint64_t> variates(static_cast<std::size_t>(t));
  for (long i = 0; i < t; ++i)
    variates[static_cast<std::size_t>(i)] = fresh.value(static_cast<std::uint64_t>(i));
  std::vector<std::vector<std::uint32_t>> draws(
      nz, std::vector<std::uint32_t>(static_cast<std::size_t>(t)));
  for (std::uint32_t z = 0; z < nz; ++z) {
    const Sampler s(*dists[z]);
    for (long i = 0; i < t; ++i)
      draws[z][static_cast<std::size_t>(i)] =
          s.map(variates[static_cast<std::size_t>(i)]).value();
  }

  // Noise factors per sample index and slot.
  std::vector<Estimator::NoiseFactor> f1(static_cast<std::size_t>(t)),
      f2(static_cast<std::size_t>(t)), f3(static_cast<std::size_t>(t)),
      f4(static_cast<std::size_t>(t));
  for (long i = 0; i < t; ++i) {
    const std::uint64_t base = 4 * static_cast<std::uint64_t>(i);
    f1[static_cast<std::size_t>(i)] = est.noise_factor(base);
    f2[static_cast<std::size_t>(i)] = est.noise_factor(base + 1);
    f3[static_cast<std::size_t>(i)] = est.noise_factor(base + 2);
    f4[static_cast<std::size_t>(i)] = est.noise_factor(base + 3);
  }

  GapTable g;
  g.k = k;
  g.t = t;
  g.gap_num.assign(nz, std::vector<std::uint32_t>(nz, 0));

  const U64Probs scaled = scale_probs(dists, m);
  if (scaled.ok) {
    // Integer path: denominators agree across both sides of the dis
    // comparison and cancel.
    using u128 = unsigned __int128;
    const u128 w16 = static_cast<u128>(16 * eps);
    const u128 w17 = static_cast<u128>(16 * eps + 1);
    std::vector<u128> lhs_t(static_cast<std::size_t>(t)),
        lhs_f(static_cast<std::size_t>(t));
    for (std::uint32_t a = 0; a < nz; ++a) {
      const auto& pa = scaled.pn[a];
      for (long i = 0; i < t; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        lhs_t[ii] = static_cast<u128>(pa[xs[ii]]) * f1[ii].num * w16;
        lhs_f[ii] = static_cast<u128>(pa[draws[a][ii]]) * f3[ii].num * w16;
      }
      for (std::uint32_t b = 0; b < nz; ++b) {
        const auto& pb = scaled.pn[b];
        long c1 = 0, c2 = 0;
        for (long i = 0; i < t; ++i) {
          const auto ii = static_cast<std::size_t>(i);
          if (lhs_t[ii] >= static_cast<u128>(pb[xs[ii]]) * f2[ii].num * w17) ++c1;
          if (lhs_f[ii] >= static_cast<u128>(pb[draws[a][ii]]) * f4[ii].num * w17)
            ++c2;
        }
        g.gap_num[a][b] = static_cast<std::uint32_t>(std::abs(c1 - c2));
      }
    }
    return g;
  }

  // Generic path: exact rationals throughout.
  const auto factor = [](const Estimator::NoiseFactor& f) {
    return f.failed ? Rational(0) : Rational(Int(f.num), Int(f.den));
  };
  for (std::uint32_t a = 0; a < nz; ++a) {
    for (std::uint32_t b = 0; b < nz; ++b) {
      long c1 = 0, c2 = 0;
      for (long i = 0; i < t; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        const Rational elt = dists[a]->prob_value(xs[ii]) * factor(f1[ii]);
        const Rational emt = dists[b]->prob_value(xs[ii]) * factor(f2[ii]);
        if (dis_compare(elt, emt, eps)) ++c1;
        const Rational elf = dists[a]->prob_value(draws[a][ii]) * factor(f3[ii]);
        const Rational emf = dists[b]->prob_value(draws[a][ii]) * factor(f4[ii]);
        if (dis_compare(elf, emf, eps)) ++c2;
      }
      g.gap_num[a][b] = static_cast<std::uint32_t>(std::abs(c1 - c2));
    }
  }
  return g;
}

bool sigma3_on_table(const GapTable& g, std::uint32_t prefix_value,
                     int prefix_len, const Rational& omega) {
  if (omega < 0) return false;
  const int suffix_bits = g.k - prefix_len;
  const std::uint32_t nz = 1u << g.k;
  for (std::uint32_t s = 0; s < (1u << suffix_bits); ++s) {
    const std::uint32_t a = (prefix_value << suffix_bits) | s;
    bool all = true;
    for (std::uint32_t b = 0; b < nz && all; ++b) all = g.gap_leq(a, b, omega);
    if (all) return true;
  }
  return false;
}

Estimator make_dis_estimator(FamilyPtr fam, long eps, std::uint64_t seed,
                             const LearnOptions& opts) {
  if (opts.mode == LearnOptions::Mode::Exact)
    return Estimator::exact(std::move(fam));
  const long precision = opts.dis_precision_factor * eps;
  return Estimator::noisy(std::move(fam), precision, precision, seed);
}

}  // namespace

BitString learn_sd_hypothesis(FamilyPtr fam, const SampleSet& t_samples,
                              long eps, long delta, std::uint64_t seed,
                              const LearnOptions& opts) {
  if (!fam) throw DomainError("learner: missing family");
  if (eps < 1 || delta < 1) throw DomainError("learner: eps, delta >= 1");
  const int k = fam->param_bits();
  if (k < 1) throw DomainError("learner: family has no parameters");
  const rng::Stream root(seed);
  const Estimator est =
      make_dis_estimator(fam, eps, root.split(1).seed(), opts);
  const FamilyTable table(fam);
  const GapTable g =
      build_gap_table(table, est, t_samples, root.split(2).seed(), eps);

  BitString out(0, 0);
  for (int index = 1; index <= k; ++index) {
    int decided = -1;
    Rational p(1, 2);
    for (int j = 1; j <= k; ++j) {
      const bool q0 = sigma3_on_table(g, out.value() << 1, index, p);
      const bool q1 = sigma3_on_table(g, (out.value() << 1) | 1u, index, p);
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
  return out;
}

namespace {

Distribution empirical_distribution(const SampleSet& samples, int support_len) {
  Distribution::Map m;
  const Rational unit(1, static_cast<long>(samples.t()));
  for (const BitString& x : samples.samples) {
    if (x.size() != support_len)
      throw DomainError("samples do not match the family outcome length");
    m[x.value()] += unit;
  }
  return Distribution(support_len, std::move(m));
}

}  // namespace

LearnReport learn_sd_agnostic(FamilyPtr fam, const SampleSet& t_samples,
                              long eps, long delta, std::uint64_t seed,
                              const std::optional<Distribution>& target,
                              const LearnOptions& opts) {
  const BitString h =
      learn_sd_hypothesis(fam, t_samples, eps, delta, seed, opts);
  const Distribution ref =
      target ? *target : empirical_distribution(t_samples, fam->out_bits());
  if (ref.support_len() != fam->out_bits())
    throw DomainError("target support length != family out_bits");

  LearnReport report;
  report.hypothesis = h;
  report.achieved_sd = statistical_distance(ref, fam->dist(h));
  const int k = fam->param_bits();
  bool first = true;
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    const Rational sd = statistical_distance(ref, fam->dist(BitString(a, k)));
    if (first || sd < report.opt) report.opt = sd;
    first = false;
  }
  report.bound = Rational(3 * eps + 1, eps) * report.opt + Rational(1, eps);
  report.within_bound = report.achieved_sd <= report.bound;
  return report;
}

OracleModeResult learn_sd_oracle_mode(FamilyPtr fam,
                                      const Distribution& target, long eps) {
  if (!fam) throw DomainError("learner: missing family");
  if (eps < 1) throw DomainError("learner: eps >= 1");
  const int k = fam->param_bits();
  const std::uint32_t nz = 1u << k;
  const FamilyTable table(fam);

  Rational opt;
  bool first = true;
  for (std::uint32_t a = 0; a < nz; ++a) {
    const Rational sd = statistical_distance(target, table.dist(BitString(a, k)));
    if (first || sd < opt) opt = sd;
    first = false;
  }

  std::vector<std::vector<Rational>> gap(nz, std::vector<Rational>(nz));
  for (std::uint32_t a = 0; a < nz; ++a)
    for (std::uint32_t b = 0; b < nz; ++b)
      gap[a][b] = true_gap(table, target, BitString(a, k), BitString(b, k), eps);

  OracleModeResult result;
  std::uint32_t out = 0;
  for (int index = 1; index <= k; ++index) {
    const Rational thresh = opt + Rational(4 * index - 3, 8 * k * eps);
    const int suffix_bits = k - index;
    bool found = false;
    const std::uint32_t candidate = (out << 1) | 1u;
    for (std::uint32_t s = 0; s < (1u << suffix_bits) && !found; ++s) {
      const std::uint32_t a = (candidate << suffix_bits) | s;
      bool all = true;
      for (std::uint32_t b = 0; b < nz && all; ++b) all = gap[a][b] <= thresh;
      found = all;
    }
    out = (out << 1) | (found ? 1u : 0u);
    result.stage_prefixes.push_back(BitString(out, index));
  }
  result.hypothesis = BitString(out, k);
  return result;
}

Rational true_gap(const FamilyTable& table, const Distribution& target,
                  const BitString& a, const BitString& b, long eps) {
  const Distribution& da = table.dist(a);
  const Distribution& db = table.dist(b);
  Rational p_target(0), p_fresh(0);
  for (const auto& [v, p] : target.probs())
    if (dis_deterministic(da, db, v, eps)) p_target += p;
  for (const auto& [v, p] : da.probs())
    if (dis_deterministic(da, db, v, eps)) p_fresh += p;
  return abs(p_target - p_fresh);
}

BitString learn_kl(FamilyPtr fam, const SampleSet& t_samples, long eps) {
  if (!fam) throw DomainError("learn_kl: missing family");
  if (eps < 1) throw DomainError("learn_kl: eps >= 1");
  const int k = fam->param_bits();
  const std::uint32_t full = 1u << fam->out_bits();
  for (std::uint32_t z = 0; z < (1u << k); ++z)
    if (fam->dist(BitString(z, k)).probs().size() != full)
      throw SupportError(
          "learn_kl: family is not fully supported (some outcome has "
          "probability 0)");
  return eval_mle(*fam, t_samples).argmax_z;
}

LearnerFn mle_learner() {
  return [](const LearningInstance& inst, const SampleSet& samples,
            std::uint64_t) {
    return eval_mle(*inst.family, samples).argmax_z;
  };
}

LearnerFn agnostic_sd_learner(const LearnOptions& opts) {
  return [opts](const LearningInstance& inst, const SampleSet& samples,
                std::uint64_t seed) {
    return learn_sd_hypothesis(inst.family, samples, inst.params.eps,
                               inst.params.delta, seed, opts);
  };
}

LearnerFn constant_learner(const BitString& h) {
  return [h](const LearningInstance&, const SampleSet&, std::uint64_t) {
    return h;
  };
}

double learn_proper_avg_benchmark(const LearningInstance& inst,
                                  const LearnerFn& learner, long trials,
                                  std::uint64_t seed) {
  inst.validate();
  if (trials < 1) throw DomainError("benchmark: trials >= 1");
  const long eps = inst.params.eps;
  const FamilyTable table(inst.family);
  const Sampler zsampler(inst.sampler);
  const rng::Stream root(seed);
  long good = 0;
  for (long i = 0; i < trials; ++i) {
    const rng::Stream trial = root.split(static_cast<std::uint64_t>(i));
    std::uint64_t ctr = 0;
    const BitString z = zsampler.draw(trial, ctr);
    const SampleSet samples =
        draw_samples(*inst.family, z, static_cast<std::size_t>(inst.params.t),
                     trial.split(1).seed());
    const BitString h = learner(inst, samples, trial.split(2).seed());
    if (statistical_distance(table.dist(z), table.dist(h)) <=
        Rational(1, eps))
      ++good;
  }
  return static_cast<double>(good) / static_cast<double>(trials);
}

Rational proper_success_mass(const LearningInstance& inst, const BitString& h) {
  inst.validate();
  const FamilyTable table(inst.family);
  const Rational radius(1, inst.params.eps);
  Rational mass(0);
  const int k = inst.family->param_bits();
  for (const auto& [zv, zp] : inst.sampler.probs())
    if (statistical_distance(table.dist(BitString(zv, k)), table.dist(h)) <=
        radius)
      mass += zp;
  return mass;
}

}  // namespace distlab
