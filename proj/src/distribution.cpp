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

#include "distlab/distribution.hpp"

#include <utility>

namespace distlab {

Distribution::Distribution(int support_len, Map probs)
    : support_len_(support_len), probs_(std::move(probs)) {
  if (support_len < 0 || support_len > limits::kMaxTupleBits)
    throw DomainError("Distribution: support_len out of range");
  Rational total(0);
  for (auto it = probs_.begin(); it != probs_.end();) {
    if (support_len < 32 && (it->first >> support_len) != 0)
      throw DomainError("Distribution: outcome wider than support_len");
    if (it->second < 0)
      throw DomainError("Distribution: negative probability");
    total += it->second;
    if (it->second == 0)
      it = probs_.erase(it);
    else
      ++it;
  }
  if (total != 1) throw DomainError("Distribution: probabilities must sum to 1");
}

Distribution Distribution::point_mass(const BitString& x) {
  Map m;
  m[x.value()] = Rational(1);
  return Distribution(x.size(), std::move(m));
}

Distribution Distribution::uniform(int support_len) {
  if (support_len > limits::kMaxTupleBits)
    throw DomainError("uniform: support_len out of range");
  Map m;
  const Rational p(1, pow2(support_len));
  for (std::uint32_t v = 0; v < (1u << support_len); ++v) m[v] = p;
  return Distribution(support_len, std::move(m));
}

Distribution Distribution::mixture(const Distribution& base,
                                   const Distribution& other,
                                   const Rational& weight) {
  if (base.support_len() != other.support_len())
    throw DomainError("mixture: support mismatch");
  if (weight < 0 || weight > 1) throw DomainError("mixture: weight in [0,1]");
  Map m = base.probs_;
  for (auto& [v, p] : m) p *= (Rational(1) - weight);
  for (const auto& [v, p] : other.probs_) m[v] += weight * p;
  return Distribution(base.support_len(), std::move(m));
}

Rational Distribution::prob(const BitString& x) const {
  if (x.size() != support_len_)
    throw DomainError("Distribution::prob: length mismatch");
  return prob_value(x.value());
}

Rational Distribution::prob_value(std::uint32_t v) const {
  const auto it = probs_.find(v);
  return it == probs_.end() ? Rational(0) : it->second;
}

namespace {

void check_same_support_len(const Distribution& p, const Distribution& q) {
  if (p.support_len() != q.support_len())
    throw DomainError("distributions have different support lengths");
}

}  // namespace

Rational statistical_distance(const Distribution& p, const Distribution& q) {
  check_same_support_len(p, q);
  Rational sum(0);
  auto ip = p.probs().begin();
  auto iq = q.probs().begin();
  while (ip != p.probs().end() || iq != q.probs().end()) {
    if (iq == q.probs().end() || (ip != p.probs().end() && ip->first < iq->first)) {
      sum += ip->second;
      ++ip;
    } else if (ip == p.probs().end() || iq->first < ip->first) {
      sum += iq->second;
      ++iq;
    } else {
      sum += abs(ip->second - iq->second);
      ++ip;
      ++iq;
    }
  }
  return sum / 2;
}

Rational sd_one_sided(const Distribution& p, const Distribution& q) {
  check_same_support_len(p, q);
  Rational sum(0);
  for (const auto& [v, pp] : p.probs()) {
    const Rational qq = q.prob_value(v);
    if (pp > qq) sum += pp - qq;
  }
  return sum;
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  check_same_support_len(p, q);
  double sum = 0.0;
  for (const auto& [v, pp] : p.probs()) {
    const Rational qq = q.prob_value(v);
    if (qq == 0)
      throw SupportError("kl_divergence: Q is zero where P is positive");
    sum += rat_to_double(pp) * log2_rat(pp / qq);
  }
  return sum;
}

Distribution tensor_power(const Distribution& p, int t) {
  if (t < 1) throw DomainError("tensor_power: t must be >= 1");
  if (p.support_len() * t > limits::kMaxTupleBits)
    throw DomainError("tensor_power: tuple width exceeds cap");
  Distribution::Map acc;
  acc[0] = Rational(1);
  const int w = p.support_len();
  for (int i = 0; i < t; ++i) {
    Distribution::Map next;
    for (const auto& [prefix, pr] : acc)
      for (const auto& [v, pv] : p.probs()) next[(prefix << w) | v] += pr * pv;
    acc = std::move(next);
  }
  return Distribution(w * t, std::move(acc));
}

namespace {

// Walks all count vectors (c_1,...,c_s) with sum t over the union support of
// p and q, keeping running products p^c and q^c and the multinomial weight.
struct TensorSdWalker {
  std::vector<Rational> ps, qs;
  int t;
  Rational acc{0};

  void walk(std::size_t idx, int remaining, const Rational& pprod,
            const Rational& qprod, const Rational& multinomial) {
    if (idx + 1 == ps.size()) {
      // Last outcome takes everything that is left; multinomial already
      // accounts for the split of earlier counts.
      const Rational pterm = pprod * rat_pow(ps[idx], static_cast<unsigned>(remaining));
      const Rational qterm = qprod * rat_pow(qs[idx], static_cast<unsigned>(remaining));
      if (pterm > qterm) acc += multinomial * (pterm - qterm);
      return;
    }
    Rational pc(1), qc(1);
    Rational binom(1);
    for (int c = 0; c <= remaining; ++c) {
      if (c > 0) {
        pc *= ps[idx];
        qc *= qs[idx];
        // (remaining - c + 1) / c updates C(remaining, c) incrementally.
        binom *= Rational(remaining - c + 1, c);
      }
      walk(idx + 1, remaining - c, pprod * pc, qprod * qc, multinomial * binom);
    }
  }
};

}  // namespace

Rational tensor_statistical_distance(const Distribution& p,
                                     const Distribution& q, int t) {
  check_same_support_len(p, q);
  if (t < 1) throw DomainError("tensor_statistical_distance: t >= 1");
  // Union support; outcomes outside both supports contribute nothing.
  std::vector<Rational> ps, qs;
  auto ip = p.probs().begin();
  auto iq = q.probs().begin();
  while (ip != p.probs().end() || iq != q.probs().end()) {
    if (iq == q.probs().end() || (ip != p.probs().end() && ip->first < iq->first)) {
      ps.push_back(ip->second);
      qs.push_back(Rational(0));
      ++ip;
    } else if (ip == p.probs().end() || iq->first < ip->first) {
      ps.push_back(Rational(0));
      qs.push_back(iq->second);
      ++iq;
    } else {
      ps.push_back(ip->second);
      qs.push_back(iq->second);
      ++ip;
      ++iq;
    }
  }
  TensorSdWalker w{std::move(ps), std::move(qs), t};
  w.walk(0, t, Rational(1), Rational(1), Rational(1));
  return w.acc;
}

}  // namespace distlab
