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

#include "distlab/common.hpp"

#include <cmath>

namespace distlab {

Int pow2(int e) {
  if (e < 0) throw DomainError("pow2: negative exponent");
  return Int(1) << e;
}

Rational pow2_rat(int e) {
  if (e >= 0) return Rational(pow2(e));
  return Rational(1, pow2(-e));
}

Rational rat_pow(const Rational& r, unsigned e) {
  Rational acc(1);
  Rational base = r;
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

bool less_than_pow2(const Rational& r, long a, long b) {
  if (b <= 0) throw DomainError("less_than_pow2: b must be positive");
  if (r <= 0) return true;
  // r < 2^(a/b)  <=>  r^b < 2^a, both sides positive.
  Rational lhs = rat_pow(r, static_cast<unsigned>(b));
  if (a >= 0) return lhs < Rational(pow2(static_cast<int>(a)));
  return lhs < Rational(1, pow2(static_cast<int>(-a)));
}

bool leq_pow2(const Rational& r, long a, long b) {
  if (b <= 0) throw DomainError("leq_pow2: b must be positive");
  if (r <= 0) return true;
  Rational lhs = rat_pow(r, static_cast<unsigned>(b));
  if (a >= 0) return lhs <= Rational(pow2(static_cast<int>(a)));
  return lhs <= Rational(1, pow2(static_cast<int>(-a)));
}

std::string rat_to_string(const Rational& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational: " + s);
  }
}

double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

double log2_rat(const Rational& r) {
  if (r <= 0) throw DomainError("log2_rat: nonpositive argument");
  const Int num = numerator(r);
  const Int den = denominator(r);
  // Scale both parts into double range before taking logs.
  const auto bits = [](const Int& v) {
    return static_cast<long>(boost::multiprecision::msb(v));
  };
  long shift_num = 0;
  long shift_den = 0;
  Int n = num;
  Int d = den;
  if (bits(n) > 900) {
    shift_num = bits(n) - 900;
    n >>= shift_num;
  }
  if (bits(d) > 900) {
    shift_den = bits(d) - 900;
    d >>= shift_den;
  }
  return std::log2(n.convert_to<double>()) + static_cast<double>(shift_num) -
         std::log2(d.convert_to<double>()) - static_cast<double>(shift_den);
}

}  // namespace distlab
