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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace distlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "0.1.0";

// Enumeration caps. Everything in this library is computed by exhaustive
// enumeration, so these bound the work, not the math.
namespace limits {
inline constexpr int kMaxParamBits = 12;  // parameter strings z
inline constexpr int kMaxRandBits = 20;   // circuit randomness r
inline constexpr int kMaxOutBits = 16;    // single-outcome width
inline constexpr int kMaxTupleBits = 24;  // width of tensor-power outcomes
}  // namespace limits

// Default seed for every experiment that does not receive one explicitly.
// Overridable from the CLI via the DISTLAB_SEED environment variable.
inline constexpr std::uint64_t kDefaultSeed = 0x00D157AB00000001ULL;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input could not be parsed or refers to out-of-range entities.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration cap or a type precondition was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A support precondition was violated (e.g. KL against a zero).
class SupportError : public Error {
 public:
  using Error::Error;
};

Int pow2(int e);
Rational pow2_rat(int e);  // 2^e for possibly negative e
Rational rat_pow(const Rational& r, unsigned e);

// r < 2^(a/b), exactly (b > 0, r >= 0). Used for the irrational thresholds
// 2^{1/eps} and the amplification bound, which are rational only after
// clearing the exponent.
bool less_than_pow2(const Rational& r, long a, long b);
bool leq_pow2(const Rational& r, long a, long b);

std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& s);
double rat_to_double(const Rational& r);

// log2 of a positive rational, in double precision.
double log2_rat(const Rational& r);

}  // namespace distlab
