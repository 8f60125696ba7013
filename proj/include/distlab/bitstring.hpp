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

#include <compare>
#include <cstdint>
#include <string>

#include "distlab/common.hpp"

namespace distlab {

/// Fixed-length bit string of up to limits::kMaxTupleBits bits, MSB first:
/// bit 0 of the string is the most significant bit of value(). With that
/// encoding, numeric order on value() is lexicographic order on the string.
class BitString {
 public:
  BitString() = default;
  BitString(std::uint32_t value, int len) : value_(value), len_(len) {
    if (len < 0 || len > limits::kMaxTupleBits)
      throw DomainError("BitString: length out of range");
    if (len < 32 && (value >> len) != 0)
      throw DomainError("BitString: value wider than length");
  }

  static BitString parse(const std::string& s) {
    if (s.size() > static_cast<std::size_t>(limits::kMaxTupleBits))
      throw ParseError("bit string too long: " + s);
    std::uint32_t v = 0;
    for (char c : s) {
      if (c != '0' && c != '1') throw ParseError("not a bit string: " + s);
      v = (v << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return BitString(v, static_cast<int>(s.size()));
  }

  std::uint32_t value() const { return value_; }
  int size() const { return len_; }

  int bit(int i) const {
    if (i < 0 || i >= len_) throw DomainError("BitString: bit index");
    return static_cast<int>((value_ >> (len_ - 1 - i)) & 1u);
  }

  BitString with_bit(int i, int b) const {
    if (i < 0 || i >= len_) throw DomainError("BitString: bit index");
    const std::uint32_t mask = 1u << (len_ - 1 - i);
    std::uint32_t v = value_;
    if (b)
      v |= mask;
    else
      v &= ~mask;
    return BitString(v, len_);
  }

  /// this followed by other.
  BitString concat(const BitString& other) const {
    return BitString((value_ << other.len_) | other.value_,
                     len_ + other.len_);
  }

  /// Bits [from, from+count).
  BitString slice(int from, int count) const {
    if (from < 0 || count < 0 || from + count > len_)
      throw DomainError("BitString: slice out of range");
    const std::uint32_t v =
        (count == 0) ? 0u
                     : (value_ >> (len_ - from - count)) &
                           ((count == 32) ? ~0u : ((1u << count) - 1u));
    return BitString(v, count);
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
      if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::uint32_t value_ = 0;
  int len_ = 0;
};

}  // namespace distlab
