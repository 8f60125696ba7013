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

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "distlab/bitstring.hpp"
#include "distlab/distribution.hpp"
#include "distlab/rng.hpp"

namespace distlab {

/// A parameterized distribution family: for every parameter string z of
/// param_bits() bits, a distribution over out_bits()-bit outcomes. Families
/// are immutable and all queries are exact.
class Family {
 public:
  virtual ~Family() = default;

  virtual int param_bits() const = 0;
  virtual int out_bits() const = 0;

  /// Exact probability of outcome x under parameter z.
  virtual Rational prob(const BitString& z, const BitString& x) const = 0;

  /// The full distribution of outcomes under z.
  virtual Distribution dist(const BitString& z) const = 0;

  /// Whether dist() may be materialized (false only for tuple wrappers whose
  /// outcome width exceeds the enumeration cap).
  virtual bool dist_enumerable() const { return true; }

  /// One seeded draw. Default routes through dist(); wrappers that cannot
  /// enumerate override this.
  virtual BitString draw_one(const BitString& z, const rng::Stream& s,
                             std::uint64_t& counter) const;

  void check_param(const BitString& z) const {
    if (z.size() != param_bits())
      throw DomainError("family: parameter length mismatch");
  }
  void check_outcome(const BitString& x) const {
    if (x.size() != out_bits())
      throw DomainError("family: outcome length mismatch");
  }
};

using FamilyPtr = std::shared_ptr<const Family>;

/// Memoizing view of a family's distribution vectors, safe to share between
/// threads. Used by the exhaustive scans that revisit the same z many times.
class FamilyTable {
 public:
  explicit FamilyTable(FamilyPtr fam) : fam_(std::move(fam)) {}

  const Family& family() const { return *fam_; }
  const Distribution& dist(const BitString& z) const;
  Rational prob(const BitString& z, const BitString& x) const {
    return dist(z).prob(x);
  }

 private:
  FamilyPtr fam_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint32_t, std::shared_ptr<const Distribution>>
      cache_;
};

}  // namespace distlab
