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
#include <vector>

#include "distlab/common.hpp"

namespace distlab {

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string details;
};

struct ClaimOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Overrides the Monte Carlo trial counts of the statistical suites;
  /// 0 keeps each claim's default.
  long trials = 0;
  /// Fault-injection hook for tests: "dis_flip" inverts the distinguisher
  /// threshold inside the NP_distinguish suite, which must then fail.
  std::string fault;
};

/// The registered claim suite, in run order.
std::vector<std::string> claim_ids();
bool claim_exists(const std::string& id);

ClaimResult run_claim(const std::string& id, const ClaimOptions& opts);
std::vector<ClaimResult> run_all_claims(const ClaimOptions& opts);

}  // namespace distlab
