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

#include <optional>
#include <string>

#include "distlab/distribution.hpp"
#include "distlab/family.hpp"

namespace distlab {

/// (eps, delta, t): precision 1/eps, confidence 1/delta, sample count.
struct LearnParams {
  long eps = 1;
  long delta = 1;
  long t = 1;

  void validate() const {
    if (eps < 1 || delta < 1 || t < 1)
      throw DomainError("LearnParams: eps, delta, t must all be >= 1");
  }
};

/// A learning experiment: a sampler over parameters, the family itself, and
/// the experiment parameters. `target` carries an explicit target
/// distribution for agnostic experiments, where the target need not lie in
/// the family.
struct LearningInstance {
  Distribution sampler;  // over z; support_len == family->param_bits()
  FamilyPtr family;
  LearnParams params;
  std::optional<Distribution> target;

  void validate() const;
};

/// Parses the instance JSON schema:
///   {"family": <circuit>,
///    "sampler": {"kind": "uniform"} |
///               {"kind": "explicit", "support_len": k, "probs": {...}} |
///               {"kind": "circuit", <circuit with param_bits 0>},
///    "params": {"eps": int, "delta": int, "t": int},
///    "target": {"kind": "explicit", ...} |
///              {"kind": "mixture", "param": "0101", "uniform_weight": "1/10"}}
/// "sampler" defaults to uniform and "target" is optional.
LearningInstance instance_from_json(const std::string& text);

/// Distribution JSON: {"support_len": n, "probs": {"0101": "3/16", ...}}.
/// Probability values may be integers or "num/den" strings.
Distribution dist_from_json_text(const std::string& text);
std::string dist_to_json_text(const Distribution& d);

/// Newline-delimited bit strings.
std::vector<BitString> parse_sample_lines(const std::string& text);
std::string format_sample_lines(const std::vector<BitString>& samples);

}  // namespace distlab
