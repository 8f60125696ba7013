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

#include "distlab/instance.hpp"
#include "distlab/reductions.hpp"

namespace distlab::fixtures {

/// k = 1, no randomness: D(z) is the point mass on z.
std::string identity_json();

/// k params, no randomness: D(z) = point mass on z.
std::string point_json(int k);

/// k = 0, one output = AND of two coins: Pr[1] = 1/4.
std::string and_pair_json();

/// Noisy copy channel: every output bit is z_i XOR (AND of `and_bits` fresh
/// coins), i.e. an independent flip with probability 2^-and_bits per bit.
std::string noisy_copy_json(int k, int and_bits);

/// k parameters that are ignored; m output bits copied from fresh coins.
std::string ignore_params_json(int k, int m);

/// n = 4 generator: advice 00 samples the even-parity 4-bit strings
/// uniformly (SD 1/2 from uniform); any other advice samples all of
/// {0,1}^4.
std::string parity_prg_json();

std::shared_ptr<const CircuitFamily> identity();
std::shared_ptr<const CircuitFamily> point(int k);
std::shared_ptr<const CircuitFamily> and_pair();
std::shared_ptr<const CircuitFamily> noisy_copy(int k, int and_bits);
std::shared_ptr<const CircuitFamily> ignore_params(int k, int m);
PrgSpec parity_prg();

/// The 4-bit noisy-copy instance with a uniform parameter sampler;
/// t defaults to 16 eps^2 k.
LearningInstance biased_k4_instance(long eps, long delta, long t);
std::string biased_k4_instance_json(long eps, long delta, long t);

/// The five agnostic-learning fixtures: noisy-copy and point families with
/// k <= 6, each paired with a target that mixes one family member with at
/// most 20% uniform noise.
struct AgnosticFixture {
  std::string name;
  FamilyPtr family;
  Distribution target;
  long eps;
  long delta;
  long t;
};
std::vector<AgnosticFixture> agnostic_fixtures();

}  // namespace distlab::fixtures
