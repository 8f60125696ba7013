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
#include <string>

#include "distlab/circuit.hpp"
#include "distlab/distribution.hpp"
#include "distlab/rng.hpp"

namespace distlab::test {

/// k=1, rho=0, D(z) = point mass on z.
inline std::shared_ptr<const CircuitFamily> identity_family() {
  return compile_family(R"({"param_bits":1,"rand_bits":0,"out_bits":1,
                            "gates":[],"outputs":[0]})");
}

/// k=0, rho=2, one output = AND of the two random wires: Pr[1] = 1/4.
inline std::shared_ptr<const CircuitFamily> and_family() {
  return compile_family(R"({"param_bits":0,"rand_bits":2,"out_bits":1,
                            "gates":[{"op":"AND","in":[0,1]}],"outputs":[2]})");
}

/// k=1, rho=2, out = z XOR (r1 AND r2): Pr[out = z] = 3/4.
inline std::shared_ptr<const CircuitFamily> biased_bit_family() {
  return compile_family(R"({"param_bits":1,"rand_bits":2,"out_bits":1,
                            "gates":[{"op":"AND","in":[1,2]},
                                     {"op":"XOR","in":[0,3]}],
                            "outputs":[4]})");
}

/// k bits, each output bit i = z_i XOR (AND of two fresh random bits):
/// independent per-bit flip probability 1/4.
inline std::shared_ptr<const CircuitFamily> biased_family(int k) {
  std::string gates;
  std::string outputs;
  for (int i = 0; i < k; ++i) {
    const int and_wire = 3 * k + 2 * i;      // gate wires come after k + 2k inputs
    if (i) {
      gates += ",";
      outputs += ",";
    }
    gates += R"({"op":"AND","in":[)" + std::to_string(k + 2 * i) + "," +
             std::to_string(k + 2 * i + 1) + "]},";
    gates += R"({"op":"XOR","in":[)" + std::to_string(i) + "," +
             std::to_string(and_wire) + "]}";
    outputs += std::to_string(and_wire + 1);
  }
  return compile_family(
      R"({"param_bits":)" + std::to_string(k) +
      R"(,"rand_bits":)" + std::to_string(2 * k) +
      R"(,"out_bits":)" + std::to_string(k) + R"(,"gates":[)" + gates +
      R"(],"outputs":[)" + outputs + "]}");
}

/// k params, no randomness: D(z) = point mass on z.
inline std::shared_ptr<const CircuitFamily> point_family(int k) {
  std::string outputs;
  for (int i = 0; i < k; ++i) outputs += (i ? "," : "") + std::to_string(i);
  return compile_family(
      R"({"param_bits":)" + std::to_string(k) +
      R"(,"rand_bits":0,"out_bits":)" + std::to_string(k) +
      R"(,"gates":[],"outputs":[)" + outputs + "]}");
}

/// k params that are ignored; output = the random bits (all D(z) uniform).
inline std::shared_ptr<const CircuitFamily> uniform_family(int k, int m) {
  std::string outputs;
  for (int i = 0; i < m; ++i) {
    if (i) outputs += ",";
    outputs += std::to_string(k + i);
  }
  return compile_family(
      R"({"param_bits":)" + std::to_string(k) + R"(,"rand_bits":)" +
      std::to_string(m) + R"(,"out_bits":)" + std::to_string(m) +
      R"(,"gates":[],"outputs":[)" + outputs + "]}");
}

/// Random distribution over `support_len`-bit strings with dyadic weights.
inline Distribution random_distribution(int support_len, const rng::Stream& s,
                                        std::uint64_t& ctr) {
  const std::uint32_t n = 1u << support_len;
  Distribution::Map m;
  Int total(0);
  std::vector<std::uint64_t> w(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    w[v] = s.value(ctr++) % 64;  // occasional zero entries
    total += w[v];
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (w[v]) m[v] = Rational(Int(w[v]), total);
  return Distribution(support_len, std::move(m));
}

}  // namespace distlab::test
