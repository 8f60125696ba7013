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

#include "distlab/family.hpp"

namespace distlab {

enum class GateOp { And, Or, Not, Xor };

struct Gate {
  GateOp op;
  std::vector<int> in;  // earlier wire ids; NOT takes 1 input, the rest 2
};

/// Deterministic boolean circuit D(z; r). Wires are numbered parameters
/// first, randomness second, then one wire per gate in order. Evaluating on
/// any (z, r) is deterministic; probabilities come from enumerating r.
class CircuitFamily final : public Family {
 public:
  CircuitFamily(int param_bits, int rand_bits, int out_bits,
                std::vector<Gate> gates, std::vector<int> outputs);

  int param_bits() const override { return param_bits_; }
  int out_bits() const override { return out_bits_; }
  int rand_bits() const { return rand_bits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<int>& outputs() const { return outputs_; }

  /// Evaluates the circuit on (z, r); r is given as rand_bits() MSB-first
  /// bits, consistent with wire numbering.
  BitString eval(const BitString& z, const BitString& r) const;

  Rational prob(const BitString& z, const BitString& x) const override;
  Distribution dist(const BitString& z) const override;

 private:
  std::uint32_t eval_value(std::uint32_t z, std::uint32_t r) const;

  int param_bits_, rand_bits_, out_bits_;
  std::vector<Gate> gates_;
  std::vector<int> outputs_;
};

/// Parses and validates the circuit JSON schema:
///   {"param_bits": k, "rand_bits": rho, "out_bits": m,
///    "gates": [{"op": "AND|OR|NOT|XOR", "in": [wire, ...]}, ...],
///    "outputs": [wire, ...]}
std::shared_ptr<const CircuitFamily> compile_family(const std::string& json_text);

}  // namespace distlab
