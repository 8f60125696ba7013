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

#include "distlab/circuit.hpp"

#include <nlohmann/json.hpp>

#include <utility>

namespace distlab {

namespace {
constexpr int kMaxGateCount = 4096;
}

CircuitFamily::CircuitFamily(int param_bits, int rand_bits, int out_bits,
                             std::vector<Gate> gates, std::vector<int> outputs)
    : param_bits_(param_bits),
      rand_bits_(rand_bits),
      out_bits_(out_bits),
      gates_(std::move(gates)),
      outputs_(std::move(outputs)) {
  if (param_bits_ < 0 || param_bits_ > limits::kMaxParamBits)
    throw DomainError("circuit: param_bits out of range");
  if (rand_bits_ < 0 || rand_bits_ > limits::kMaxRandBits)
    throw DomainError("circuit: rand_bits out of range");
  if (out_bits_ < 1 || out_bits_ > limits::kMaxOutBits)
    throw DomainError("circuit: out_bits out of range");
  if (gates_.size() > kMaxGateCount)
    throw DomainError("circuit: too many gates");
  int wire = param_bits_ + rand_bits_;
  for (const Gate& g : gates_) {
    const std::size_t arity = (g.op == GateOp::Not) ? 1 : 2;
    if (g.in.size() != arity) throw ParseError("circuit: gate arity mismatch");
    for (int w : g.in)
      if (w < 0 || w >= wire) throw ParseError("circuit: gate input wire out of range");
    ++wire;
  }
  if (outputs_.size() != static_cast<std::size_t>(out_bits_))
    throw ParseError("circuit: outputs must list out_bits wires");
  for (int w : outputs_)
    if (w < 0 || w >= wire) throw ParseError("circuit: output wire out of range");
}

std::uint32_t CircuitFamily::eval_value(std::uint32_t z, std::uint32_t r) const {
  // Wire values packed into a local vector; inputs are MSB-first strings, so
  // wire i of the parameter block is bit (param_bits-1-i) of z.
  std::vector<unsigned char> w(static_cast<std::size_t>(param_bits_ + rand_bits_) +
                               gates_.size());
  for (int i = 0; i < param_bits_; ++i)
    w[static_cast<std::size_t>(i)] =
        static_cast<unsigned char>((z >> (param_bits_ - 1 - i)) & 1u);
  for (int i = 0; i < rand_bits_; ++i)
    w[static_cast<std::size_t>(param_bits_ + i)] =
        static_cast<unsigned char>((r >> (rand_bits_ - 1 - i)) & 1u);
  std::size_t next = static_cast<std::size_t>(param_bits_ + rand_bits_);
  for (const Gate& g : gates_) {
    unsigned char v = 0;
    switch (g.op) {
      case GateOp::And: v = w[g.in[0]] & w[g.in[1]]; break;
      case GateOp::Or: v = w[g.in[0]] | w[g.in[1]]; break;
      case GateOp::Xor: v = w[g.in[0]] ^ w[g.in[1]]; break;
      case GateOp::Not: v = w[g.in[0]] ^ 1u; break;
    }
    w[next++] = v;
  }
  std::uint32_t out = 0;
  for (int wi : outputs_) out = (out << 1) | w[static_cast<std::size_t>(wi)];
  return out;
}

BitString CircuitFamily::eval(const BitString& z, const BitString& r) const {
  check_param(z);
  if (r.size() != rand_bits_) throw DomainError("circuit: randomness length mismatch");
  return BitString(eval_value(z.value(), r.value()), out_bits_);
}

Rational CircuitFamily::prob(const BitString& z, const BitString& x) const {
  check_param(z);
  check_outcome(x);
  const std::uint32_t target = x.value();
  std::uint64_t hits = 0;
  const std::uint32_t total = 1u << rand_bits_;
  for (std::uint32_t r = 0; r < total; ++r)
    if (eval_value(z.value(), r) == target) ++hits;
  return Rational(Int(hits), pow2(rand_bits_));
}

Distribution CircuitFamily::dist(const BitString& z) const {
  check_param(z);
  std::vector<std::uint64_t> counts(1u << out_bits_, 0);
  const std::uint32_t total = 1u << rand_bits_;
  for (std::uint32_t r = 0; r < total; ++r) ++counts[eval_value(z.value(), r)];
  Distribution::Map m;
  const Int den = pow2(rand_bits_);
  for (std::uint32_t v = 0; v < counts.size(); ++v)
    if (counts[v] > 0) m[v] = Rational(Int(counts[v]), den);
  return Distribution(out_bits_, std::move(m));
}

std::shared_ptr<const CircuitFamily> compile_family(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  }
  try {
    const int k = j.at("param_bits").get<int>();
    const int rho = j.at("rand_bits").get<int>();
    const int m = j.at("out_bits").get<int>();
    std::vector<Gate> gates;
    for (const auto& gj : j.value("gates", nlohmann::json::array())) {
      Gate g;
      const std::string op = gj.at("op").get<std::string>();
      if (op == "AND")
        g.op = GateOp::And;
      else if (op == "OR")
        g.op = GateOp::Or;
      else if (op == "NOT")
        g.op = GateOp::Not;
      else if (op == "XOR")
        g.op = GateOp::Xor;
      else
        throw ParseError("circuit: unknown gate op " + op);
      g.in = gj.at("in").get<std::vector<int>>();
      gates.push_back(std::move(g));
    }
    const auto outputs = j.at("outputs").get<std::vector<int>>();
    return std::make_shared<const CircuitFamily>(k, rho, m, std::move(gates),
                                                 outputs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace distlab
