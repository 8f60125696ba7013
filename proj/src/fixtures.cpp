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

#include "distlab/fixtures.hpp"

#include "distlab/owpuzz.hpp"

namespace distlab::fixtures {

namespace {

std::string wire_list(int from, int count, int stride = 1) {
  std::string s;
  for (int i = 0; i < count; ++i)
    s += (i ? "," : "") + std::to_string(from + i * stride);
  return s;
}

}  // namespace

std::string identity_json() { return point_json(1); }

std::string point_json(int k) {
  return R"({"param_bits":)" + std::to_string(k) +
         R"(,"rand_bits":0,"out_bits":)" + std::to_string(k) +
         R"(,"gates":[],"outputs":[)" + wire_list(0, k) + "]}";
}

std::string and_pair_json() {
  return R"({"param_bits":0,"rand_bits":2,"out_bits":1,)"
         R"("gates":[{"op":"AND","in":[0,1]}],"outputs":[2]})";
}

std::string noisy_copy_json(int k, int and_bits) {
  // Wires: z_0..z_{k-1}, then k*and_bits coins, then per output bit a chain
  // of and_bits-1 ANDs followed by one XOR with the parameter bit.
  std::string gates;
  std::string outputs;
  int wire = k + k * and_bits;
  for (int i = 0; i < k; ++i) {
    const int coin0 = k + i * and_bits;
    int noise_wire = coin0;
    for (int a = 1; a < and_bits; ++a) {
      if (!gates.empty()) gates += ",";
      gates += R"({"op":"AND","in":[)" + std::to_string(noise_wire) + "," +
               std::to_string(coin0 + a) + "]}";
      noise_wire = wire++;
    }
    if (!gates.empty()) gates += ",";
    gates += R"({"op":"XOR","in":[)" + std::to_string(i) + "," +
             std::to_string(noise_wire) + "]}";
    const int out_wire = wire++;
    outputs += (i ? "," : "") + std::to_string(out_wire);
  }
  return R"({"param_bits":)" + std::to_string(k) + R"(,"rand_bits":)" +
         std::to_string(k * and_bits) + R"(,"out_bits":)" + std::to_string(k) +
         R"(,"gates":[)" + gates + R"(],"outputs":[)" + outputs + "]}";
}

std::string ignore_params_json(int k, int m) {
  return R"({"param_bits":)" + std::to_string(k) + R"(,"rand_bits":)" +
         std::to_string(m) + R"(,"out_bits":)" + std::to_string(m) +
         R"(,"gates":[],"outputs":[)" + wire_list(k, m) + "]}";
}

std::string parity_prg_json() {
  return R"({"role":"prg","n":4,
    "param_bits":2,"rand_bits":4,"out_bits":4,
    "gates":[{"op":"XOR","in":[2,3]},{"op":"XOR","in":[6,4]},
             {"op":"NOT","in":[0]},{"op":"NOT","in":[1]},
             {"op":"AND","in":[8,9]},{"op":"AND","in":[10,7]},
             {"op":"NOT","in":[10]},{"op":"AND","in":[12,5]},
             {"op":"OR","in":[11,13]}],
    "outputs":[2,3,4,14]})";
}

std::shared_ptr<const CircuitFamily> identity() {
  return compile_family(identity_json());
}
std::shared_ptr<const CircuitFamily> point(int k) {
  return compile_family(point_json(k));
}
std::shared_ptr<const CircuitFamily> and_pair() {
  return compile_family(and_pair_json());
}
std::shared_ptr<const CircuitFamily> noisy_copy(int k, int and_bits) {
  if (and_bits < 1) throw DomainError("noisy_copy: and_bits >= 1");
  return compile_family(noisy_copy_json(k, and_bits));
}
std::shared_ptr<const CircuitFamily> ignore_params(int k, int m) {
  return compile_family(ignore_params_json(k, m));
}
PrgSpec parity_prg() { return prg_from_json(parity_prg_json()); }

LearningInstance biased_k4_instance(long eps, long delta, long t) {
  LearningInstance inst;
  inst.family = noisy_copy(4, 2);
  inst.sampler = Distribution::uniform(4);
  inst.params = LearnParams{eps, delta, t > 0 ? t : owp_default_t(eps, 4)};
  inst.validate();
  return inst;
}

std::string biased_k4_instance_json(long eps, long delta, long t) {
  if (t <= 0) t = owp_default_t(eps, 4);
  std::string family = noisy_copy_json(4, 2);
  return std::string("{\"family\":") + family +
         ",\"sampler\":{\"kind\":\"uniform\"},\"params\":{\"eps\":" +
         std::to_string(eps) + ",\"delta\":" + std::to_string(delta) +
         ",\"t\":" + std::to_string(t) + "}}";
}

std::vector<AgnosticFixture> agnostic_fixtures() {
  std::vector<AgnosticFixture> out;

  const auto mix = [](const Family& fam, std::uint32_t zv,
                      const Rational& w) {
    const int k = fam.param_bits();
    return Distribution::mixture(fam.dist(BitString(zv, k)),
                                 Distribution::uniform(fam.out_bits()), w);
  };

  {
    AgnosticFixture f{"noisy_copy_k3",      noisy_copy(3, 2), Distribution(),
                      2,                    10,               400};
    f.target = mix(*f.family, 0b101u, Rational(1, 10));
    out.push_back(std::move(f));
  }
  {
    AgnosticFixture f{"noisy_copy_k4",      noisy_copy(4, 2), Distribution(),
                      4,                    10,               400};
    f.target = mix(*f.family, 0b0110u, Rational(1, 5));
    out.push_back(std::move(f));
  }
  {
    AgnosticFixture f{"sharp_copy_k4",      noisy_copy(4, 3), Distribution(),
                      4,                    10,               400};
    f.target = mix(*f.family, 0b1100u, Rational(3, 20));
    out.push_back(std::move(f));
  }
  {
    AgnosticFixture f{"point_k5", point(5), Distribution(), 2, 10, 300};
    f.target = mix(*f.family, 0b10011u, Rational(1, 10));
    out.push_back(std::move(f));
  }
  {
    AgnosticFixture f{"noisy_copy_k6",      noisy_copy(6, 2), Distribution(),
                      2,                    10,               300};
    f.target = mix(*f.family, 0b011010u, Rational(3, 20));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace distlab::fixtures
