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

#include "distlab/instance.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "distlab/circuit.hpp"

namespace distlab {

namespace {

Rational rat_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw ParseError("expected integer or \"num/den\" string for a rational");
}

Distribution dist_from_json(const nlohmann::json& j) {
  const int support_len = j.at("support_len").get<int>();
  Distribution::Map m;
  for (const auto& [key, val] : j.at("probs").items()) {
    const BitString x = BitString::parse(key);
    if (x.size() != support_len)
      throw ParseError("distribution outcome " + key + " has wrong length");
    m[x.value()] = rat_from_json(val);
  }
  return Distribution(support_len, std::move(m));
}

nlohmann::json dist_to_json(const Distribution& d) {
  nlohmann::json probs = nlohmann::json::object();
  for (const auto& [v, p] : d.probs())
    probs[BitString(v, d.support_len()).str()] = rat_to_string(p);
  return nlohmann::json{{"support_len", d.support_len()}, {"probs", probs}};
}

Distribution sampler_from_json(const nlohmann::json& j, int param_bits) {
  const std::string kind = j.value("kind", "explicit");
  if (kind == "uniform") return Distribution::uniform(param_bits);
  if (kind == "explicit") return dist_from_json(j);
  if (kind == "circuit") {
    const auto fam = compile_family(j.dump());
    if (fam->param_bits() != 0)
      throw ParseError("sampler circuit must have param_bits 0");
    return fam->dist(BitString(0, 0));
  }
  throw ParseError("unknown sampler kind: " + kind);
}

Distribution target_from_json(const nlohmann::json& j, const Family& fam) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit") return dist_from_json(j);
  if (kind == "mixture") {
    const BitString z = BitString::parse(j.at("param").get<std::string>());
    const Rational w = rat_from_json(j.at("uniform_weight"));
    return Distribution::mixture(fam.dist(z),
                                 Distribution::uniform(fam.out_bits()), w);
  }
  throw ParseError("unknown target kind: " + kind);
}

}  // namespace

void LearningInstance::validate() const {
  if (!family) throw DomainError("instance: missing family");
  params.validate();
  if (sampler.support_len() != family->param_bits())
    throw DomainError("instance: sampler outcome length != family param_bits");
  if (target && target->support_len() != family->out_bits())
    throw DomainError("instance: target support length != family out_bits");
}

LearningInstance instance_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  try {
    LearningInstance inst;
    inst.family = compile_family(j.at("family").dump());
    if (j.contains("sampler"))
      inst.sampler = sampler_from_json(j.at("sampler"), inst.family->param_bits());
    else
      inst.sampler = Distribution::uniform(inst.family->param_bits());
    if (j.contains("params")) {
      const auto& p = j.at("params");
      inst.params.eps = p.value("eps", 1L);
      inst.params.delta = p.value("delta", 1L);
      inst.params.t = p.value("t", 1L);
    }
    if (j.contains("target"))
      inst.target = target_from_json(j.at("target"), *inst.family);
    inst.validate();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
}

Distribution dist_from_json_text(const std::string& text) {
  try {
    return dist_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("distribution JSON: ") + e.what());
  }
}

std::string dist_to_json_text(const Distribution& d) {
  return dist_to_json(d).dump();
}

std::vector<BitString> parse_sample_lines(const std::string& text) {
  std::vector<BitString> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    out.push_back(BitString::parse(line));
    if (out.size() > 1 && out.back().size() != out.front().size())
      throw ParseError("sample lines have mixed lengths");
  }
  return out;
}

std::string format_sample_lines(const std::vector<BitString>& samples) {
  std::string out;
  for (const BitString& x : samples) {
    out += x.str();
    out += '\n';
  }
  return out;
}

}  // namespace distlab
