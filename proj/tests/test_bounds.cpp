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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "distlab/bounds.hpp"
#include "helpers.hpp"

using namespace distlab;
using namespace distlab::test;

TEST_CASE("hoeffding_T closed form") {
  CHECK(hoeffding_T(1, 0.1, 0.01, 10) == 1665);
  CHECK(hoeffding_T(1, 1, 0.5, 0) == 1);
  // Doubling M quadruples T, up to the ceiling.
  const long t1 = hoeffding_T(1, 0.07, 0.2, 3);
  const long t2 = hoeffding_T(2, 0.07, 0.2, 3);
  CHECK(t2 >= 4 * t1 - 4);
  CHECK(t2 <= 4 * t1 + 4);
  CHECK_THROWS_AS(hoeffding_T(0, 0.1, 0.1, 1), DomainError);
  // The tight two-sided constant halves the requirement.
  CHECK(hoeffding_T(1, 0.1, 0.01, 10, true) <= (t1 * 0 + 833));
}

TEST_CASE("hoeffding_T monotonicity") {
  const rng::Stream s(3);
  std::uint64_t ctr = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const double M = 0.5 + static_cast<double>(s.value(ctr++) % 8);
    const double e = 0.02 + 0.01 * static_cast<double>(s.value(ctr++) % 20);
    const double d = 0.05 + 0.01 * static_cast<double>(s.value(ctr++) % 50);
    const double f = static_cast<double>(s.value(ctr++) % 12);
    CHECK(hoeffding_T(M, e, d, f) <= hoeffding_T(M + 1, e, d, f));
    CHECK(hoeffding_T(M, e, d, f) >= hoeffding_T(M, e * 1.5, d, f));
    CHECK(hoeffding_T(M, e, d, f) >= hoeffding_T(M, e, d * 2, f));
    CHECK(hoeffding_T(M, e, d, f) <= hoeffding_T(M, e, d, f + 1));
  }
}

TEST_CASE("tensor amplification reports") {
  const Distribution a = Distribution::point_mass(BitString::parse("0"));
  const Distribution b = Distribution::point_mass(BitString::parse("1"));
  const auto reports = verify_tensor_amplification(a, b, 1, 2);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.holds);
    CHECK(r.observed == "1");
  }

  const Distribution p(1, {{0, Rational(3, 4)}, {1, Rational(1, 4)}});
  const Distribution q(1, {{0, Rational(1, 4)}, {1, Rational(3, 4)}});
  const auto rs = verify_tensor_amplification(p, q, 1, 6);
  CHECK(rs[1].observed == "1/2");   // t = 2
  CHECK(rs[1].predicted < 0);       // vacuous bound
  for (const auto& r : rs) CHECK(r.holds);

  // Precondition: SD must exceed 1/(2 eps).
  CHECK_THROWS_AS(verify_tensor_amplification(p, p, 1, 2), DomainError);
  CHECK_THROWS_AS(verify_tensor_amplification(p, q, 1, 30), DomainError);
}

TEST_CASE("likelihood dominance mass exceeds the SD threshold") {
  const rng::Stream s(77);
  std::uint64_t ctr = 0;
  int hits = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const int w = 1 + static_cast<int>(s.value(ctr++) % 3);
    const Distribution p = random_distribution(w, s, ctr);
    const Distribution q = random_distribution(w, s, ctr);
    const Rational sd = statistical_distance(p, q);
    for (const Rational alpha :
         {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      if (sd > alpha) {
        ++hits;
        CHECK(likelihood_dominance_holds(p, q, alpha));
        CHECK(likelihood_dominance_mass(p, q) > alpha);
      }
    }
  }
  CHECK(hits > 100);
}

TEST_CASE("empirical uniform convergence harness") {
  const auto fam = and_family();
  const BitString z(0, 0);

  std::vector<TestFn> fns;
  fns.push_back({"zero", [](const BitString&) { return 0.0; }});
  BoundReport r = verify_hoeffding_empirical(*fam, z, fns, 0.05, 0.1, 120, 5);
  CHECK(r.holds);

  fns.clear();
  fns.push_back({"ind1", [](const BitString& x) {
                   return x.value() == 1 ? 1.0 : 0.0;
                 }});
  fns.push_back({"ind0", [](const BitString& x) {
                   return x.value() == 0 ? 1.0 : 0.0;
                 }});
  r = verify_hoeffding_empirical(*fam, z, fns, 0.05, 0.1, 120, 6);
  CHECK(r.holds);

  // delta = 1 is vacuous.
  r = verify_hoeffding_empirical(*fam, z, fns, 0.001, 1.0, 100, 7);
  CHECK(r.holds);
}

TEST_CASE("wilson lower bound sanity") {
  CHECK(wilson_lower(1.0, 100, 2.5758) > 0.9);
  CHECK(wilson_lower(1.0, 100, 2.5758) < 1.0);
  CHECK(wilson_lower(0.5, 100, 2.5758) < 0.5);
  CHECK(wilson_lower(0.0, 100, 2.5758) >= 0.0);
}
