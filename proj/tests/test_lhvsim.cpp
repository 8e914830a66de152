// Copyright 2026 The bellmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellmagic/lhvsim.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <string>

#include <doctest.h>

#include "bellmagic/geometry.hpp"
#include "bellmagic/polytopes.hpp"
#include "bellmagic/qcore.hpp"

using namespace bellmagic;
using lhvsim::LHVRuleSet;
using qcore::CGTable;
using qcore::Pauli;

namespace {

LHVRuleSet random_ruleset(std::mt19937_64& rng) {
  LHVRuleSet r;
  for (int p = 0; p < 2; ++p) {
    for (int s = 0; s < 3; ++s) {
      for (int l = 0; l < 8; ++l) {
        r.outputs[p][s][l] = (rng() & 1) ? 1 : -1;
      }
    }
  }
  return r;
}

const geometry::VPolytope& lhv_hull() {
  static const geometry::VPolytope vp = polytopes::lhv_vertices();
  return vp;
}

}  // namespace

TEST_CASE("the phi ruleset reproduces the maximally entangled table") {
  const CGTable got = lhvsim::exact_table(lhvsim::phi_ruleset());
  // (|00> + |11>)(<00| + <11|)/2 written with exact dyadic entries, so the
  // expectation table comes out as exact +/-1 and 0 doubles.
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
  const CGTable want = qcore::cg_table(qcore::TwoQubitState(rho));
  CHECK(got == want);
  CHECK(got.value(Pauli::X, Pauli::X) == 1.0);
  CHECK(got.value(Pauli::Y, Pauli::Y) == -1.0);
  CHECK(got.value(Pauli::Z, Pauli::Z) == 1.0);
  CHECK(got.value(Pauli::X, Pauli::Z) == 0.0);
  CHECK(got.value(Pauli::X, Pauli::I) == 0.0);
}

TEST_CASE("constant rules give a deterministic local vertex") {
  LHVRuleSet r;
  const int first[3] = {1, -1, 1};   // a = (+1, -1, +1)
  const int second[3] = {-1, -1, 1}; // b = (-1, -1, +1)
  for (int s = 0; s < 3; ++s) {
    for (int l = 0; l < 8; ++l) {
      r.outputs[0][s][l] = static_cast<std::int8_t>(first[s]);
      r.outputs[1][s][l] = static_cast<std::int8_t>(second[s]);
    }
  }
  const CGTable t = lhvsim::exact_table(r);
  const auto want = polytopes::deterministic_table({1, -1, 1}, {-1, -1, 1});
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      CHECK(t.entries[row][col] == static_cast<double>(want[row][col]));
    }
  }
}

TEST_CASE("every ruleset average lies in the local polytope") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 12; ++i) {
    const CGTable t = lhvsim::exact_table(random_ruleset(rng));
    const auto cert = geometry::lp_membership(t.exact_coords(), lhv_hull());
    CHECK(geometry::is_inside(cert));
  }
}

TEST_CASE("sampling is reproducible and converges to the exact average") {
  std::mt19937_64 rng(1993);
  const LHVRuleSet rules = random_ruleset(rng);
  const CGTable exact = lhvsim::exact_table(rules);

  SUBCASE("the same seed gives bitwise identical tables") {
    const CGTable a = lhvsim::sample_table(rules, 4096, 77);
    const CGTable b = lhvsim::sample_table(rules, 4096, 77);
    CHECK(a == b);
    const CGTable c = lhvsim::sample_table(rules, 4096, 78);
    CHECK(a != c);
  }

  SUBCASE("n = 0 is rejected") {
    CHECK_THROWS_AS(lhvsim::sample_table(rules, 0, 1), std::invalid_argument);
  }

  SUBCASE("a single draw answers +/-1 in every cell") {
    const CGTable t = lhvsim::sample_table(rules, 1, 5);
    CHECK(t.entries[0][0] == 1.0);
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        if (row == 0 && col == 0) continue;
        CHECK(std::abs(t.entries[row][col]) == 1.0);
      }
    }
  }

  SUBCASE("deviation shrinks roughly like 1/sqrt(n)") {
    const double d3 = CGTable::max_abs_diff(
        exact, lhvsim::sample_table(rules, 1000, 11));
    const double d5 = CGTable::max_abs_diff(
        exact, lhvsim::sample_table(rules, 100000, 11));
    CHECK(d3 < 0.2);
    CHECK(d5 < 0.02);
    CHECK(d5 < d3);
  }

  SUBCASE("a million draws land within 0.005") {
    const CGTable t = lhvsim::sample_table(rules, 1000000, 2026);
    CHECK(CGTable::max_abs_diff(exact, t) < 0.005);
  }
}

TEST_CASE("sampled phi correlations keep their deterministic products") {
  // Under the phi rules XX, YY and ZZ are products of identical (or negated)
  // bits, so they are exactly +/-1 in every single draw regardless of n.
  const CGTable t = lhvsim::sample_table(lhvsim::phi_ruleset(), 100, 9);
  CHECK(t.value(Pauli::X, Pauli::X) == 1.0);
  CHECK(t.value(Pauli::Y, Pauli::Y) == -1.0);
  CHECK(t.value(Pauli::Z, Pauli::Z) == 1.0);
}

TEST_CASE("there are exactly 60 two-qubit stabilizer states") {
  const auto tables = lhvsim::stabilizer_state_tables();
  REQUIRE(tables.size() == 60);

  const CGTable phi = lhvsim::exact_table(lhvsim::phi_ruleset());
  std::size_t phi_hits = 0;
  std::size_t inside = 0;
  for (const auto& t : tables) {
    CHECK(t.entries[0][0] == 1.0);
    if (t == phi) ++phi_hits;
    if (geometry::is_inside(geometry::lp_membership(t.exact_coords(),
                                                    lhv_hull()))) {
      ++inside;
    }
  }
  CHECK(phi_hits == 1);  // the orbit contains |phi> itself
  CHECK(inside == 60);   // stabilizer correlations never violate locality
}

TEST_CASE("stabilizer tables are distinct with entries in {-1, 0, +1}") {
  const auto tables = lhvsim::stabilizer_state_tables();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (const auto& row : tables[i].entries) {
      for (const double v : row) {
        CHECK(v == std::round(v));  // a stabilizer expectation is 0 or +/-1
        CHECK(std::abs(v) <= 1.0);
      }
    }
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      CHECK(tables[i] != tables[j]);
    }
  }
}

TEST_CASE("ruleset JSON round trip") {
  std::mt19937_64 rng(4242);
  const LHVRuleSet rules = random_ruleset(rng);
  const auto j = lhvsim::ruleset_to_json(rules);
  const LHVRuleSet back = lhvsim::ruleset_from_json(j);
  CHECK(std::memcmp(rules.outputs, back.outputs, sizeof rules.outputs) == 0);

  SUBCASE("wrong array length is rejected") {
    auto bad = j;
    bad["first"]["X"] = {1, -1, 1};
    CHECK_THROWS_AS(lhvsim::ruleset_from_json(bad), std::invalid_argument);
  }
  SUBCASE("non-sign values are rejected") {
    auto bad = j;
    bad["second"]["Z"][3] = 0;
    CHECK_THROWS_AS(lhvsim::ruleset_from_json(bad), std::invalid_argument);
  }
  SUBCASE("missing keys are rejected") {
    auto bad = j;
    bad["first"].erase("Y");
    CHECK_THROWS(lhvsim::ruleset_from_json(bad));
  }
}

TEST_CASE("the generator id names the seed expansion") {
  CHECK(std::string(lhvsim::kGeneratorId) == "splitmix64:mt19937_64");
}
