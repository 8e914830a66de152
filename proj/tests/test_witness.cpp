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

#include "bellmagic/witness.hpp"

#include <cmath>
#include <random>
#include <set>

#include <doctest.h>

#include "bellmagic/channels.hpp"

using namespace bellmagic;
using polytopes::FacetClass;
using polytopes::TableFunctional;
using qcore::CGTable;
using qcore::Pauli;
using witness::Criterion;
using witness::Family;
using witness::Verdict;

namespace {

const witness::WitnessContext& ctx() {
  static const auto c = witness::WitnessContext::make();
  return c;
}

TableFunctional from_ints(const std::array<std::array<int, 4>, 4>& m) {
  TableFunctional f;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      f.coeff[r][c] = m[r][c];
    }
  }
  return f;
}

std::size_t facet_index_of(const polytopes::PolytopeData& poly,
                           const TableFunctional& f) {
  for (std::size_t i = 0; i < poly.facets.size(); ++i) {
    if (poly.facets[i].functional == f) {
      return i;
    }
  }
  FAIL("functional not found in facet list");
  return 0;
}

}  // namespace

TEST_CASE("the pairing is a bijection with the promised difference shape") {
  REQUIRE(ctx().pairings.size() == 72);
  std::set<std::size_t> chsh_seen, beta_seen;
  for (const auto& p : ctx().pairings) {
    CHECK(ctx().lhv.facets[p.chsh_index].cls == FacetClass::kChsh);
    CHECK(ctx().clifford.facets[p.beta_index].cls == FacetClass::kBeta);
    chsh_seen.insert(p.chsh_index);
    beta_seen.insert(p.beta_index);

    // chsh = beta + E_00 - sign * E_(second,first), exactly.
    const auto& chsh = ctx().lhv.facets[p.chsh_index].functional;
    const auto& beta = ctx().clifford.facets[p.beta_index].functional;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        Rational expect = beta.coeff[r][c];
        if (r == 0 && c == 0) {
          expect += 1;
        }
        if (r == static_cast<int>(p.second) && c == static_cast<int>(p.first)) {
          expect -= p.sign;
        }
        CHECK(chsh.coeff[r][c] == expect);
      }
    }
  }
  CHECK(chsh_seen.size() == 72);
  CHECK(beta_seen.size() == 72);
}

TEST_CASE("the canonical CHSH facet pairs with the canonical beta facet") {
  const std::size_t chsh_index =
      facet_index_of(ctx().lhv, polytopes::chsh_facet());
  const auto& p = witness::paired_beta_facet(ctx(), chsh_index);
  CHECK(ctx().clifford.facets[p.beta_index].functional ==
        polytopes::beta_facet());
  CHECK(p.first == Pauli::Z);
  CHECK(p.second == Pauli::Z);
  CHECK(p.sign == 1);

  CHECK_THROWS_AS(
      witness::paired_beta_facet(
          ctx(), facet_index_of(ctx().lhv, polytopes::positivity_facet())),
      std::invalid_argument);
}

TEST_CASE("pairing lookups by either side agree") {
  for (const auto& p : ctx().pairings) {
    CHECK(ctx().pairing_for_chsh(p.chsh_index).beta_index == p.beta_index);
    CHECK(ctx().pairing_for_beta(p.beta_index).chsh_index == p.chsh_index);
  }
  CHECK_THROWS_AS(ctx().pairing_for_beta(999), std::invalid_argument);
}

TEST_CASE("recommend_measurement reads the extra correlation entry") {
  const auto rec = witness::recommend_measurement(polytopes::beta_facet());
  CHECK(rec.first == Pauli::Z);
  CHECK(rec.second == Pauli::Z);
  CHECK(rec.sign == 1);

  CHECK_THROWS_AS(witness::recommend_measurement(polytopes::chsh_facet()),
                  std::invalid_argument);
  CHECK_THROWS_AS(witness::recommend_measurement(polytopes::alpha_facet()),
                  std::invalid_argument);
}

TEST_CASE("chsh_scan lists each CHSH facet once, in index order") {
  const CGTable t = channels::dephased_phase_table(M_PI / 4, 0.0);
  const auto reports = witness::chsh_scan(ctx(), t);
  REQUIRE(reports.size() == 72);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i - 1].facet_index < reports[i].facet_index);
  }
  std::size_t violated = 0;
  for (const auto& r : reports) {
    CHECK(r.cls == FacetClass::kChsh);
    CHECK(r.violated == (r.value < -witness::kViolationTol));
    violated += r.violated;
  }
  CHECK(violated > 0);
}

TEST_CASE("min_facet_value finds the tightest facet of a class") {
  const CGTable t = channels::dephased_phase_table(M_PI / 4, 0.0);
  const auto best = witness::min_facet_value(ctx().lhv, t, FacetClass::kChsh);
  // The CHSH value of the clean pi/8 gate pair is 2 - 2 sqrt(2) in facet
  // normalization.
  CHECK(best.value == doctest::Approx(2 - 2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(best.violated);

  CHECK_THROWS_AS(
      witness::min_facet_value(ctx().lhv, t, FacetClass::kAlpha),
      std::invalid_argument);  // class absent from this polytope
}

TEST_CASE("paired beta dominates CHSH on random channels") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const auto e = channels::sample_cptp_channel(rng, 1 + i % 4);
    const auto rep = witness::beta_dominance(ctx(), channels::cg_table(e));
    CHECK(rep.holds);
  }
}

TEST_CASE("dominance identity on arbitrary sign tables") {
  // beta = chsh - 1 + sign * entry holds as an identity of functionals, so
  // it is valid even outside the quantum set; check on random [-1,1] tables.
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    CGTable t{};
    t.entries[0][0] = 1.0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (r || c) {
          t.entries[r][c] = u(rng);
        }
      }
    }
    for (const auto& p : ctx().pairings) {
      const double chsh = ctx().lhv.facets[p.chsh_index].functional.evaluate(t);
      const double beta =
          ctx().clifford.facets[p.beta_index].functional.evaluate(t);
      const double entry = t.value(p.first, p.second);
      CHECK(beta ==
            doctest::Approx(chsh - 1 + p.sign * entry).epsilon(1e-12));
      CHECK(beta <= chsh + 1e-12);
    }
  }
}

TEST_CASE("uqc verdict: a Clifford mixture is certified inside") {
  const auto mix = channels::make_clifford_mixture(std::map<std::string, double>{
      {"H", 1.0 / 3}, {"S", 1.0 / 4}, {"I", 5.0 / 12}});
  const auto rep = witness::uqc_witness(ctx(), channels::cg_table(mix));
  CHECK(rep.verdict == Verdict::kCliffordMixture);
  CHECK(rep.alpha_violations.empty());
  CHECK(rep.beta_violations.empty());
  REQUIRE(rep.weights.size() == 24);

  // The certificate must reproduce the rationalized table exactly.
  Rational total = 0;
  geometry::RVec combo(qcore::kTableDim, Rational(0));
  for (std::size_t i = 0; i < rep.weights.size(); ++i) {
    CHECK(rep.weights[i] >= 0);
    total += rep.weights[i];
    for (std::size_t d = 0; d < combo.size(); ++d) {
      combo[d] += rep.weights[i] * ctx().clifford.vertices.vertices[i][d];
    }
  }
  CHECK(total == 1);
  CHECK(combo == rep.coords);
}

TEST_CASE("uqc verdict: the identity channel sits on the boundary, inside") {
  const auto rep = witness::uqc_witness(
      ctx(), channels::cg_table(channels::Channel(
                 {Eigen::Matrix2cd::Identity()})));
  CHECK(rep.verdict == Verdict::kCliffordMixture);
}

TEST_CASE("uqc verdict: clean and noisy pi/8 gates violate a beta facet") {
  SUBCASE("clean gate: CHSH also violated") {
    const auto rep = witness::uqc_witness(
        ctx(), channels::dephased_phase_table(M_PI / 4, 0.0));
    CHECK(rep.verdict == Verdict::kBetaViolation);
    REQUIRE(rep.measurement.has_value());
    CHECK(rep.measurement->first == Pauli::Z);
    CHECK(rep.measurement->second == Pauli::Z);
    CHECK(rep.measurement->sign == 1);
    REQUIRE(rep.witness_facet.has_value());
    CHECK(ctx().clifford.facets[*rep.witness_facet].cls == FacetClass::kBeta);
    REQUIRE(rep.separator.has_value());
    // The separator is an exact witness: nonnegative on every vertex,
    // negative at the table.
    for (const auto& v : ctx().clifford.vertices.vertices) {
      CHECK(rep.separator->evaluate(v) >= 0);
    }
    CHECK(rep.separator->evaluate(rep.coords) < 0);
  }
  SUBCASE("depolarized gate in the window: no Bell violation, still useful") {
    const CGTable t = witness::family_table(Family::kDepolarizedPhase,
                                            M_PI / 4, 0.35);
    const auto rep = witness::uqc_witness(ctx(), t);
    CHECK(rep.verdict == Verdict::kBetaViolation);
    CHECK(!witness::min_facet_value(ctx().lhv, t, FacetClass::kChsh).violated);
  }
}

TEST_CASE("uqc verdict: amplitude damping escapes every facet unseen") {
  // gamma = 1/2: non-unital, outside the polytope, yet all 120 facets are
  // satisfied because their local coefficients vanish.
  Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
  const double g = 0.5;
  k0(0, 0) = 1;
  k0(1, 1) = std::sqrt(1 - g);
  k1(0, 1) = std::sqrt(g);
  const channels::Channel damp({k0, k1});

  const auto rep = witness::uqc_witness(ctx(), channels::cg_table(damp));
  CHECK(rep.verdict == Verdict::kOutsideUndetected);
  CHECK(rep.alpha_violations.empty());
  CHECK(rep.beta_violations.empty());
  CHECK(rep.weights.empty());
  REQUIRE(rep.separator.has_value());
  for (const auto& v : ctx().clifford.vertices.vertices) {
    CHECK(rep.separator->evaluate(v) >= 0);
  }
  CHECK(rep.separator->evaluate(rep.coords) < 0);
}

TEST_CASE("uqc report serializes its certificates") {
  const auto rep = witness::uqc_witness(
      ctx(), channels::dephased_phase_table(M_PI / 4, 0.2));
  const auto j = witness::uqc_report_to_json(rep, ctx());
  CHECK(j.at("verdict") == "beta_violation");
  CHECK(j.at("coords").size() == qcore::kTableDim);
  CHECK(j.contains("witness_facet"));
  CHECK(j.at("measurement").at("first") == "Z");
  CHECK(j.contains("separator"));
  CHECK(!j.at("beta_violations").empty());
}

TEST_CASE("drop_local_terms zeroes exactly the six local coefficients") {
  const auto f = witness::drop_local_terms(polytopes::i3322_facet());
  CHECK(f.coeff[0][0] == 4);
  for (int k = 1; k < 4; ++k) {
    CHECK(f.coeff[0][k] == 0);
    CHECK(f.coeff[k][0] == 0);
  }
  CHECK(f.coeff[1][1] == polytopes::i3322_facet().coeff[1][1]);
}

TEST_CASE("the worked three-setting decomposition is reproduced") {
  // Zeroing the locals of the canonical three-setting facet leaves
  // [[4,0,0,0],[0,1,1,-1],[0,1,1,1],[0,-1,1,0]]; twice that splits into
  // these four two-setting facets.
  const TableFunctional zeroed = from_ints({{{{4, 0, 0, 0}},
                                             {{0, 1, 1, -1}},
                                             {{0, 1, 1, 1}},
                                             {{0, -1, 1, 0}}}});
  CHECK(witness::drop_local_terms(polytopes::i3322_facet()) == zeroed);

  const std::array<TableFunctional, 4> parts = {
      from_ints({{{{2, 0, 0, 0}},
                  {{0, 0, 0, 0}},
                  {{0, 1, 1, 0}},
                  {{0, -1, 1, 0}}}}),
      from_ints({{{{2, 0, 0, 0}},
                  {{0, 0, 1, -1}},
                  {{0, 0, 1, 1}},
                  {{0, 0, 0, 0}}}}),
      from_ints({{{{2, 0, 0, 0}},
                  {{0, 1, 0, -1}},
                  {{0, 1, 0, 1}},
                  {{0, 0, 0, 0}}}}),
      from_ints({{{{2, 0, 0, 0}},
                  {{0, 1, 1, 0}},
                  {{0, 0, 0, 0}},
                  {{0, -1, 1, 0}}}})};
  TableFunctional sum{};
  for (const auto& part : parts) {
    CHECK(polytopes::classify_lhv_facet(part) == FacetClass::kChsh);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        sum.coeff[r][c] += part.coeff[r][c];
      }
    }
  }
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(sum.coeff[r][c] == 2 * zeroed.coeff[r][c]);
    }
  }
}

TEST_CASE("every three-setting facet decomposes into four CHSH facets") {
  std::size_t done = 0;
  for (std::size_t i = 0; i < ctx().lhv.facets.size(); ++i) {
    if (ctx().lhv.facets[i].cls != FacetClass::kI3322) {
      continue;
    }
    const auto d = witness::decompose_3322(ctx(), i);
    const TableFunctional target = witness::drop_local_terms(
        ctx().lhv.facets[i].functional);
    TableFunctional sum{};
    for (const std::size_t k : d.chsh_indices) {
      CHECK(ctx().lhv.facets[k].cls == FacetClass::kChsh);
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          sum.coeff[r][c] += ctx().lhv.facets[k].functional.coeff[r][c];
        }
      }
    }
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        CHECK(sum.coeff[r][c] == 2 * target.coeff[r][c]);
      }
    }
    ++done;
  }
  CHECK(done == 576);

  const std::size_t chsh_index =
      facet_index_of(ctx().lhv, polytopes::chsh_facet());
  CHECK_THROWS_AS(witness::decompose_3322(ctx(), chsh_index),
                  std::invalid_argument);
}

TEST_CASE("name maps round trip") {
  CHECK(witness::family_from_name(witness::family_name(
            Family::kDephasedPhase)) == Family::kDephasedPhase);
  CHECK(witness::criterion_from_name(witness::criterion_name(
            Criterion::kMembership)) == Criterion::kMembership);
  CHECK_THROWS_AS(witness::family_from_name("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(witness::criterion_from_name("bogus"),
                  std::invalid_argument);
}

TEST_CASE("criterion_fires agrees with direct evaluation") {
  const CGTable clean = witness::family_table(Family::kDephasedPhase,
                                              M_PI / 4, 0.0);
  CHECK(witness::criterion_fires(ctx(), Criterion::kChsh, clean));
  CHECK(witness::criterion_fires(ctx(), Criterion::kBeta, clean));
  CHECK(witness::criterion_fires(ctx(), Criterion::kMembership, clean));

  const CGTable noisy = witness::family_table(Family::kDephasedPhase,
                                              M_PI / 4, 2.0);
  CHECK(!witness::criterion_fires(ctx(), Criterion::kChsh, noisy));
  CHECK(!witness::criterion_fires(ctx(), Criterion::kBeta, noisy));

  const CGTable depol = witness::family_table(Family::kDepolarizedPhase,
                                              M_PI / 4, 0.6);
  CHECK(!witness::criterion_fires(ctx(), Criterion::kMembership, depol));
}

TEST_CASE("threshold bisection reproduces the closed-form critical points") {
  SUBCASE("dephasing: both criteria flip at sqrt(ln 2)") {
    const double expected = std::sqrt(std::log(2.0));
    const auto chsh = witness::threshold_scan(
        ctx(), Family::kDephasedPhase, M_PI / 4, Criterion::kChsh, 0.4, 1.4);
    const auto beta = witness::threshold_scan(
        ctx(), Family::kDephasedPhase, M_PI / 4, Criterion::kBeta, 0.4, 1.4);
    CHECK(chsh.parameter == "s");
    CHECK(std::abs(chsh.critical - expected) < 2e-9);
    CHECK(std::abs(beta.critical - expected) < 2e-9);
    CHECK(chsh.bracket_width <= 1e-9);
    CHECK(chsh.iterations <= 60);
  }
  SUBCASE("depolarizing: CHSH flips at 1 - 1/sqrt(2)") {
    const auto th = witness::threshold_scan(ctx(), Family::kDepolarizedPhase,
                                            M_PI / 4, Criterion::kChsh, 0.1,
                                            0.5);
    CHECK(th.parameter == "p");
    CHECK(std::abs(th.critical - (1 - 1 / std::sqrt(2.0))) < 2e-9);
  }
  SUBCASE("depolarizing: beta and membership flip together near 0.453") {
    const auto beta = witness::threshold_scan(
        ctx(), Family::kDepolarizedPhase, M_PI / 4, Criterion::kBeta, 0.3,
        0.6);
    const auto mem = witness::threshold_scan(
        ctx(), Family::kDepolarizedPhase, M_PI / 4, Criterion::kMembership,
        0.3, 0.6);
    // 1 - 1/(2 sqrt(2) - 1), where the smallest beta value changes sign.
    const double expected = 1 - 1 / (2 * std::sqrt(2.0) - 1);
    CHECK(std::abs(beta.critical - expected) < 2e-9);
    CHECK(std::abs(mem.critical - expected) < 2e-9);
  }
  SUBCASE("non-bracketing ranges are rejected") {
    CHECK_THROWS_AS(
        witness::threshold_scan(ctx(), Family::kDephasedPhase, M_PI / 4,
                                Criterion::kChsh, 1.0, 1.4),
        std::invalid_argument);
    CHECK_THROWS_AS(
        witness::threshold_scan(ctx(), Family::kDephasedPhase, M_PI / 4,
                                Criterion::kChsh, 0.9, 0.4),
        std::invalid_argument);
  }
}

TEST_CASE("inside the depolarizing window: UQC without any Bell violation") {
  for (const double p : {0.30, 0.35, 0.40, 0.44}) {
    const CGTable t = witness::family_table(Family::kDepolarizedPhase,
                                            M_PI / 4, p);
    CHECK(witness::criterion_fires(ctx(), Criterion::kBeta, t));
    CHECK(!witness::criterion_fires(ctx(), Criterion::kChsh, t));
  }
}
