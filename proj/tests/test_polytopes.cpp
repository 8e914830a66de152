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

#include "bellmagic/polytopes.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <doctest.h>

#include "bellmagic/channels.hpp"

using namespace bellmagic;
using polytopes::FacetClass;
using polytopes::PolytopeData;
using polytopes::TableFunctional;
using qcore::CGTable;
using qcore::Pauli;

namespace {

const PolytopeData& lhv() {
  static const PolytopeData poly = polytopes::build_lhv_polytope();
  return poly;
}

const PolytopeData& clifford() {
  static const PolytopeData poly = polytopes::build_clifford_polytope();
  return poly;
}

CGTable to_cg(const std::array<std::array<int, 4>, 4>& t) {
  CGTable out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out.entries[r][c] = t[r][c];
    }
  }
  return out;
}

bool contains_functional(const PolytopeData& poly, const TableFunctional& f) {
  return std::any_of(
      poly.facets.begin(), poly.facets.end(),
      [&](const polytopes::ClassifiedFacet& cf) { return cf.functional == f; });
}

std::filesystem::path fresh_dir(const char* tag) {
  static std::mt19937_64 rng(std::random_device{}());
  const auto dir = std::filesystem::temp_directory_path() /
                   (std::string("bellmagic_") + tag + "_" +
                    std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("LHV polytope: 64 vertices, 684 facets in classes 36/72/576") {
  const auto& poly = lhv();
  CHECK(poly.vertices.vertices.size() == 64);
  CHECK(poly.hull.affine_dim == 15);
  CHECK(poly.hull.equalities.empty());
  REQUIRE(poly.facets.size() == 684);
  CHECK(poly.census.at(FacetClass::kPositivity) == 36);
  CHECK(poly.census.at(FacetClass::kChsh) == 72);
  CHECK(poly.census.at(FacetClass::kI3322) == 576);
}

TEST_CASE("Clifford polytope: 24 vertices, 120 facets in classes 48/72") {
  const auto& poly = clifford();
  CHECK(poly.vertices.vertices.size() == 24);
  CHECK(poly.hull.affine_dim == 9);
  CHECK(poly.hull.equalities.size() == 6);  // the six vanishing local rows
  REQUIRE(poly.facets.size() == 120);
  CHECK(poly.census.at(FacetClass::kAlpha) == 48);
  CHECK(poly.census.at(FacetClass::kBeta) == 72);
}

TEST_CASE("the canonical representatives appear verbatim in the facet lists") {
  CHECK(contains_functional(lhv(), polytopes::positivity_facet()));
  CHECK(contains_functional(lhv(), polytopes::chsh_facet()));
  CHECK(contains_functional(lhv(), polytopes::i3322_facet()));
  CHECK(contains_functional(clifford(), polytopes::alpha_facet()));
  CHECK(contains_functional(clifford(), polytopes::beta_facet()));
}

TEST_CASE("every vertex satisfies every facet of its polytope, exactly") {
  for (const PolytopeData* poly : {&lhv(), &clifford()}) {
    for (const auto& v : poly->vertices.vertices) {
      for (const auto& cf : poly->facets) {
        CHECK(cf.functional.evaluate_exact(v) >= 0);
      }
      for (const auto& eq : poly->hull.equalities) {
        CHECK(eq.evaluate(v) == 0);
      }
    }
  }
}

TEST_CASE("every facet is tight somewhere") {
  for (const PolytopeData* poly : {&lhv(), &clifford()}) {
    for (const auto& cf : poly->facets) {
      bool tight = false;
      for (const auto& v : poly->vertices.vertices) {
        if (cf.functional.evaluate_exact(v) == 0) {
          tight = true;
          break;
        }
      }
      CHECK(tight);
    }
  }
}

TEST_CASE("deterministic tables are rank-one sign tables") {
  const auto t = polytopes::deterministic_table({1, -1, 1}, {-1, 1, 1});
  CHECK(t[0][0] == 1);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int a = c == 0 ? 1 : std::array<int, 3>{1, -1, 1}[c - 1];
      const int b = r == 0 ? 1 : std::array<int, 3>{-1, 1, 1}[r - 1];
      CHECK(t[r][c] == a * b);
    }
  }
  CHECK_THROWS_AS(polytopes::deterministic_table({1, 2, 1}, {1, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("clifford vertex tables: correlation blocks are det -1 signed permutations") {
  const auto& group = qcore::clifford_group();
  std::set<std::vector<int>> blocks;
  for (const auto& e : group) {
    const auto t = polytopes::clifford_table(e);
    CHECK(t[0][0] == 1);
    for (int k = 1; k < 4; ++k) {
      CHECK(t[0][k] == 0);
      CHECK(t[k][0] == 0);
    }
    // Signed permutation: one nonzero per row and column, det -1.
    std::vector<int> flat;
    int det = 0;
    std::array<std::array<int, 3>, 3> m{};
    for (int r = 1; r < 4; ++r) {
      int nonzero = 0;
      for (int c = 1; c < 4; ++c) {
        m[r - 1][c - 1] = t[r][c];
        flat.push_back(t[r][c]);
        if (t[r][c] != 0) {
          ++nonzero;
          CHECK(std::abs(t[r][c]) == 1);
        }
      }
      CHECK(nonzero == 1);
    }
    det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(det == -1);
    blocks.insert(flat);
  }
  CHECK(blocks.size() == 24);  // all distinct; these are exactly the vertices
}

TEST_CASE("identity and Hadamard tables match the textbook values") {
  const auto& group = qcore::clifford_group();
  const auto id = to_cg(polytopes::clifford_table(group.front()));
  CHECK(id.value(Pauli::X, Pauli::X) == 1);
  CHECK(id.value(Pauli::Y, Pauli::Y) == -1);
  CHECK(id.value(Pauli::Z, Pauli::Z) == 1);

  // A worked spot check of the two defining examples: the CHSH functional
  // vanishes on the identity's table, and the canonical beta functional
  // reaches 2 on the Hadamard's.
  CHECK(polytopes::chsh_facet().evaluate(id) == doctest::Approx(0.0));
  for (const auto& e : group) {
    if (e.name() == "H") {
      const auto h = to_cg(polytopes::clifford_table(e));
      CHECK(polytopes::beta_facet().evaluate(h) == doctest::Approx(2.0));
    }
  }
}

TEST_CASE("clifford tables agree with the channel pipeline") {
  for (const auto& e : qcore::clifford_group()) {
    const CGTable via_channel =
        channels::cg_table(channels::Channel({e.matrix()}));
    const CGTable direct = to_cg(polytopes::clifford_table(e));
    CHECK(CGTable::max_abs_diff(via_channel, direct) < 1e-12);
  }
}

TEST_CASE("every Clifford vertex lies inside the LHV polytope") {
  for (const auto& v : clifford().vertices.vertices) {
    for (const auto& cf : lhv().facets) {
      CHECK(cf.functional.evaluate_exact(v) >= 0);
    }
  }
}

TEST_CASE("axis relabelings: 48 signed permutations, 24 rotations") {
  const auto& all = polytopes::all_axis_relabelings();
  const auto& rot = polytopes::rotation_relabelings();
  CHECK(all.size() == 48);
  CHECK(rot.size() == 24);
  std::set<std::string> keys;
  for (const auto& r : all) {
    std::string k;
    for (const auto& sp : r) {
      k += (sp.sign > 0 ? '+' : '-');
      k += qcore::pauli_name(sp.label);
    }
    keys.insert(k);
  }
  CHECK(keys.size() == 48);
}

TEST_CASE("relabeling preserves facet class and functional values") {
  std::mt19937_64 rng(5);
  const auto& all = polytopes::all_axis_relabelings();
  const auto t = polytopes::deterministic_table({1, -1, 1}, {-1, -1, 1});

  for (int k = 0; k < 10; ++k) {
    const auto& r1 = all[rng() % all.size()];
    const auto& r2 = all[rng() % all.size()];
    const TableFunctional f = polytopes::relabel(polytopes::chsh_facet(), r1, r2);
    CHECK(polytopes::classify_lhv_facet(f) == FacetClass::kChsh);
    CHECK(contains_functional(lhv(), f));
  }
  // Swapping factors twice is the identity, and a swap keeps the class.
  const TableFunctional swapped = polytopes::swap_factors(polytopes::i3322_facet());
  CHECK(polytopes::classify_lhv_facet(swapped) == FacetClass::kI3322);
  CHECK(polytopes::swap_factors(swapped) == polytopes::i3322_facet());
  (void)t;
}

TEST_CASE("classification rejects functionals outside every orbit") {
  TableFunctional junk{};
  junk.coeff[0][0] = 3;
  junk.coeff[1][1] = 1;
  junk.coeff[2][2] = 1;
  CHECK_THROWS_AS(polytopes::classify_lhv_facet(junk), std::invalid_argument);
  CHECK_THROWS_AS(polytopes::classify_clifford_facet(junk),
                  std::invalid_argument);
}

TEST_CASE("polytope JSON round trip preserves everything") {
  for (const PolytopeData* poly : {&clifford(), &lhv()}) {
    const PolytopeData back =
        polytopes::polytope_from_json(polytopes::polytope_to_json(*poly));
    CHECK(back.name == poly->name);
    CHECK(back.vertex_hash == poly->vertex_hash);
    CHECK(back.facet_hash == poly->facet_hash);
    CHECK(back.census == poly->census);
    CHECK(back.hull.facets == poly->hull.facets);
    CHECK(back.vertices.vertices == poly->vertices.vertices);
  }
}

TEST_CASE("cache: second load is identical, tampering is caught") {
  const auto dir = fresh_dir("cache");
  const auto first = polytopes::load_or_build_clifford(dir);
  const auto file = dir / "clifford_facets.json";
  REQUIRE(std::filesystem::exists(file));

  const auto second = polytopes::load_or_build_clifford(dir);
  CHECK(second.facet_hash == first.facet_hash);
  CHECK(second.hull.facets == first.hull.facets);

  // Flip one digit inside the stored hull and reload.
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = text.find("\"-1\"");
  REQUIRE(pos != std::string::npos);
  std::string tampered = text;
  tampered.replace(pos, 4, "\"-2\"");
  {
    std::ofstream out(file);
    out << tampered;
  }

  SUBCASE("strict mode refuses the file") {
    CHECK_THROWS_AS(
        polytopes::load_or_build_clifford(dir, polytopes::CacheMode::kStrict),
        std::runtime_error);
  }
  SUBCASE("validated mode rebuilds and overwrites") {
    const auto rebuilt =
        polytopes::load_or_build_clifford(dir, polytopes::CacheMode::kValidated);
    CHECK(rebuilt.facet_hash == first.facet_hash);
    std::ifstream in(file);
    std::string now(std::istreambuf_iterator<char>(in), {});
    CHECK(now == text);  // the damaged file was replaced by a fresh dump
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("facet class names round trip") {
  for (const FacetClass c :
       {FacetClass::kPositivity, FacetClass::kChsh, FacetClass::kI3322,
        FacetClass::kAlpha, FacetClass::kBeta}) {
    CHECK(polytopes::facet_class_from_name(polytopes::facet_class_name(c)) ==
          c);
  }
  CHECK_THROWS_AS(polytopes::facet_class_from_name("gamma"),
                  std::invalid_argument);
}
