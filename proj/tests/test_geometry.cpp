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

#include "bellmagic/geometry.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <doctest.h>

using namespace bellmagic;
using geometry::HPolytope;
using geometry::RVec;
using geometry::VPolytope;

namespace {

VPolytope hypercube(std::size_t dim) {
  VPolytope vp;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    RVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = (mask >> i) & 1 ? 1 : -1;
    }
    vp.vertices.push_back(std::move(v));
  }
  return vp;
}

VPolytope cross_polytope(std::size_t dim) {
  VPolytope vp;
  for (std::size_t i = 0; i < dim; ++i) {
    for (const int s : {1, -1}) {
      RVec v(dim, Rational(0));
      v[i] = s;
      vp.vertices.push_back(std::move(v));
    }
  }
  return vp;
}

RVec centroid(const VPolytope& vp) {
  RVec c(vp.ambient_dim(), Rational(0));
  for (const auto& v : vp.vertices) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] += v[i];
    }
  }
  for (auto& x : c) {
    x /= static_cast<int>(vp.vertices.size());
  }
  return c;
}

// A facet list is sound and complete for a vertex set iff (a) every vertex
// satisfies every inequality, (b) every inequality is tight on an
// affinely-(d-1)-dimensional subset of vertices, and (c) the double
// description in the reverse direction reproduces exactly the extreme
// points. (c) is the completeness half: a missing facet would admit a
// spurious vertex, an extra one would have been dropped as redundant.
void check_duality(const VPolytope& vp, const HPolytope& hp) {
  for (const auto& v : vp.vertices) {
    for (const auto& f : hp.facets) {
      CHECK(f.evaluate(v) >= 0);
    }
    for (const auto& e : hp.equalities) {
      CHECK(e.evaluate(v) == 0);
    }
  }
  auto recovered = geometry::vertex_enumeration(hp);
  auto expected = vp.vertices;
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()),
                 expected.end());
  CHECK(recovered == expected);
}

}  // namespace

TEST_CASE("cube: 8 vertices give 6 facets") {
  const VPolytope cube = hypercube(3);
  const HPolytope hp = geometry::facet_enumeration(cube);
  CHECK(hp.ambient_dim == 3);
  CHECK(hp.affine_dim == 3);
  CHECK(hp.facets.size() == 6);
  CHECK(hp.equalities.empty());
  check_duality(cube, hp);
}

TEST_CASE("cross-polytope: 6 vertices give 8 facets") {
  const VPolytope oct = cross_polytope(3);
  const HPolytope hp = geometry::facet_enumeration(oct);
  CHECK(hp.facets.size() == 8);
  check_duality(oct, hp);
}

TEST_CASE("3-simplex has 4 facets") {
  VPolytope vp;
  vp.vertices = {{Rational(0), Rational(0), Rational(0)},
                 {Rational(1), Rational(0), Rational(0)},
                 {Rational(0), Rational(1), Rational(0)},
                 {Rational(0), Rational(0), Rational(1)}};
  const HPolytope hp = geometry::facet_enumeration(vp);
  CHECK(hp.facets.size() == 4);
  check_duality(vp, hp);
}

TEST_CASE("flat square embedded in 3-space gets one equality") {
  VPolytope vp;
  for (const int x : {-1, 1}) {
    for (const int y : {-1, 1}) {
      vp.vertices.push_back({Rational(x), Rational(y), Rational(2)});
    }
  }
  const HPolytope hp = geometry::facet_enumeration(vp);
  CHECK(hp.ambient_dim == 3);
  CHECK(hp.affine_dim == 2);
  CHECK(hp.facets.size() == 4);
  REQUIRE(hp.equalities.size() == 1);
  // z = 2, up to normalization.
  const auto& e = hp.equalities.front();
  CHECK(e.normal[0] == 0);
  CHECK(e.normal[1] == 0);
  CHECK(e.evaluate({Rational(5), Rational(-7), Rational(2)}) == 0);
  check_duality(vp, hp);
}

TEST_CASE("facet set does not depend on vertex order") {
  VPolytope cube = hypercube(3);
  const HPolytope reference = geometry::facet_enumeration(cube);
  std::mt19937_64 rng(99);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(cube.vertices.begin(), cube.vertices.end(), rng);
    const HPolytope hp = geometry::facet_enumeration(cube);
    CHECK(hp.facets == reference.facets);
    CHECK(hp.equalities == reference.equalities);
  }
}

TEST_CASE("duality round trip on random 0/1 polytopes") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    std::uniform_int_distribution<int> bit(0, 1);
    const std::size_t dim = 3 + trial % 2;
    const std::size_t count =
        std::min<std::size_t>(5 + static_cast<std::size_t>(trial) % 6,
                              std::size_t{1} << dim);
    std::set<RVec> distinct;
    while (distinct.size() < count) {
      RVec v(dim);
      for (auto& x : v) {
        x = bit(rng);
      }
      distinct.insert(std::move(v));
    }
    VPolytope vp;
    vp.vertices.assign(distinct.begin(), distinct.end());
    // vertex_enumeration returns extreme points only, so round-trip through
    // the facet system compares against the hull's true vertex set.
    const HPolytope hp = geometry::facet_enumeration(vp);
    const auto extremes = geometry::vertex_enumeration(hp);
    for (const auto& v : extremes) {
      CHECK(std::find(vp.vertices.begin(), vp.vertices.end(), v) !=
            vp.vertices.end());
    }
    const HPolytope hp2 = geometry::facet_enumeration(
        VPolytope{std::vector<RVec>(extremes.begin(), extremes.end())});
    CHECK(hp2.facets == hp.facets);
    CHECK(hp2.equalities == hp.equalities);
  }
}

TEST_CASE("interior points satisfy every facet strictly") {
  const VPolytope cube = hypercube(4);
  const HPolytope hp = geometry::facet_enumeration(cube);
  const RVec c = centroid(cube);
  for (const auto& f : hp.facets) {
    CHECK(f.evaluate(c) > 0);
  }
}

TEST_CASE("lp_membership issues verifiable certificates") {
  const VPolytope cube = hypercube(3);

  SUBCASE("inside point reproduces itself from the weights") {
    const RVec p = {Rational(1, 3), Rational(-1, 2), Rational(0)};
    const auto cert = geometry::lp_membership(p, cube);
    REQUIRE(geometry::is_inside(cert));
    const auto& w = std::get<geometry::InsideCertificate>(cert).weights;
    REQUIRE(w.size() == cube.vertices.size());
    Rational total = 0;
    RVec combo(3, Rational(0));
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i] >= 0);
      total += w[i];
      for (std::size_t d = 0; d < 3; ++d) {
        combo[d] += w[i] * cube.vertices[i][d];
      }
    }
    CHECK(total == 1);
    CHECK(combo == p);
  }

  SUBCASE("outside point gets a separating inequality") {
    const RVec p = {Rational(2), Rational(0), Rational(0)};
    const auto cert = geometry::lp_membership(p, cube);
    REQUIRE(!geometry::is_inside(cert));
    const auto& sep = std::get<geometry::OutsideCertificate>(cert).separator;
    CHECK(sep.evaluate(p) < 0);
    for (const auto& v : cube.vertices) {
      CHECK(sep.evaluate(v) >= 0);
    }
  }

  SUBCASE("boundary point is inside") {
    const RVec p = {Rational(1), Rational(1), Rational(1)};
    CHECK(geometry::is_inside(geometry::lp_membership(p, cube)));
  }

  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(geometry::lp_membership({Rational(0)}, cube),
                    std::invalid_argument);
  }
}

TEST_CASE("membership against a lower-dimensional hull") {
  // The flat square: points off its plane must be outside.
  VPolytope vp;
  for (const int x : {-1, 1}) {
    for (const int y : {-1, 1}) {
      vp.vertices.push_back({Rational(x), Rational(y), Rational(0)});
    }
  }
  CHECK(geometry::is_inside(
      geometry::lp_membership({Rational(0), Rational(0), Rational(0)}, vp)));
  const auto cert = geometry::lp_membership(
      {Rational(0), Rational(0), Rational(1, 1000)}, vp);
  REQUIRE(!geometry::is_inside(cert));
  const auto& sep = std::get<geometry::OutsideCertificate>(cert).separator;
  for (const auto& v : vp.vertices) {
    CHECK(sep.evaluate(v) >= 0);
  }
}

TEST_CASE("primitive_integer scales to coprime integers") {
  using geometry::primitive_integer;
  const RVec v = {Rational(1, 2), Rational(-3, 4), Rational(0)};
  const RVec p = primitive_integer(v);
  CHECK(p == RVec{Rational(2), Rational(-3), Rational(0)});
  // Scaling invariance.
  RVec scaled = v;
  for (auto& x : scaled) {
    x *= Rational(7, 9);
  }
  CHECK(primitive_integer(scaled) == p);
  CHECK_THROWS_AS(primitive_integer(RVec{Rational(0), Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("affine hull dimensions") {
  VPolytope segment;
  segment.vertices = {{Rational(0), Rational(0)}, {Rational(2), Rational(2)}};
  CHECK(geometry::affine_hull(segment).dim() == 1);
  CHECK(geometry::affine_hull(hypercube(3)).dim() == 3);
}

TEST_CASE("hpolytope JSON round trip and content hashes") {
  const VPolytope cube = hypercube(3);
  const HPolytope hp = geometry::facet_enumeration(cube);

  const HPolytope back = geometry::hpolytope_from_json(
      geometry::hpolytope_to_json(hp));
  CHECK(back.facets == hp.facets);
  CHECK(back.equalities == hp.equalities);
  CHECK(back.ambient_dim == hp.ambient_dim);
  CHECK(back.affine_dim == hp.affine_dim);

  CHECK(geometry::hpolytope_hash(hp) == geometry::hpolytope_hash(back));
  CHECK(geometry::vertex_set_hash(cube) == geometry::vertex_set_hash(cube));

  VPolytope moved = cube;
  moved.vertices[0][0] = 2;
  CHECK(geometry::vertex_set_hash(moved) != geometry::vertex_set_hash(cube));
}
