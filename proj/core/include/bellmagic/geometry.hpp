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

#ifndef BELLMAGIC_GEOMETRY_HPP
#define BELLMAGIC_GEOMETRY_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellmagic/rational.hpp"

// Exact convex geometry over the rationals. No floating point enters this
// module: callers convert inputs with exact_rational()/rationalize() first.

namespace bellmagic::geometry {

using RVec = std::vector<Rational>;

/** A polytope given as the convex hull of finitely many points. */
struct VPolytope {
  std::vector<RVec> vertices;

  std::size_t ambient_dim() const {
    return vertices.empty() ? 0 : vertices.front().size();
  }
};

/** Halfspace normal·x + offset >= 0 with primitive integer coefficients. */
struct LinearInequality {
  RVec normal;
  Rational offset;

  Rational evaluate(const RVec& x) const;

  friend bool operator==(const LinearInequality&,
                         const LinearInequality&) = default;
};

/** Hyperplane normal·x + offset == 0 with primitive integer coefficients. */
struct LinearEquality {
  RVec normal;
  Rational offset;

  Rational evaluate(const RVec& x) const;

  friend bool operator==(const LinearEquality&, const LinearEquality&) = default;
};

/**
 * A polytope in facet representation. `facets` are irredundant within the
 * affine hull; `equalities` pin the hull when the polytope is not
 * full-dimensional. Both lists are sorted lexicographically, so equal
 * polytopes serialize identically.
 */
struct HPolytope {
  std::size_t ambient_dim = 0;
  std::size_t affine_dim = 0;
  std::vector<LinearInequality> facets;
  std::vector<LinearEquality> equalities;
};

/** Affine hull of a point set: hull = { origin + basis * t }. */
struct AffineHull {
  RVec origin;
  std::vector<RVec> basis;  // linearly independent direction vectors

  std::size_t dim() const { return basis.size(); }
};

/** Exact affine hull. Throws std::invalid_argument on an empty input. */
AffineHull affine_hull(const VPolytope& vp);

/**
 * Exact facet enumeration by the double description method (lexicographic
 * insertion, combinatorial adjacency test). Points that do not span the
 * ambient space are first projected onto their affine hull; facet normals
 * are lifted back so that they lie in the hull's direction space, and the
 * hull itself is returned as `equalities`.
 *
 * The resulting facet set does not depend on the input vertex order.
 * Throws std::invalid_argument for empty or zero-dimensional input.
 */
HPolytope facet_enumeration(const VPolytope& vp);

/**
 * Vertices of a bounded H-polytope (double description in the reverse
 * direction), sorted lexicographically. Used as the duality check against
 * facet_enumeration. Throws std::invalid_argument if the input describes an
 * unbounded or empty set.
 */
std::vector<RVec> vertex_enumeration(const HPolytope& hp);

/** Certificate that a point is in the hull: convex weights over vertices. */
struct InsideCertificate {
  std::vector<Rational> weights;  // aligned with VPolytope::vertices
};

/** Certificate that a point is outside: an inequality satisfied by every
 *  vertex and violated by the point. */
struct OutsideCertificate {
  LinearInequality separator;
};

using SeparationCertificate =
    std::variant<InsideCertificate, OutsideCertificate>;

inline bool is_inside(const SeparationCertificate& c) {
  return std::holds_alternative<InsideCertificate>(c);
}

/**
 * Exact membership of `point` in conv(vp.vertices), decided by a rational
 * phase-1 simplex (Bland's rule). The returned certificate is re-verified
 * exactly before it is handed out. Throws std::invalid_argument on dimension
 * mismatch or an empty vertex set.
 */
SeparationCertificate lp_membership(const RVec& point, const VPolytope& vp);

/** Scales a vector so its entries are coprime integers; the leading sign is
 *  preserved. Throws std::invalid_argument on the zero vector. */
RVec primitive_integer(const RVec& v);

// --- canonical serialization ------------------------------------------------

/** Canonical JSON form (sorted facets, integer coefficients as strings when
 *  they exceed 64 bits). Stable across platforms. */
nlohmann::json hpolytope_to_json(const HPolytope& hp);
HPolytope hpolytope_from_json(const nlohmann::json& j);

/** 64-bit FNV-1a over the canonical serialization of a vertex set. Used to
 *  key the on-disk facet cache; detects drift, not adversaries. */
std::string vertex_set_hash(const VPolytope& vp);

/** Same digest over the canonical serialization of an H-polytope. */
std::string hpolytope_hash(const HPolytope& hp);

}  // namespace bellmagic::geometry

#endif  // BELLMAGIC_GEOMETRY_HPP
