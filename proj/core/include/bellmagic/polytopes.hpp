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

#ifndef BELLMAGIC_POLYTOPES_HPP
#define BELLMAGIC_POLYTOPES_HPP

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellmagic/geometry.hpp"
#include "bellmagic/qcore.hpp"

// The two polytopes the whole analysis runs on, both living in the 15
// correlation-table coordinates:
//
//  * the local polytope: convex hull of the 64 deterministic +-1 assignment
//    tables (full-dimensional, 684 facets);
//  * the Clifford polytope: convex hull of the 24 Clifford conjugation
//    tables (9-dimensional, 120 facets within its affine hull).
//
// Facets are classified into symmetry orbits; the canonical representative
// of each orbit is exposed as a named constant.

namespace bellmagic::polytopes {

/** Symmetry class of a facet. The first three occur for the local polytope,
 *  the last two for the Clifford polytope. */
enum class FacetClass {
  kPositivity,  // 1 - <A> - <B> + <AB> >= 0 and relabelings
  kChsh,        // the CHSH inequality and relabelings
  kI3322,       // the three-setting inequality and relabelings
  kAlpha,       // 1 + <XX> + <XY> + <XZ> >= 0 and relabelings
  kBeta,        // 1 - <XX> - <YX> - <XY> + <YY> + <ZZ> >= 0 and relabelings
};

/** Lower-case class name ("positivity", "chsh", "i3322", "alpha", "beta"). */
std::string facet_class_name(FacetClass c);

/** Parses a class name; throws std::invalid_argument on anything else. */
FacetClass facet_class_from_name(const std::string& name);

/**
 * A linear functional on expectation tables,
 *
 *   value(T) = sum_{r,c} coeff[r][c] * T.entries[r][c],
 *
 * where T.entries[0][0] == 1, so coeff[0][0] is the constant term. A facet
 * inequality is a functional that is >= 0 on every vertex. Coefficients are
 * kept as primitive integers.
 */
struct TableFunctional {
  std::array<std::array<Rational, 4>, 4> coeff{};

  /** Exact value on 15 exact coordinates (row-major, skipping [0][0]). */
  Rational evaluate_exact(const geometry::RVec& coords) const;

  /** Floating value on a floating table; used by parameter scans. */
  double evaluate(const qcore::CGTable& t) const;

  /** The same data as a halfspace over the 15 coordinates. */
  geometry::LinearInequality to_inequality() const;
  static TableFunctional from_inequality(const geometry::LinearInequality& q);

  friend bool operator==(const TableFunctional&,
                         const TableFunctional&) = default;
};

/** A signed permutation of the measurement axes: images of X, Y, Z. */
using AxisRelabeling = std::array<qcore::SignedPauli, 3>;

/** All 48 signed permutations of {X, Y, Z}. */
const std::vector<AxisRelabeling>& all_axis_relabelings();

/** The 24 signed permutations with determinant +1 (Clifford actions). */
const std::vector<AxisRelabeling>& rotation_relabelings();

/** Pushes a functional through per-factor relabelings so that its value on
 *  a correspondingly relabeled table is unchanged. */
TableFunctional relabel(const TableFunctional& f, const AxisRelabeling& first,
                        const AxisRelabeling& second);

/** Swaps the roles of the two tensor factors (transposes coefficients). */
TableFunctional swap_factors(const TableFunctional& f);

// --- canonical facet representatives ----------------------------------------

TableFunctional positivity_facet();
TableFunctional chsh_facet();
TableFunctional i3322_facet();
TableFunctional alpha_facet();
TableFunctional beta_facet();

// --- vertex sets -------------------------------------------------------------

/** Table of the deterministic assignment (a, b), a, b in {-1, +1}^3:
 *  entries[r][c] = A_c * B_r with A_0 = B_0 = 1. */
std::array<std::array<int, 4>, 4> deterministic_table(
    const std::array<int, 3>& a, const std::array<int, 3>& b);

/** Exact expectation table of conjugation by a Clifford element; the
 *  correlation block is a signed permutation matrix of determinant -1. */
std::array<std::array<int, 4>, 4> clifford_table(
    const qcore::CliffordElement& c);

/** The 64 deterministic tables as 15-dimensional exact points. */
geometry::VPolytope lhv_vertices();

/** The 24 Clifford conjugation tables as 15-dimensional exact points,
 *  ordered like qcore::clifford_group(). */
geometry::VPolytope clifford_vertices();

// --- built polytopes ---------------------------------------------------------

/** A facet with its symmetry class. */
struct ClassifiedFacet {
  TableFunctional functional;
  FacetClass cls;
};

/**
 * One fully built polytope: exact vertices, the enumerated hull, the facets
 * re-expressed as classified table functionals (aligned with hull.facets),
 * class census, and content hashes for the on-disk cache.
 */
struct PolytopeData {
  std::string name;  // "lhv" or "clifford"
  geometry::VPolytope vertices;
  geometry::HPolytope hull;
  std::vector<ClassifiedFacet> facets;
  std::map<FacetClass, std::size_t> census;
  std::string vertex_hash;
  std::string facet_hash;
};

/** Enumerates and classifies the local polytope (684 facets). */
PolytopeData build_lhv_polytope();

/** Enumerates and classifies the Clifford polytope (120 facets). */
PolytopeData build_clifford_polytope();

/**
 * Classifies a facet of the local polytope by looking it up in the
 * relabeling orbits of the three canonical representatives. Throws
 * std::invalid_argument if it lies in none of them.
 */
FacetClass classify_lhv_facet(const TableFunctional& f);

/** Same for the Clifford polytope (orbits of alpha and beta). */
FacetClass classify_clifford_facet(const TableFunctional& f);

// --- serialization and cache -------------------------------------------------

nlohmann::json polytope_to_json(const PolytopeData& p);

/** Parses a dump and re-verifies internal consistency (hashes recomputed
 *  from content, classes legal, facet count alignment). Throws
 *  std::invalid_argument on malformed or tampered input. */
PolytopeData polytope_from_json(const nlohmann::json& j);

enum class CacheMode {
  /** Use a cached file whenever it parses and matches the expected vertex
   *  set; throw std::runtime_error if it exists but fails verification. */
  kStrict,
  /** Silently rebuild and overwrite on any mismatch. */
  kValidated,
};

/** Loads "<cache_dir>/lhv_facets.json" or builds the polytope and writes the
 *  dump. An empty cache_dir disables caching entirely. */
PolytopeData load_or_build_lhv(const std::filesystem::path& cache_dir,
                               CacheMode mode = CacheMode::kValidated);

/** Same with "clifford_facets.json". */
PolytopeData load_or_build_clifford(const std::filesystem::path& cache_dir,
                                    CacheMode mode = CacheMode::kValidated);

}  // namespace bellmagic::polytopes

#endif  // BELLMAGIC_POLYTOPES_HPP
