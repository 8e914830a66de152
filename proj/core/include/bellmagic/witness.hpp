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

#ifndef BELLMAGIC_WITNESS_HPP
#define BELLMAGIC_WITNESS_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellmagic/channels.hpp"
#include "bellmagic/polytopes.hpp"

// The decision layer: Bell-violation scans against the local polytope,
// non-Clifford witnesses against the Clifford polytope, the pairing between
// CHSH and beta facets that links the two, and threshold searches along
// one-parameter channel families.

namespace bellmagic::witness {

/** Facet values above -kViolationTol count as satisfied; the slack absorbs
 *  floating-point error in channel-derived tables. */
inline constexpr double kViolationTol = 1e-12;

/** Result of evaluating one facet on one table. */
struct ViolationReport {
  std::size_t facet_index;  // index into the owning polytope's facet list
  polytopes::FacetClass cls;
  double value;    // Frobenius dot of the facet with the table
  bool violated;   // value < -kViolationTol
  double margin;   // -value when violated, else 0
};

/**
 * A CHSH facet of the local polytope matched with the beta facet of the
 * Clifford polytope whose coefficients agree everywhere except the identity
 * entry (2 vs 1) and a single correlation entry (0 vs sign). Evaluating both
 * on any expectation table gives
 *
 *   beta_value = chsh_value - 1 + sign * <sigma_first x sigma_second>,
 *
 * so beta_value <= chsh_value whenever the table's entries lie in [-1, 1]:
 * a CHSH violation forces at least as large a beta violation.
 */
struct FacetPairing {
  std::size_t chsh_index;  // facet index in the local polytope
  std::size_t beta_index;  // facet index in the Clifford polytope
  qcore::Pauli first;      // first-factor observable of the extra entry
  qcore::Pauli second;     // second-factor observable
  int sign;                // the beta facet's coefficient there (+1 or -1)
};

/** Both polytopes plus the CHSH<->beta pairing, built once and shared by
 *  every scan. */
struct WitnessContext {
  polytopes::PolytopeData lhv;
  polytopes::PolytopeData clifford;
  std::vector<FacetPairing> pairings;  // sorted by chsh_index; size 72

  /** Loads (or builds) both polytopes and derives the pairing. Throws
   *  std::logic_error if the pairing is not a bijection, which would signal
   *  an enumeration bug. */
  static WitnessContext make(
      const std::filesystem::path& cache_dir = {},
      polytopes::CacheMode mode = polytopes::CacheMode::kValidated);

  const FacetPairing& pairing_for_chsh(std::size_t lhv_facet_index) const;
  const FacetPairing& pairing_for_beta(std::size_t clifford_facet_index) const;
};

/** The beta facet paired with a CHSH facet of the local polytope. Throws
 *  std::invalid_argument if the index is not a CHSH-class facet. */
const FacetPairing& paired_beta_facet(const WitnessContext& ctx,
                                      std::size_t chsh_index);

/** Evaluates every CHSH facet on the table, in facet-index order. */
std::vector<ViolationReport> chsh_scan(const WitnessContext& ctx,
                                       const qcore::CGTable& t);

/** The facet of class `cls` with the smallest value on `t`. */
ViolationReport min_facet_value(const polytopes::PolytopeData& poly,
                                const qcore::CGTable& t,
                                polytopes::FacetClass cls);

/**
 * Checks, on one table, that every violated CHSH facet is dominated by its
 * paired beta facet: value(beta) <= value(chsh) + tol. `holds` stays true
 * when nothing is violated.
 */
struct DominanceReport {
  bool holds;
  std::vector<ViolationReport> chsh_violations;
  ViolationReport best_beta;  // minimum-value beta facet, violated or not
};
DominanceReport beta_dominance(const WitnessContext& ctx,
                               const qcore::CGTable& t, double tol = 1e-9);

/** The parity measurement suggested by a violated beta facet:
 *  project onto (identity + sign * sigma_first x sigma_second) / 2. */
struct ParityRecommendation {
  qcore::Pauli first;
  qcore::Pauli second;
  int sign;
};

/** Reads the recommendation off a beta facet: the unique correlation
 *  coefficient outside the facet's CHSH block. Throws std::invalid_argument
 *  if the functional does not have the beta structure. */
ParityRecommendation recommend_measurement(
    const polytopes::TableFunctional& beta);

/** How a channel relates to the Clifford polytope. */
enum class Verdict {
  kCliffordMixture,    // inside: expressible as a Clifford mixture
  kBetaViolation,      // violates a beta facet: distillation route applies
  kOutsideUndetected,  // outside, but no beta facet violated
};

std::string verdict_name(Verdict v);

struct UqcReport {
  Verdict verdict;
  geometry::RVec coords;  // rationalized table coordinates used for the LP
  std::vector<ViolationReport> alpha_violations;
  std::vector<ViolationReport> beta_violations;
  /** Most violated beta facet (kBetaViolation only). */
  std::optional<std::size_t> witness_facet;
  std::optional<ParityRecommendation> measurement;
  /** Convex weights over the 24 Clifford tables (kCliffordMixture only). */
  std::vector<Rational> weights;
  /** Exact separating inequality (whenever the table is outside). */
  std::optional<geometry::LinearInequality> separator;
};

/**
 * Full classification of a channel table against the Clifford polytope.
 * Facet values are computed exactly on continued-fraction-rounded
 * coordinates; the LP membership certificate is exact. A beta violation
 * wins over everything else; an alpha-only violation or a non-unital
 * escape both report kOutsideUndetected with an exact separator.
 */
UqcReport uqc_witness(const WitnessContext& ctx, const qcore::CGTable& t,
                      double rationalize_eps = 1e-12);

nlohmann::json uqc_report_to_json(const UqcReport& r,
                                  const WitnessContext& ctx);

/** Zeroes the six local coefficients (row 0 and column 0 except the identity
 *  entry); the unital-channel restriction of a facet. */
polytopes::TableFunctional drop_local_terms(const polytopes::TableFunctional& f);

/**
 * Expresses a (local-term-zeroed) I3322 facet as half the sum of four CHSH
 * facets of the local polytope, exactly. Returns the four facet indices in
 * sorted order. Throws std::invalid_argument for non-I3322 input and
 * std::logic_error if no decomposition exists.
 */
struct ChshDecomposition {
  std::array<std::size_t, 4> chsh_indices;
};
ChshDecomposition decompose_3322(const WitnessContext& ctx,
                                 std::size_t i3322_index);

// --- one-parameter threshold searches ----------------------------------------

enum class Family { kDephasedPhase, kDepolarizedPhase };
enum class Criterion { kChsh, kBeta, kMembership };

std::string family_name(Family f);          // "dephased_phase", ...
Family family_from_name(const std::string& s);
std::string criterion_name(Criterion c);    // "chsh", "beta", "membership"
Criterion criterion_from_name(const std::string& s);

/** Expectation table of the family member at parameter x (s or p). */
qcore::CGTable family_table(Family f, double theta, double x);

/** True when the criterion fires at this table: a CHSH / beta facet is
 *  violated, or (kMembership) the exact LP places the table outside the
 *  Clifford polytope. */
bool criterion_fires(const WitnessContext& ctx, Criterion c,
                     const qcore::CGTable& t);

struct ThresholdResult {
  std::string parameter;  // "s" or "p"
  Criterion criterion;
  double critical;        // midpoint of the final bracket
  double bracket_width;
  int iterations;
};

/**
 * Bisects the family parameter on [lo, hi] until the bracket is narrower
 * than tol (at most 60 steps). Throws std::invalid_argument if the
 * criterion does not change between the endpoints.
 */
ThresholdResult threshold_scan(const WitnessContext& ctx, Family family,
                               double theta, Criterion crit, double lo,
                               double hi, double tol = 1e-9);

}  // namespace bellmagic::witness

#endif  // BELLMAGIC_WITNESS_HPP
