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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bellmagic/geometry.hpp"

namespace bellmagic::witness {

namespace {

using polytopes::FacetClass;
using polytopes::TableFunctional;
using qcore::Pauli;

std::string fkey(const TableFunctional& f) {
  std::ostringstream os;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      os << rational_to_string(f.coeff[r][c]) << ',';
    }
  }
  return os.str();
}

ViolationReport make_report(const polytopes::PolytopeData& poly,
                            std::size_t index, const qcore::CGTable& t) {
  const auto& cf = poly.facets.at(index);
  const double v = cf.functional.evaluate(t);
  const bool violated = v < -kViolationTol;
  return ViolationReport{index, cf.cls, v, violated, violated ? -v : 0.0};
}

TableFunctional add(const TableFunctional& a, const TableFunctional& b) {
  TableFunctional out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out.coeff[r][c] = a.coeff[r][c] + b.coeff[r][c];
    }
  }
  return out;
}

TableFunctional sub(const TableFunctional& a, const TableFunctional& b) {
  TableFunctional out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out.coeff[r][c] = a.coeff[r][c] - b.coeff[r][c];
    }
  }
  return out;
}

TableFunctional scale(const TableFunctional& a, const Rational& s) {
  TableFunctional out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out.coeff[r][c] = s * a.coeff[r][c];
    }
  }
  return out;
}

nlohmann::json coefficients_json(const TableFunctional& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) {
      row.push_back(
          boost::multiprecision::numerator(f.coeff[r][c]).convert_to<long long>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json violation_json(const ViolationReport& v,
                              const polytopes::PolytopeData& poly) {
  return nlohmann::json{
      {"facet_index", v.facet_index},
      {"class", polytopes::facet_class_name(v.cls)},
      {"value", v.value},
      {"margin", v.margin},
      {"coefficients", coefficients_json(poly.facets.at(v.facet_index).functional)}};
}

}  // namespace

WitnessContext WitnessContext::make(const std::filesystem::path& cache_dir,
                                    polytopes::CacheMode mode) {
  WitnessContext ctx;
  ctx.lhv = polytopes::load_or_build_lhv(cache_dir, mode);
  ctx.clifford = polytopes::load_or_build_clifford(cache_dir, mode);

  std::map<std::string, std::size_t> chsh_by_key;
  for (std::size_t i = 0; i < ctx.lhv.facets.size(); ++i) {
    if (ctx.lhv.facets[i].cls == FacetClass::kChsh) {
      chsh_by_key.emplace(fkey(ctx.lhv.facets[i].functional), i);
    }
  }
  std::set<std::size_t> used;
  for (std::size_t j = 0; j < ctx.clifford.facets.size(); ++j) {
    if (ctx.clifford.facets[j].cls != FacetClass::kBeta) {
      continue;
    }
    const ParityRecommendation rec =
        recommend_measurement(ctx.clifford.facets[j].functional);
    TableFunctional chsh = ctx.clifford.facets[j].functional;
    chsh.coeff[0][0] += 1;
    chsh.coeff[static_cast<int>(rec.second)][static_cast<int>(rec.first)] = 0;
    auto it = chsh_by_key.find(fkey(chsh));
    if (it == chsh_by_key.end()) {
      throw std::logic_error(
          "facet pairing: no CHSH facet matches a beta facet");
    }
    if (!used.insert(it->second).second) {
      throw std::logic_error(
          "facet pairing: two beta facets map to one CHSH facet");
    }
    ctx.pairings.push_back(
        FacetPairing{it->second, j, rec.first, rec.second, rec.sign});
  }
  if (used.size() != chsh_by_key.size()) {
    throw std::logic_error("facet pairing: some CHSH facet has no partner");
  }
  std::sort(ctx.pairings.begin(), ctx.pairings.end(),
            [](const FacetPairing& a, const FacetPairing& b) {
              return a.chsh_index < b.chsh_index;
            });
  return ctx;
}

const FacetPairing& WitnessContext::pairing_for_chsh(
    std::size_t lhv_facet_index) const {
  for (const auto& p : pairings) {
    if (p.chsh_index == lhv_facet_index) {
      return p;
    }
  }
  throw std::invalid_argument("pairing_for_chsh: not a CHSH facet index");
}

const FacetPairing& WitnessContext::pairing_for_beta(
    std::size_t clifford_facet_index) const {
  for (const auto& p : pairings) {
    if (p.beta_index == clifford_facet_index) {
      return p;
    }
  }
  throw std::invalid_argument("pairing_for_beta: not a beta facet index");
}

const FacetPairing& paired_beta_facet(const WitnessContext& ctx,
                                      std::size_t chsh_index) {
  return ctx.pairing_for_chsh(chsh_index);
}

std::vector<ViolationReport> chsh_scan(const WitnessContext& ctx,
                                       const qcore::CGTable& t) {
  std::vector<ViolationReport> out;
  for (std::size_t i = 0; i < ctx.lhv.facets.size(); ++i) {
    if (ctx.lhv.facets[i].cls == FacetClass::kChsh) {
      out.push_back(make_report(ctx.lhv, i, t));
    }
  }
  return out;
}

ViolationReport min_facet_value(const polytopes::PolytopeData& poly,
                                const qcore::CGTable& t,
                                polytopes::FacetClass cls) {
  std::optional<ViolationReport> best;
  for (std::size_t i = 0; i < poly.facets.size(); ++i) {
    if (poly.facets[i].cls != cls) {
      continue;
    }
    ViolationReport r = make_report(poly, i, t);
    if (!best || r.value < best->value) {
      best = r;
    }
  }
  if (!best) {
    throw std::invalid_argument("min_facet_value: class absent from polytope");
  }
  return *best;
}

DominanceReport beta_dominance(const WitnessContext& ctx,
                               const qcore::CGTable& t, double tol) {
  DominanceReport rep{true, {},
                      min_facet_value(ctx.clifford, t,
                                      FacetClass::kBeta)};
  for (const ViolationReport& r : chsh_scan(ctx, t)) {
    if (!r.violated) {
      continue;
    }
    rep.chsh_violations.push_back(r);
    const FacetPairing& p = ctx.pairing_for_chsh(r.facet_index);
    const double beta_value =
        ctx.clifford.facets[p.beta_index].functional.evaluate(t);
    if (beta_value > r.value + tol) {
      rep.holds = false;
    }
  }
  return rep;
}

ParityRecommendation recommend_measurement(const TableFunctional& beta) {
  const auto fail = [] {
    return std::invalid_argument(
        "recommend_measurement: functional does not have the beta structure");
  };
  if (beta.coeff[0][0] != 1) {
    throw fail();
  }
  for (int k = 1; k < 4; ++k) {
    if (beta.coeff[0][k] != 0 || beta.coeff[k][0] != 0) {
      throw fail();
    }
  }
  int nonzero = 0;
  int srow = -1, scol = -1;
  for (int r = 1; r < 4; ++r) {
    for (int c = 1; c < 4; ++c) {
      const Rational& v = beta.coeff[r][c];
      if (v == 0) {
        continue;
      }
      if (v != 1 && v != -1) {
        throw fail();
      }
      ++nonzero;
      bool alone = true;
      for (int k = 1; k < 4; ++k) {
        if ((k != c && beta.coeff[r][k] != 0) ||
            (k != r && beta.coeff[k][c] != 0)) {
          alone = false;
          break;
        }
      }
      if (alone) {
        if (srow != -1) {
          throw fail();
        }
        srow = r;
        scol = c;
      }
    }
  }
  if (nonzero != 5 || srow == -1) {
    throw fail();
  }
  return ParityRecommendation{
      static_cast<Pauli>(scol), static_cast<Pauli>(srow),
      beta.coeff[srow][scol] == 1 ? 1 : -1};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCliffordMixture:
      return "clifford_mixture";
    case Verdict::kBetaViolation:
      return "beta_violation";
    case Verdict::kOutsideUndetected:
      return "outside_undetected";
  }
  throw std::invalid_argument("verdict_name: bad enum value");
}

UqcReport uqc_witness(const WitnessContext& ctx, const qcore::CGTable& t,
                      double rationalize_eps) {
  UqcReport rep;
  rep.coords = t.rounded_coords(rationalize_eps);

  std::optional<std::size_t> best_beta;
  Rational best_beta_value = 0;
  std::optional<std::size_t> best_alpha;
  Rational best_alpha_value = 0;
  for (std::size_t j = 0; j < ctx.clifford.facets.size(); ++j) {
    const auto& cf = ctx.clifford.facets[j];
    const Rational v = cf.functional.evaluate_exact(rep.coords);
    const double vd = v.convert_to<double>();
    if (vd >= -kViolationTol) {
      continue;
    }
    const ViolationReport r{j, cf.cls, vd, true, -vd};
    if (cf.cls == FacetClass::kBeta) {
      rep.beta_violations.push_back(r);
      if (!best_beta || v < best_beta_value) {
        best_beta = j;
        best_beta_value = v;
      }
    } else {
      rep.alpha_violations.push_back(r);
      if (!best_alpha || v < best_alpha_value) {
        best_alpha = j;
        best_alpha_value = v;
      }
    }
  }

  if (best_beta) {
    rep.verdict = Verdict::kBetaViolation;
    rep.witness_facet = *best_beta;
    rep.measurement =
        recommend_measurement(ctx.clifford.facets[*best_beta].functional);
    rep.separator = ctx.clifford.facets[*best_beta].functional.to_inequality();
    return rep;
  }
  if (best_alpha) {
    rep.verdict = Verdict::kOutsideUndetected;
    rep.separator =
        ctx.clifford.facets[*best_alpha].functional.to_inequality();
    return rep;
  }

  const geometry::SeparationCertificate cert =
      geometry::lp_membership(rep.coords, ctx.clifford.vertices);
  if (geometry::is_inside(cert)) {
    rep.verdict = Verdict::kCliffordMixture;
    rep.weights = std::get<geometry::InsideCertificate>(cert).weights;
  } else {
    rep.verdict = Verdict::kOutsideUndetected;
    rep.separator = std::get<geometry::OutsideCertificate>(cert).separator;
  }
  return rep;
}

nlohmann::json uqc_report_to_json(const UqcReport& r,
                                  const WitnessContext& ctx) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& x : r.coords) {
    coords.push_back(rational_to_string(x));
  }
  j["coords"] = std::move(coords);
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& v : r.alpha_violations) {
    alpha.push_back(violation_json(v, ctx.clifford));
  }
  j["alpha_violations"] = std::move(alpha);
  nlohmann::json beta = nlohmann::json::array();
  for (const auto& v : r.beta_violations) {
    beta.push_back(violation_json(v, ctx.clifford));
  }
  j["beta_violations"] = std::move(beta);
  if (r.witness_facet) {
    j["witness_facet"] = *r.witness_facet;
  }
  if (r.measurement) {
    j["measurement"] = {{"first", qcore::pauli_name(r.measurement->first)},
                        {"second", qcore::pauli_name(r.measurement->second)},
                        {"sign", r.measurement->sign}};
  }
  if (!r.weights.empty()) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : r.weights) {
      w.push_back(rational_to_string(x));
    }
    j["weights"] = std::move(w);
  }
  if (r.separator) {
    nlohmann::json normal = nlohmann::json::array();
    for (const auto& x : r.separator->normal) {
      normal.push_back(rational_to_string(x));
    }
    j["separator"] = {{"offset", rational_to_string(r.separator->offset)},
                      {"normal", std::move(normal)}};
  }
  return j;
}

polytopes::TableFunctional drop_local_terms(const TableFunctional& f) {
  TableFunctional out = f;
  for (int k = 1; k < 4; ++k) {
    out.coeff[0][k] = 0;
    out.coeff[k][0] = 0;
  }
  return out;
}

ChshDecomposition decompose_3322(const WitnessContext& ctx,
                                 std::size_t i3322_index) {
  if (i3322_index >= ctx.lhv.facets.size() ||
      ctx.lhv.facets[i3322_index].cls != FacetClass::kI3322) {
    throw std::invalid_argument("decompose_3322: not an I3322 facet index");
  }
  const TableFunctional target =
      scale(drop_local_terms(ctx.lhv.facets[i3322_index].functional), 2);

  std::vector<std::size_t> chsh;
  for (std::size_t i = 0; i < ctx.lhv.facets.size(); ++i) {
    if (ctx.lhv.facets[i].cls == FacetClass::kChsh) {
      chsh.push_back(i);
    }
  }
  const auto fn = [&](std::size_t k) -> const TableFunctional& {
    return ctx.lhv.facets[chsh[k]].functional;
  };

  // Pair sums keyed by coefficients: a sorted quadruple {w<=x<=y<=z} splits
  // uniquely into (w,x) + (y,z) with x <= y.
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>>
      pair_sums;
  for (std::size_t a = 0; a < chsh.size(); ++a) {
    for (std::size_t b = a; b < chsh.size(); ++b) {
      pair_sums[fkey(add(fn(a), fn(b)))].push_back({a, b});
    }
  }
  for (std::size_t y = 0; y < chsh.size(); ++y) {
    for (std::size_t z = y; z < chsh.size(); ++z) {
      const auto it = pair_sums.find(fkey(sub(target, add(fn(y), fn(z)))));
      if (it == pair_sums.end()) {
        continue;
      }
      for (const auto& [w, x] : it->second) {
        if (x > y) {
          continue;
        }
        // Exact identity check before handing the result out.
        const TableFunctional sum =
            add(add(fn(w), fn(x)), add(fn(y), fn(z)));
        if (!(sum == target)) {
          throw std::logic_error("decompose_3322: inconsistent pair index");
        }
        return ChshDecomposition{
            {chsh[w], chsh[x], chsh[y], chsh[z]}};
      }
    }
  }
  throw std::logic_error(
      "decompose_3322: no four-CHSH decomposition found for facet " +
      std::to_string(i3322_index));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kDephasedPhase:
      return "dephased_phase";
    case Family::kDepolarizedPhase:
      return "depolarized_phase";
  }
  throw std::invalid_argument("family_name: bad enum value");
}

Family family_from_name(const std::string& s) {
  if (s == "dephased_phase") return Family::kDephasedPhase;
  if (s == "depolarized_phase") return Family::kDepolarizedPhase;
  throw std::invalid_argument("unknown channel family '" + s + "'");
}

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kChsh:
      return "chsh";
    case Criterion::kBeta:
      return "beta";
    case Criterion::kMembership:
      return "membership";
  }
  throw std::invalid_argument("criterion_name: bad enum value");
}

Criterion criterion_from_name(const std::string& s) {
  if (s == "chsh") return Criterion::kChsh;
  if (s == "beta") return Criterion::kBeta;
  if (s == "membership") return Criterion::kMembership;
  throw std::invalid_argument("unknown criterion '" + s + "'");
}

qcore::CGTable family_table(Family f, double theta, double x) {
  switch (f) {
    case Family::kDephasedPhase:
      return channels::cg_table(
          channels::make_dephased_phase_gate({theta, x}));
    case Family::kDepolarizedPhase:
      return channels::cg_table(
          channels::make_depolarized_phase_gate({theta, x}));
  }
  throw std::invalid_argument("family_table: bad enum value");
}

bool criterion_fires(const WitnessContext& ctx, Criterion c,
                     const qcore::CGTable& t) {
  switch (c) {
    case Criterion::kChsh:
      return min_facet_value(ctx.lhv, t, FacetClass::kChsh).violated;
    case Criterion::kBeta:
      return min_facet_value(ctx.clifford, t, FacetClass::kBeta).violated;
    case Criterion::kMembership:
      return !geometry::is_inside(
          geometry::lp_membership(t.rounded_coords(), ctx.clifford.vertices));
  }
  throw std::invalid_argument("criterion_fires: bad enum value");
}

ThresholdResult threshold_scan(const WitnessContext& ctx, Family family,
                               double theta, Criterion crit, double lo,
                               double hi, double tol) {
  if (!(lo < hi) || tol <= 0) {
    throw std::invalid_argument("threshold_scan: need lo < hi and tol > 0");
  }
  const auto fires = [&](double x) {
    return criterion_fires(ctx, crit, family_table(family, theta, x));
  };
  const bool at_lo = fires(lo);
  if (at_lo == fires(hi)) {
    throw std::invalid_argument(
        "threshold_scan: criterion does not flip across the range");
  }
  int iterations = 0;
  while (hi - lo > tol && iterations < 60) {
    const double mid = 0.5 * (lo + hi);
    if (fires(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  return ThresholdResult{
      family == Family::kDephasedPhase ? "s" : "p", crit, 0.5 * (lo + hi),
      hi - lo, iterations};
}

}  // namespace bellmagic::witness
