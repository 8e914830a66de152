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
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bellmagic::polytopes {

namespace {

using qcore::Pauli;
using qcore::SignedPauli;

TableFunctional from_int_table(const std::array<std::array<int, 4>, 4>& m) {
  TableFunctional f;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      f.coeff[r][c] = m[r][c];
    }
  }
  return f;
}

std::string functional_key(const TableFunctional& f) {
  std::ostringstream os;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      os << rational_to_string(f.coeff[r][c]) << ',';
    }
  }
  return os.str();
}

AxisRelabeling identity_relabeling() {
  return {SignedPauli{1, Pauli::X}, SignedPauli{1, Pauli::Y},
          SignedPauli{1, Pauli::Z}};
}

/** One symmetry of a table polytope: per-factor axis relabelings, optionally
 *  followed by swapping the factors. */
struct Relabeler {
  AxisRelabeling first;
  AxisRelabeling second;
  bool swap_sides = false;
};

TableFunctional apply_relabeler(const TableFunctional& f, const Relabeler& g) {
  TableFunctional out = relabel(f, g.first, g.second);
  return g.swap_sides ? swap_factors(out) : out;
}

/** Keeps the candidate symmetries that map the given vertex set onto
 *  itself. */
std::vector<Relabeler> vertex_preserving_symmetries(
    const std::vector<TableFunctional>& vertex_tables) {
  std::set<std::string> keys;
  for (const auto& v : vertex_tables) {
    keys.insert(functional_key(v));
  }
  std::vector<Relabeler> candidates;
  const AxisRelabeling id = identity_relabeling();
  for (const auto& r : all_axis_relabelings()) {
    candidates.push_back({r, id, false});
    candidates.push_back({id, r, false});
  }
  candidates.push_back({id, id, true});

  std::vector<Relabeler> kept;
  for (const auto& g : candidates) {
    bool ok = true;
    for (const auto& v : vertex_tables) {
      if (keys.count(functional_key(apply_relabeler(v, g))) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(g);
    }
  }
  return kept;
}

/** Orbit of `seed` under the group generated by `gens` (breadth first). */
std::vector<TableFunctional> orbit(const TableFunctional& seed,
                                   const std::vector<Relabeler>& gens) {
  std::map<std::string, TableFunctional> seen;
  std::vector<TableFunctional> frontier{seed};
  seen.emplace(functional_key(seed), seed);
  while (!frontier.empty()) {
    std::vector<TableFunctional> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        TableFunctional h = apply_relabeler(f, g);
        auto [it, inserted] = seen.emplace(functional_key(h), h);
        if (inserted) {
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<TableFunctional> out;
  out.reserve(seen.size());
  for (auto& [k, f] : seen) {
    out.push_back(f);
  }
  return out;
}

std::map<std::string, FacetClass> build_orbit_map(
    const std::vector<TableFunctional>& vertex_tables,
    const std::vector<std::pair<TableFunctional, FacetClass>>& reps) {
  const std::vector<Relabeler> gens =
      vertex_preserving_symmetries(vertex_tables);
  std::map<std::string, FacetClass> m;
  for (const auto& [rep, cls] : reps) {
    for (const auto& f : orbit(rep, gens)) {
      auto [it, inserted] = m.emplace(functional_key(f), cls);
      if (!inserted && it->second != cls) {
        throw std::logic_error(
            "facet symmetry orbits overlap; classification is ambiguous");
      }
    }
  }
  return m;
}

std::vector<TableFunctional> lhv_vertex_tables() {
  std::vector<TableFunctional> out;
  for (int am = 0; am < 8; ++am) {
    for (int bm = 0; bm < 8; ++bm) {
      std::array<int, 3> a, b;
      for (int i = 0; i < 3; ++i) {
        a[i] = (am >> i) & 1 ? -1 : 1;
        b[i] = (bm >> i) & 1 ? -1 : 1;
      }
      out.push_back(from_int_table(deterministic_table(a, b)));
    }
  }
  return out;
}

std::vector<TableFunctional> clifford_vertex_tables() {
  std::vector<TableFunctional> out;
  for (const auto& c : qcore::clifford_group()) {
    out.push_back(from_int_table(clifford_table(c)));
  }
  return out;
}

const std::map<std::string, FacetClass>& lhv_orbit_map() {
  static const std::map<std::string, FacetClass> m = build_orbit_map(
      lhv_vertex_tables(), {{positivity_facet(), FacetClass::kPositivity},
                            {chsh_facet(), FacetClass::kChsh},
                            {i3322_facet(), FacetClass::kI3322}});
  return m;
}

const std::map<std::string, FacetClass>& clifford_orbit_map() {
  static const std::map<std::string, FacetClass> m =
      build_orbit_map(clifford_vertex_tables(),
                      {{alpha_facet(), FacetClass::kAlpha},
                       {beta_facet(), FacetClass::kBeta}});
  return m;
}

geometry::RVec table_coords(const std::array<std::array<int, 4>, 4>& m) {
  geometry::RVec x;
  x.reserve(qcore::kTableDim);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == 0 && c == 0) {
        continue;
      }
      x.emplace_back(m[r][c]);
    }
  }
  return x;
}

PolytopeData build_polytope(const std::string& name,
                            geometry::VPolytope vertices,
                            FacetClass (*classifier)(const TableFunctional&)) {
  PolytopeData p;
  p.name = name;
  p.vertices = std::move(vertices);
  p.hull = geometry::facet_enumeration(p.vertices);
  for (const auto& q : p.hull.facets) {
    ClassifiedFacet cf;
    cf.functional = TableFunctional::from_inequality(q);
    cf.cls = classifier(cf.functional);
    p.census[cf.cls] += 1;
    p.facets.push_back(std::move(cf));
  }
  p.vertex_hash = geometry::vertex_set_hash(p.vertices);
  p.facet_hash = geometry::hpolytope_hash(p.hull);
  return p;
}

PolytopeData load_or_build(const std::string& name,
                           PolytopeData (*build)(),
                           const geometry::VPolytope& fresh_vertices,
                           const std::filesystem::path& cache_dir,
                           CacheMode mode) {
  if (cache_dir.empty()) {
    return build();
  }
  const std::filesystem::path file = cache_dir / (name + "_facets.json");
  if (std::filesystem::exists(file)) {
    try {
      std::ifstream in(file);
      if (!in) {
        throw std::runtime_error("cannot open " + file.string());
      }
      nlohmann::json j = nlohmann::json::parse(in);
      PolytopeData p = polytope_from_json(j);
      if (p.name != name) {
        throw std::invalid_argument("cache holds polytope '" + p.name +
                                    "', expected '" + name + "'");
      }
      if (p.vertex_hash != geometry::vertex_set_hash(fresh_vertices)) {
        throw std::invalid_argument(
            "cached vertex set does not match the current construction");
      }
      return p;
    } catch (const std::exception& e) {
      if (mode == CacheMode::kStrict) {
        throw std::runtime_error("facet cache " + file.string() +
                                 " failed verification: " + e.what());
      }
      // kValidated: fall through and rebuild.
    }
  }
  PolytopeData p = build();
  std::filesystem::create_directories(cache_dir);
  std::ofstream out(file);
  out << polytope_to_json(p).dump(2) << '\n';
  return p;
}

}  // namespace

std::string facet_class_name(FacetClass c) {
  switch (c) {
    case FacetClass::kPositivity:
      return "positivity";
    case FacetClass::kChsh:
      return "chsh";
    case FacetClass::kI3322:
      return "i3322";
    case FacetClass::kAlpha:
      return "alpha";
    case FacetClass::kBeta:
      return "beta";
  }
  throw std::invalid_argument("facet_class_name: bad enum value");
}

FacetClass facet_class_from_name(const std::string& name) {
  if (name == "positivity") return FacetClass::kPositivity;
  if (name == "chsh") return FacetClass::kChsh;
  if (name == "i3322") return FacetClass::kI3322;
  if (name == "alpha") return FacetClass::kAlpha;
  if (name == "beta") return FacetClass::kBeta;
  throw std::invalid_argument("unknown facet class '" + name + "'");
}

Rational TableFunctional::evaluate_exact(const geometry::RVec& coords) const {
  if (coords.size() != qcore::kTableDim) {
    throw std::invalid_argument("evaluate_exact: expected 15 coordinates");
  }
  Rational v = coeff[0][0];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == 0 && c == 0) {
        continue;
      }
      v += coeff[r][c] * coords[4 * r + c - 1];
    }
  }
  return v;
}

double TableFunctional::evaluate(const qcore::CGTable& t) const {
  double v = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (coeff[r][c] != 0) {
        v += coeff[r][c].convert_to<double>() * t.entries[r][c];
      }
    }
  }
  return v;
}

geometry::LinearInequality TableFunctional::to_inequality() const {
  geometry::LinearInequality q;
  q.offset = coeff[0][0];
  q.normal.resize(qcore::kTableDim);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == 0 && c == 0) {
        continue;
      }
      q.normal[4 * r + c - 1] = coeff[r][c];
    }
  }
  return q;
}

TableFunctional TableFunctional::from_inequality(
    const geometry::LinearInequality& q) {
  if (q.normal.size() != qcore::kTableDim) {
    throw std::invalid_argument(
        "from_inequality: expected a 15-dimensional normal");
  }
  TableFunctional f;
  f.coeff[0][0] = q.offset;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == 0 && c == 0) {
        continue;
      }
      f.coeff[r][c] = q.normal[4 * r + c - 1];
    }
  }
  return f;
}

const std::vector<AxisRelabeling>& all_axis_relabelings() {
  static const std::vector<AxisRelabeling> all = [] {
    std::vector<AxisRelabeling> out;
    std::array<Pauli, 3> perm = {Pauli::X, Pauli::Y, Pauli::Z};
    std::array<Pauli, 3> p = perm;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        AxisRelabeling r;
        for (int i = 0; i < 3; ++i) {
          r[i] = SignedPauli{(mask >> i) & 1 ? -1 : 1, p[i]};
        }
        out.push_back(r);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

const std::vector<AxisRelabeling>& rotation_relabelings() {
  static const std::vector<AxisRelabeling> rot = [] {
    std::vector<AxisRelabeling> out;
    for (const auto& r : all_axis_relabelings()) {
      // Permutation parity: count inversions of the label sequence.
      int inv = 0;
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (static_cast<int>(r[i].label) > static_cast<int>(r[j].label)) {
            ++inv;
          }
        }
      }
      const int det = (inv % 2 ? -1 : 1) * r[0].sign * r[1].sign * r[2].sign;
      if (det == 1) {
        out.push_back(r);
      }
    }
    return out;
  }();
  return rot;
}

TableFunctional relabel(const TableFunctional& f, const AxisRelabeling& first,
                        const AxisRelabeling& second) {
  TableFunctional out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (f.coeff[r][c] == 0) {
        continue;
      }
      Rational v = f.coeff[r][c];
      int r2 = r;
      int c2 = c;
      if (r != 0) {
        const SignedPauli img = second[r - 1];
        r2 = static_cast<int>(img.label);
        v *= img.sign;
      }
      if (c != 0) {
        const SignedPauli img = first[c - 1];
        c2 = static_cast<int>(img.label);
        v *= img.sign;
      }
      out.coeff[r2][c2] += v;
    }
  }
  return out;
}

TableFunctional swap_factors(const TableFunctional& f) {
  TableFunctional out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out.coeff[r][c] = f.coeff[c][r];
    }
  }
  return out;
}

TableFunctional positivity_facet() {
  return from_int_table({{{1, -1, 0, 0},  //
                          {-1, 1, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0}}});
}

TableFunctional chsh_facet() {
  return from_int_table({{{2, 0, 0, 0},  //
                          {0, -1, -1, 0},
                          {0, -1, 1, 0},
                          {0, 0, 0, 0}}});
}

TableFunctional i3322_facet() {
  return from_int_table({{{4, -1, -1, 0},  //
                          {-1, 1, 1, -1},
                          {-1, 1, 1, 1},
                          {0, -1, 1, 0}}});
}

TableFunctional alpha_facet() {
  return from_int_table({{{1, 0, 0, 0},  //
                          {0, 1, 0, 0},
                          {0, 1, 0, 0},
                          {0, 1, 0, 0}}});
}

TableFunctional beta_facet() {
  return from_int_table({{{1, 0, 0, 0},  //
                          {0, -1, -1, 0},
                          {0, -1, 1, 0},
                          {0, 0, 0, 1}}});
}

std::array<std::array<int, 4>, 4> deterministic_table(
    const std::array<int, 3>& a, const std::array<int, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    if ((a[i] != 1 && a[i] != -1) || (b[i] != 1 && b[i] != -1)) {
      throw std::invalid_argument("deterministic_table: outcomes must be +-1");
    }
  }
  const std::array<int, 4> av = {1, a[0], a[1], a[2]};
  const std::array<int, 4> bv = {1, b[0], b[1], b[2]};
  std::array<std::array<int, 4>, 4> t{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      t[r][c] = av[c] * bv[r];
    }
  }
  return t;
}

std::array<std::array<int, 4>, 4> clifford_table(
    const qcore::CliffordElement& e) {
  // On the dual state of a unitary conjugation, <sigma_a x sigma_b> =
  // tr(sigma_a (U^dag sigma_b U)^T) / 2. Conjugating by U^dag inverts the
  // action; transposition contributes a sign flip on Y.
  std::array<std::array<int, 4>, 4> t{};
  t[0][0] = 1;
  for (int a = 1; a < 4; ++a) {
    const SignedPauli img = e.image(static_cast<Pauli>(a));
    const int b = static_cast<int>(img.label);
    const int ysign = (a == static_cast<int>(Pauli::Y)) ? -1 : 1;
    t[b][a] = img.sign * ysign;
  }
  return t;
}

geometry::VPolytope lhv_vertices() {
  geometry::VPolytope vp;
  for (int am = 0; am < 8; ++am) {
    for (int bm = 0; bm < 8; ++bm) {
      std::array<int, 3> a, b;
      for (int i = 0; i < 3; ++i) {
        a[i] = (am >> i) & 1 ? -1 : 1;
        b[i] = (bm >> i) & 1 ? -1 : 1;
      }
      vp.vertices.push_back(table_coords(deterministic_table(a, b)));
    }
  }
  return vp;
}

geometry::VPolytope clifford_vertices() {
  geometry::VPolytope vp;
  for (const auto& c : qcore::clifford_group()) {
    vp.vertices.push_back(table_coords(clifford_table(c)));
  }
  return vp;
}

PolytopeData build_lhv_polytope() {
  return build_polytope("lhv", lhv_vertices(), &classify_lhv_facet);
}

PolytopeData build_clifford_polytope() {
  return build_polytope("clifford", clifford_vertices(),
                        &classify_clifford_facet);
}

FacetClass classify_lhv_facet(const TableFunctional& f) {
  const auto& m = lhv_orbit_map();
  auto it = m.find(functional_key(f));
  if (it == m.end()) {
    throw std::invalid_argument(
        "classify_lhv_facet: functional is not in any known facet orbit");
  }
  return it->second;
}

FacetClass classify_clifford_facet(const TableFunctional& f) {
  const auto& m = clifford_orbit_map();
  auto it = m.find(functional_key(f));
  if (it == m.end()) {
    throw std::invalid_argument(
        "classify_clifford_facet: functional is not in any known facet orbit");
  }
  return it->second;
}

nlohmann::json polytope_to_json(const PolytopeData& p) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : p.vertices.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) {
      row.push_back(rational_to_string(x));
    }
    vertices.push_back(std::move(row));
  }
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cf : p.facets) {
    classes.push_back(facet_class_name(cf.cls));
  }
  nlohmann::json census = nlohmann::json::object();
  for (const auto& [cls, n] : p.census) {
    census[facet_class_name(cls)] = n;
  }
  return nlohmann::json{{"name", p.name},
                        {"vertex_hash", p.vertex_hash},
                        {"facet_hash", p.facet_hash},
                        {"census", std::move(census)},
                        {"vertices", std::move(vertices)},
                        {"hull", geometry::hpolytope_to_json(p.hull)},
                        {"facet_classes", std::move(classes)}};
}

PolytopeData polytope_from_json(const nlohmann::json& j) {
  PolytopeData p;
  p.name = j.at("name").get<std::string>();
  for (const auto& row : j.at("vertices")) {
    geometry::RVec v;
    for (const auto& x : row) {
      v.push_back(rational_from_string(x.get<std::string>()));
    }
    if (v.size() != qcore::kTableDim) {
      throw std::invalid_argument(
          "polytope_from_json: vertex is not 15-dimensional");
    }
    p.vertices.vertices.push_back(std::move(v));
  }
  p.hull = geometry::hpolytope_from_json(j.at("hull"));
  const auto& classes = j.at("facet_classes");
  if (classes.size() != p.hull.facets.size()) {
    throw std::invalid_argument(
        "polytope_from_json: class list does not match the facet list");
  }

  p.vertex_hash = geometry::vertex_set_hash(p.vertices);
  p.facet_hash = geometry::hpolytope_hash(p.hull);
  if (p.vertex_hash != j.at("vertex_hash").get<std::string>() ||
      p.facet_hash != j.at("facet_hash").get<std::string>()) {
    throw std::invalid_argument(
        "polytope_from_json: content hash mismatch (stale or edited dump)");
  }

  // Soundness: every stored vertex satisfies every stored constraint.
  for (const auto& v : p.vertices.vertices) {
    for (const auto& q : p.hull.facets) {
      if (q.evaluate(v) < 0) {
        throw std::invalid_argument(
            "polytope_from_json: a vertex violates a stored facet");
      }
    }
    for (const auto& q : p.hull.equalities) {
      if (q.evaluate(v) != 0) {
        throw std::invalid_argument(
            "polytope_from_json: a vertex misses a stored equality");
      }
    }
  }

  // Classes are re-derived, not trusted.
  FacetClass (*classifier)(const TableFunctional&) =
      p.name == "clifford" ? &classify_clifford_facet : &classify_lhv_facet;
  for (std::size_t i = 0; i < p.hull.facets.size(); ++i) {
    ClassifiedFacet cf;
    cf.functional = TableFunctional::from_inequality(p.hull.facets[i]);
    cf.cls = classifier(cf.functional);
    if (facet_class_name(cf.cls) != classes.at(i).get<std::string>()) {
      throw std::invalid_argument(
          "polytope_from_json: stored facet class disagrees with "
          "classification");
    }
    p.census[cf.cls] += 1;
    p.facets.push_back(std::move(cf));
  }

  const auto& census = j.at("census");
  if (census.size() != p.census.size()) {
    throw std::invalid_argument(
        "polytope_from_json: stored census disagrees with the facet classes");
  }
  for (const auto& [cls, n] : p.census) {
    const auto it = census.find(facet_class_name(cls));
    if (it == census.end() || it->get<std::size_t>() != n) {
      throw std::invalid_argument(
          "polytope_from_json: stored census disagrees with the facet classes");
    }
  }
  return p;
}

PolytopeData load_or_build_lhv(const std::filesystem::path& cache_dir,
                               CacheMode mode) {
  return load_or_build("lhv", &build_lhv_polytope, lhv_vertices(), cache_dir,
                       mode);
}

PolytopeData load_or_build_clifford(const std::filesystem::path& cache_dir,
                                    CacheMode mode) {
  return load_or_build("clifford", &build_clifford_polytope,
                       clifford_vertices(), cache_dir, mode);
}

}  // namespace bellmagic::polytopes
