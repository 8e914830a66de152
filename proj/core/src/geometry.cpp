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
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace bellmagic::geometry {

namespace {

using Matrix = std::vector<RVec>;

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const RVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x == 0; });
}

// Maintains a row-echelon basis; returns true (and absorbs the reduced row)
// if `v` was independent of the rows seen so far.
class EchelonBasis {
 public:
  bool absorb(RVec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& x = v[pivots_[r]];
      if (x != 0) {
        const Rational f = x / rows_[r][pivots_[r]];
        for (std::size_t j = 0; j < v.size(); ++j) {
          v[j] -= f * rows_[r][j];
        }
      }
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        pivots_.push_back(j);
        rows_.push_back(std::move(v));
        sort_rows();
        return true;
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void sort_rows() {
    // Keep rows ordered by pivot column so elimination stays triangular.
    for (std::size_t i = rows_.size(); i-- > 1;) {
      if (pivots_[i] < pivots_[i - 1]) {
        std::swap(pivots_[i], pivots_[i - 1]);
        std::swap(rows_[i], rows_[i - 1]);
      } else {
        break;
      }
    }
  }

  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

// Solves A x = b by Gauss-Jordan elimination on the augmented matrix.
// Returns nullopt if the system is inconsistent; free variables are set to 0.
std::optional<RVec> solve_rows(Matrix a, RVec b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) {
      ++sel;
    }
    if (sel == m) {
      continue;
    }
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    const Rational piv = a[row][col];
    for (std::size_t j = col; j < n; ++j) {
      a[row][j] /= piv;
    }
    b[row] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) {
        continue;
      }
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) {
        a[i][j] -= f * a[row][j];
      }
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (b[i] != 0) {
      return std::nullopt;
    }
  }
  RVec x(n, Rational(0));
  for (std::size_t i = 0; i < row; ++i) {
    x[pivot_col[i]] = b[i];
  }
  return x;
}

// Basis of { x : r . x = 0 for every row r }.
Matrix nullspace_rows(Matrix a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) {
      ++sel;
    }
    if (sel == m) {
      continue;
    }
    std::swap(a[sel], a[row]);
    const Rational piv = a[row][col];
    for (std::size_t j = col; j < n; ++j) {
      a[row][j] /= piv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) {
        continue;
      }
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) {
        a[i][j] -= f * a[row][j];
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) {
    is_pivot[c] = true;
  }
  Matrix basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    RVec v(n, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = -a[i][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square matrix given as rows. Throws if singular.
Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, RVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) {
      ++sel;
    }
    if (sel == n) {
      throw std::logic_error("invert: singular matrix");
    }
    std::swap(a[sel], a[col]);
    std::swap(inv[sel], inv[col]);
    const Rational piv = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= piv;
      inv[col][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) {
        continue;
      }
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Double description
// ---------------------------------------------------------------------------

// Set of constraint indices a ray is tight on, packed into 64-bit words.
class TightSet {
 public:
  explicit TightSet(std::size_t nbits)
      : words_((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) {
      c += std::popcount(w);
    }
    return c;
  }

  static TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
      out.words_[i] &= b.words_[i];
    }
    return out;
  }

  bool subset_of(const TightSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RVec v;
  TightSet tight;
};

/**
 * Extreme rays of the polyhedral cone { y : r . y >= 0 for every row r }.
 * Requires the cone to be pointed (constraint rank = dimension); classic
 * double description with deterministic lexicographic insertion and the
 * combinatorial adjacency test.
 */
std::vector<RVec> cone_extreme_rays(Matrix rows) {
  if (rows.empty()) {
    throw std::invalid_argument("cone_extreme_rays: no constraints");
  }
  const std::size_t n = rows.front().size();
  for (auto& r : rows) {
    if (r.size() != n) {
      throw std::invalid_argument("cone_extreme_rays: ragged constraint rows");
    }
    r = primitive_integer(r);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const std::size_t m = rows.size();

  // Pick the lexicographically first linearly independent n constraints as
  // the initial simplicial cone.
  EchelonBasis ech;
  std::vector<std::size_t> basis_idx;
  std::vector<bool> in_basis(m, false);
  for (std::size_t i = 0; i < m && basis_idx.size() < n; ++i) {
    if (ech.absorb(rows[i])) {
      basis_idx.push_back(i);
      in_basis[i] = true;
    }
  }
  if (basis_idx.size() < n) {
    throw std::invalid_argument(
        "cone_extreme_rays: constraints are rank-deficient (cone not pointed)");
  }

  Matrix bm;
  bm.reserve(n);
  for (std::size_t idx : basis_idx) {
    bm.push_back(rows[idx]);
  }
  const Matrix inv = invert(bm);

  std::vector<Ray> rays;
  rays.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    RVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = inv[i][j];
    }
    Ray r{primitive_integer(v), TightSet(m)};
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) {
        r.tight.set(basis_idx[i]);
      }
    }
    rays.push_back(std::move(r));
  }

  for (std::size_t ci = 0; ci < m; ++ci) {
    if (in_basis[ci]) {
      continue;
    }
    const RVec& a = rows[ci];
    std::vector<Rational> s(rays.size());
    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(a, rays[i].v);
      if (s[i] > 0) {
        plus.push_back(i);
      } else if (s[i] == 0) {
        zero.push_back(i);
      } else {
        minus.push_back(i);
      }
    }
    if (minus.empty()) {
      for (std::size_t i : zero) {
        rays[i].tight.set(ci);
      }
      continue;
    }

    // Combine adjacent (plus, minus) pairs into new rays on the hyperplane.
    // Adjacency in the current cone: no third extreme ray is tight on the
    // common tight set of the pair (valid because the cone is pointed).
    std::vector<Ray> created;
    for (std::size_t ip : plus) {
      for (std::size_t im : minus) {
        TightSet common = TightSet::intersect(rays[ip].tight, rays[im].tight);
        if (common.count() + 2 < n) {
          continue;  // a 2-face needs at least n-2 tight constraints
        }
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size(); ++k) {
          if (k == ip || k == im) {
            continue;
          }
          if (common.subset_of(rays[k].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) {
          continue;
        }
        RVec v(n);
        for (std::size_t j = 0; j < n; ++j) {
          v[j] = s[ip] * rays[im].v[j] - s[im] * rays[ip].v[j];
        }
        Ray nr{primitive_integer(v), common};
        nr.tight.set(ci);
        created.push_back(std::move(nr));
      }
    }

    std::vector<Ray> next;
    next.reserve(plus.size() + zero.size() + created.size());
    for (std::size_t i : plus) {
      next.push_back(std::move(rays[i]));
    }
    for (std::size_t i : zero) {
      rays[i].tight.set(ci);
      next.push_back(std::move(rays[i]));
    }
    for (auto& r : created) {
      next.push_back(std::move(r));
    }
    rays = std::move(next);
  }

  std::vector<RVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    out.push_back(std::move(r.v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Coordinates of `point` relative to an affine hull: solves basis * t = point
// - origin. Throws std::logic_error if the point is off the hull.
RVec hull_coordinates(const AffineHull& hull, const RVec& point) {
  const std::size_t d = hull.origin.size();
  const std::size_t k = hull.dim();
  Matrix a(d, RVec(k));
  RVec b(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      a[i][j] = hull.basis[j][i];
    }
    b[i] = point[i] - hull.origin[i];
  }
  auto t = solve_rows(std::move(a), std::move(b));
  if (!t) {
    throw std::logic_error("hull_coordinates: point is not on the hull");
  }
  return *t;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[x & 0xf];
    x >>= 4;
  }
  return out;
}

nlohmann::json rvec_to_json(const RVec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) {
    arr.push_back(rational_to_string(x));
  }
  return arr;
}

RVec rvec_from_json(const nlohmann::json& arr) {
  RVec v;
  v.reserve(arr.size());
  for (const auto& x : arr) {
    v.push_back(rational_from_string(x.get<std::string>()));
  }
  return v;
}

}  // namespace

Rational LinearInequality::evaluate(const RVec& x) const {
  return offset + dot(normal, x);
}

Rational LinearEquality::evaluate(const RVec& x) const {
  return offset + dot(normal, x);
}

RVec primitive_integer(const RVec& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer lcm = 1;
  for (const auto& x : v) {
    lcm = boost::multiprecision::lcm(lcm, Integer(denominator(x)));
  }
  Integer gcd = 0;
  std::vector<Integer> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = Integer(numerator(v[i])) * (lcm / Integer(denominator(v[i])));
    gcd = boost::multiprecision::gcd(gcd, scaled[i]);
  }
  if (gcd == 0) {
    throw std::invalid_argument("primitive_integer: zero vector");
  }
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rational(scaled[i] / gcd);
  }
  return out;
}

AffineHull affine_hull(const VPolytope& vp) {
  if (vp.vertices.empty()) {
    throw std::invalid_argument("affine_hull: empty vertex set");
  }
  AffineHull hull;
  hull.origin = vp.vertices.front();
  EchelonBasis ech;
  for (std::size_t i = 1; i < vp.vertices.size(); ++i) {
    if (vp.vertices[i].size() != hull.origin.size()) {
      throw std::invalid_argument("affine_hull: ragged vertex dimensions");
    }
    RVec diff(hull.origin.size());
    for (std::size_t j = 0; j < diff.size(); ++j) {
      diff[j] = vp.vertices[i][j] - hull.origin[j];
    }
    if (ech.absorb(diff)) {
      hull.basis.push_back(std::move(diff));
    }
  }
  return hull;
}

HPolytope facet_enumeration(const VPolytope& vp) {
  if (vp.vertices.empty()) {
    throw std::invalid_argument("facet_enumeration: empty vertex set");
  }
  {
    auto sorted = vp.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("facet_enumeration: duplicate vertices");
    }
  }
  const std::size_t d = vp.ambient_dim();
  const AffineHull hull = affine_hull(vp);
  const std::size_t k = hull.dim();
  if (k == 0) {
    throw std::invalid_argument(
        "facet_enumeration: degenerate input (all points coincide)");
  }

  const bool projected = k < d;
  std::vector<RVec> coords;
  coords.reserve(vp.vertices.size());
  for (const auto& v : vp.vertices) {
    coords.push_back(projected ? hull_coordinates(hull, v) : v);
  }

  Matrix cone_rows;
  cone_rows.reserve(coords.size());
  for (const auto& t : coords) {
    RVec row(k + 1);
    row[0] = 1;
    for (std::size_t j = 0; j < k; ++j) {
      row[j + 1] = t[j];
    }
    cone_rows.push_back(std::move(row));
  }
  const std::vector<RVec> rays = cone_extreme_rays(std::move(cone_rows));

  HPolytope hp;
  hp.ambient_dim = d;
  hp.affine_dim = k;
  hp.facets.reserve(rays.size());
  for (const auto& ray : rays) {
    const Rational a0 = ray[0];
    RVec a(ray.begin() + 1, ray.end());
    RVec normal;
    Rational offset;
    if (projected) {
      // Lift: find the unique representative of the facet normal that lies
      // in the hull's direction space, i.e. normal = B w with B^T B w = a.
      Matrix gram(k, RVec(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          gram[i][j] = dot(hull.basis[i], hull.basis[j]);
        }
      }
      const auto w = solve_rows(std::move(gram), a);
      if (!w) {
        throw std::logic_error("facet_enumeration: singular Gram matrix");
      }
      normal.assign(d, Rational(0));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
          normal[i] += (*w)[j] * hull.basis[j][i];
        }
      }
      offset = a0 - dot(normal, hull.origin);
    } else {
      normal = std::move(a);
      offset = a0;
    }
    RVec packed(d + 1);
    packed[0] = offset;
    for (std::size_t i = 0; i < d; ++i) {
      packed[i + 1] = normal[i];
    }
    packed = primitive_integer(packed);
    LinearInequality f;
    f.offset = packed[0];
    f.normal.assign(packed.begin() + 1, packed.end());
    hp.facets.push_back(std::move(f));
  }
  std::sort(hp.facets.begin(), hp.facets.end(),
            [](const LinearInequality& x, const LinearInequality& y) {
              if (x.offset != y.offset) {
                return x.offset < y.offset;
              }
              return x.normal < y.normal;
            });

  if (projected) {
    Matrix dirs = hull.basis;
    for (auto& n : nullspace_rows(std::move(dirs))) {
      RVec packed(d + 1);
      packed[0] = -dot(n, hull.origin);
      for (std::size_t i = 0; i < d; ++i) {
        packed[i + 1] = n[i];
      }
      packed = primitive_integer(packed);
      // Canonical sign: first nonzero normal entry positive.
      for (std::size_t i = 1; i < packed.size(); ++i) {
        if (packed[i] != 0) {
          if (packed[i] < 0) {
            for (auto& x : packed) {
              x = -x;
            }
          }
          break;
        }
      }
      LinearEquality eq;
      eq.offset = packed[0];
      eq.normal.assign(packed.begin() + 1, packed.end());
      hp.equalities.push_back(std::move(eq));
    }
    std::sort(hp.equalities.begin(), hp.equalities.end(),
              [](const LinearEquality& x, const LinearEquality& y) {
                if (x.normal != y.normal) {
                  return x.normal < y.normal;
                }
                return x.offset < y.offset;
              });
  }
  return hp;
}

std::vector<RVec> vertex_enumeration(const HPolytope& hp) {
  const std::size_t d = hp.ambient_dim;
  if (hp.facets.empty()) {
    throw std::invalid_argument("vertex_enumeration: no facets");
  }

  // Parametrize the affine hull: x = x0 + N t.
  RVec x0(d, Rational(0));
  Matrix null_basis;
  if (!hp.equalities.empty()) {
    Matrix e_rows;
    RVec e_rhs;
    for (const auto& eq : hp.equalities) {
      e_rows.push_back(eq.normal);
      e_rhs.push_back(-eq.offset);
    }
    auto sol = solve_rows(e_rows, e_rhs);
    if (!sol) {
      throw std::invalid_argument(
          "vertex_enumeration: inconsistent equality constraints");
    }
    x0 = *sol;
    null_basis = nullspace_rows(std::move(e_rows));
  } else {
    null_basis.assign(d, RVec(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
      null_basis[i][i] = 1;
    }
  }
  const std::size_t k = null_basis.size();
  if (k == 0) {
    return {x0};  // hull is a single point
  }

  Matrix cone_rows;
  cone_rows.reserve(hp.facets.size());
  for (const auto& f : hp.facets) {
    RVec row(k + 1);
    row[0] = f.offset + dot(f.normal, x0);
    for (std::size_t j = 0; j < k; ++j) {
      row[j + 1] = dot(f.normal, null_basis[j]);
    }
    cone_rows.push_back(std::move(row));
  }

  std::vector<RVec> rays;
  try {
    rays = cone_extreme_rays(std::move(cone_rows));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "vertex_enumeration: facet system does not describe a bounded "
        "polytope");
  }

  std::vector<RVec> vertices;
  vertices.reserve(rays.size());
  for (const auto& ray : rays) {
    if (ray[0] <= 0) {
      throw std::invalid_argument(
          "vertex_enumeration: unbounded direction detected");
    }
    RVec v = x0;
    for (std::size_t j = 0; j < k; ++j) {
      const Rational t = ray[j + 1] / ray[0];
      for (std::size_t i = 0; i < d; ++i) {
        v[i] += t * null_basis[j][i];
      }
    }
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

SeparationCertificate lp_membership(const RVec& point, const VPolytope& vp) {
  const std::size_t m = vp.vertices.size();
  if (m == 0) {
    throw std::invalid_argument("lp_membership: empty vertex set");
  }
  const std::size_t d = vp.ambient_dim();
  if (point.size() != d) {
    throw std::invalid_argument("lp_membership: dimension mismatch");
  }
  const std::size_t n = d + 1;  // convexity row + one row per coordinate

  // Phase-1 simplex on: sum_i w_i (1, v_i) = (1, point), w >= 0.
  Matrix a(n, RVec(m));
  RVec b(n);
  for (std::size_t j = 0; j < m; ++j) {
    a[0][j] = 1;
  }
  b[0] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a[i + 1][j] = vp.vertices[j][i];
    }
    b[i + 1] = point[i];
  }
  std::vector<bool> flipped(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] < 0) {
      flipped[i] = true;
      b[i] = -b[i];
      for (auto& x : a[i]) {
        x = -x;
      }
    }
  }

  const std::size_t ncols = m + n;  // variables then artificials
  std::vector<RVec> tab(n, RVec(ncols + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      tab[i][j] = a[i][j];
    }
    tab[i][m + i] = 1;
    tab[i][ncols] = b[i];
  }
  std::vector<std::size_t> basis(n);
  RVec rc(ncols + 1, Rational(0));  // reduced costs; last slot = -objective
  for (std::size_t i = 0; i < n; ++i) {
    basis[i] = m + i;
    for (std::size_t j = 0; j <= ncols; ++j) {
      rc[j] -= tab[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    rc[m + i] += 1;  // cost of artificial variables
  }

  const std::size_t max_iter = 50000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= max_iter) {
      throw std::logic_error("lp_membership: simplex iteration cap exceeded");
    }
    // Bland's rule: smallest-index entering column with negative reduced cost.
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (rc[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) {
      break;  // optimal
    }
    std::size_t leave = n;
    Rational best_ratio;
    for (std::size_t i = 0; i < n; ++i) {
      if (tab[i][enter] > 0) {
        const Rational ratio = tab[i][ncols] / tab[i][enter];
        if (leave == n || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == n) {
      throw std::logic_error("lp_membership: phase-1 LP unbounded");
    }
    const Rational piv = tab[leave][enter];
    for (auto& x : tab[leave]) {
      x /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave || tab[i][enter] == 0) {
        continue;
      }
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= ncols; ++j) {
        tab[i][j] -= f * tab[leave][j];
      }
    }
    if (rc[enter] != 0) {
      const Rational f = rc[enter];
      for (std::size_t j = 0; j <= ncols; ++j) {
        rc[j] -= f * tab[leave][j];
      }
    }
    basis[leave] = enter;
  }

  const Rational objective = -rc[ncols];
  if (objective == 0) {
    InsideCertificate cert;
    cert.weights.assign(m, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (basis[i] < m) {
        cert.weights[basis[i]] = tab[i][ncols];
      }
    }
    // Exact re-verification before handing the certificate out.
    Rational wsum = 0;
    RVec recon(d, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      if (cert.weights[j] < 0) {
        throw std::logic_error("lp_membership: negative weight");
      }
      wsum += cert.weights[j];
      for (std::size_t i = 0; i < d; ++i) {
        recon[i] += cert.weights[j] * vp.vertices[j][i];
      }
    }
    if (wsum != 1 || recon != point) {
      throw std::logic_error("lp_membership: inside certificate failed check");
    }
    return cert;
  }

  // Farkas certificate from the artificial columns' reduced costs.
  RVec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = 1 - rc[m + i];
    if (flipped[i]) {
      y[i] = -y[i];
    }
  }
  RVec packed(n);
  packed[0] = -y[0];
  for (std::size_t i = 0; i < d; ++i) {
    packed[i + 1] = -y[i + 1];
  }
  packed = primitive_integer(packed);
  OutsideCertificate cert;
  cert.separator.offset = packed[0];
  cert.separator.normal.assign(packed.begin() + 1, packed.end());
  for (const auto& v : vp.vertices) {
    if (cert.separator.evaluate(v) < 0) {
      throw std::logic_error("lp_membership: separator fails on a vertex");
    }
  }
  if (cert.separator.evaluate(point) >= 0) {
    throw std::logic_error("lp_membership: separator does not cut the point");
  }
  return cert;
}

nlohmann::json hpolytope_to_json(const HPolytope& hp) {
  nlohmann::json j;
  j["ambient_dim"] = hp.ambient_dim;
  j["affine_dim"] = hp.affine_dim;
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& f : hp.facets) {
    facets.push_back({{"offset", rational_to_string(f.offset)},
                      {"normal", rvec_to_json(f.normal)}});
  }
  j["facets"] = std::move(facets);
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& e : hp.equalities) {
    eqs.push_back({{"offset", rational_to_string(e.offset)},
                   {"normal", rvec_to_json(e.normal)}});
  }
  j["equalities"] = std::move(eqs);
  return j;
}

HPolytope hpolytope_from_json(const nlohmann::json& j) {
  HPolytope hp;
  hp.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  hp.affine_dim = j.at("affine_dim").get<std::size_t>();
  for (const auto& f : j.at("facets")) {
    LinearInequality li;
    li.offset = rational_from_string(f.at("offset").get<std::string>());
    li.normal = rvec_from_json(f.at("normal"));
    if (li.normal.size() != hp.ambient_dim) {
      throw std::invalid_argument("hpolytope_from_json: bad normal length");
    }
    hp.facets.push_back(std::move(li));
  }
  for (const auto& e : j.at("equalities")) {
    LinearEquality le;
    le.offset = rational_from_string(e.at("offset").get<std::string>());
    le.normal = rvec_from_json(e.at("normal"));
    if (le.normal.size() != hp.ambient_dim) {
      throw std::invalid_argument("hpolytope_from_json: bad normal length");
    }
    hp.equalities.push_back(std::move(le));
  }
  return hp;
}

std::string vertex_set_hash(const VPolytope& vp) {
  auto sorted = vp.vertices;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "vertices:" << sorted.size() << ";";
  for (const auto& v : sorted) {
    for (const auto& x : v) {
      os << rational_to_string(x) << ",";
    }
    os << ";";
  }
  return "fnv1a64:" + hex64(fnv1a64(os.str()));
}

std::string hpolytope_hash(const HPolytope& hp) {
  return "fnv1a64:" + hex64(fnv1a64(hpolytope_to_json(hp).dump()));
}

}  // namespace bellmagic::geometry
