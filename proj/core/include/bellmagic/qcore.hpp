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

#ifndef BELLMAGIC_QCORE_HPP
#define BELLMAGIC_QCORE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bellmagic/rational.hpp"

namespace bellmagic::qcore {

using complex = std::complex<double>;

/** Single-qubit Pauli label. Values index the I, X, Y, Z basis order used
 *  throughout (correlation-table rows/columns, facet matrices, ...). */
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

/** The 2x2 matrix of a Pauli label. */
Eigen::Matrix2cd pauli_matrix(Pauli p);

/** One-letter name ("I", "X", "Y", "Z"). */
std::string pauli_name(Pauli p);

/** A Pauli with a sign, e.g. -Y. Used for conjugation images. */
struct SignedPauli {
  int sign;     // +1 or -1
  Pauli label;  // X, Y or Z

  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/**
 * One element of the single-qubit Clifford group modulo global phase.
 *
 * An element is identified by its conjugation action on {X, Y, Z}: a signed
 * permutation with determinant +1 (a rotation of the Pauli octahedron). The
 * stored unitary is an arbitrary phase representative; `name` is a shortest
 * word in the generators H and S, with matrices composing left to right
 * ("HS" means apply S first, then H).
 */
class CliffordElement {
 public:
  /** Derives the signed-permutation action from `u` by conjugating each
   *  Pauli. Throws std::invalid_argument if `u` does not map Paulis to
   *  signed Paulis (i.e. is not Clifford) or is not unitary. */
  CliffordElement(const Eigen::Matrix2cd& u, std::string name);

  const Eigen::Matrix2cd& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }

  /** Image of p under conjugation: u p u^dag = sign * label.
   *  Throws std::invalid_argument for p == Pauli::I. */
  SignedPauli image(Pauli p) const;

  /** The action as a 3x3 signed permutation matrix M (row-major, M[b][a] =
   *  sign iff X_a maps to sign * X_b). Its determinant is always +1. */
  std::array<std::array<int, 3>, 3> action_matrix() const;

  /** True iff the conjugation action fixes every Pauli axis (i.e. the
   *  element lies in the Pauli subgroup {I, X, Y, Z}). */
  bool is_pauli() const;

  /** Elements are equal iff their actions agree (phases are ignored). */
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.images_ == b.images_;
  }

 private:
  Eigen::Matrix2cd matrix_;
  std::array<SignedPauli, 3> images_;  // images of X, Y, Z
  std::string name_;
};

/**
 * The 24 single-qubit Clifford elements (mod phase), enumerated once by
 * breadth-first closure over {H, S} and cached. Order is deterministic:
 * identity first, then by word length / discovery order.
 */
const std::vector<CliffordElement>& clifford_group();

/** Index of an element (matched by action) in clifford_group().
 *  Throws std::invalid_argument if absent (cannot happen for well-formed
 *  elements; guards corrupted input). */
std::size_t clifford_index(const CliffordElement& e);

/** Group composition a∘b (apply b first). The result's name is looked up in
 *  the canonical enumeration. */
CliffordElement compose(const CliffordElement& a, const CliffordElement& b);

/** Inverse element, looked up in the canonical enumeration. */
CliffordElement inverse(const CliffordElement& e);

/** Conjugation action of `c` on Pauli `p`; rejects p == I. */
SignedPauli conjugation_action(const CliffordElement& c, Pauli p);

/** Kronecker product of two 2x2 matrices, index convention
 *  (A⊗B)[2a+b][2a'+b'] = A[a][a'] B[b][b']. */
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

/** The maximally entangled vector (|00> + |11>)/sqrt(2). */
Eigen::Vector4cd max_entangled_phi();

/**
 * A validated two-qubit density operator. Construction checks hermiticity,
 * unit trace and positive semidefiniteness (eigenvalues >= -tol) and throws
 * std::invalid_argument on violation.
 */
class TwoQubitState {
 public:
  explicit TwoQubitState(const Eigen::Matrix4cd& rho, double tol = 1e-9);

  const Eigen::Matrix4cd& matrix() const { return rho_; }

 private:
  Eigen::Matrix4cd rho_;
};

/**
 * A 4x4 table of two-qubit Pauli expectation values.
 *
 * entries[r][c] = Tr(rho * sigma_c ⊗ sigma_r): the column index labels the
 * first tensor factor, the row index the second. Row-major layout:
 *
 *     II  XI  YI  ZI
 *     IX  XX  YX  ZX
 *     IY  XY  YY  ZY
 *     IZ  XZ  YZ  ZZ
 *
 * entries[0][0] is always 1 for a density operator. The 15 remaining entries,
 * flattened row-major, are the coordinates used for all polytope geometry.
 */
struct CGTable {
  std::array<std::array<double, 4>, 4> entries{};

  /** Expectation of sigma_first ⊗ sigma_second. */
  double value(Pauli first, Pauli second) const {
    return entries[static_cast<int>(second)][static_cast<int>(first)];
  }
  double& value(Pauli first, Pauli second) {
    return entries[static_cast<int>(second)][static_cast<int>(first)];
  }

  /** The 15 coordinates (row-major, skipping entries[0][0]). */
  std::array<double, 15> coords() const;

  /** Exact rational coordinates (doubles are dyadic rationals; lossless). */
  std::vector<Rational> exact_coords() const;

  /** Rational coordinates rounded by continued fractions at `eps`; use for
   *  LP membership of floating-point channel tables. */
  std::vector<Rational> rounded_coords(double eps = 1e-12) const;

  static CGTable from_coords(const std::array<double, 15>& c);

  /** Largest absolute entry-wise difference. */
  static double max_abs_diff(const CGTable& a, const CGTable& b);

  friend bool operator==(const CGTable&, const CGTable&) = default;
};

/** Number of coordinates of a flattened table (without the I⊗I entry). */
inline constexpr std::size_t kTableDim = 15;

/** Full Pauli expectation table of a two-qubit state. */
CGTable cg_table(const TwoQubitState& state);

/**
 * Relabels the second tensor factor of a table by the signed permutation of
 * `c`: the result is the table of (id ⊗ c) acting after whatever produced
 * `t`. Row 0 (second factor = I) is fixed.
 */
CGTable relabel_second_factor(const CGTable& t, const CliffordElement& c);

/** Same for the first tensor factor (column relabeling). */
CGTable relabel_first_factor(const CGTable& t, const CliffordElement& c);

}  // namespace bellmagic::qcore

#endif  // BELLMAGIC_QCORE_HPP
