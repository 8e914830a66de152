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

#include "bellmagic/qcore.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace bellmagic::qcore {

namespace {

constexpr double kMatchTol = 1e-9;

const Eigen::Matrix2cd& hadamard() {
  static const Eigen::Matrix2cd h = [] {
    Eigen::Matrix2cd m;
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
  }();
  return h;
}

const Eigen::Matrix2cd& phase_s() {
  static const Eigen::Matrix2cd s = [] {
    Eigen::Matrix2cd m;
    m << 1.0, 0.0, 0.0, complex(0.0, 1.0);
    return m;
  }();
  return s;
}

}  // namespace

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, complex(0, -1), complex(0, 1), 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

std::string pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I:
      return "I";
    case Pauli::X:
      return "X";
    case Pauli::Y:
      return "Y";
    case Pauli::Z:
      return "Z";
  }
  throw std::invalid_argument("pauli_name: bad label");
}

CliffordElement::CliffordElement(const Eigen::Matrix2cd& u, std::string name)
    : matrix_(u), name_(std::move(name)) {
  const Eigen::Matrix2cd uu = u * u.adjoint();
  if ((uu - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::invalid_argument("CliffordElement: matrix is not unitary");
  }
  const std::array<Pauli, 3> axes = {Pauli::X, Pauli::Y, Pauli::Z};
  for (std::size_t i = 0; i < 3; ++i) {
    const Eigen::Matrix2cd img = u * pauli_matrix(axes[i]) * u.adjoint();
    bool found = false;
    for (Pauli q : axes) {
      for (int sign : {+1, -1}) {
        if ((img - double(sign) * pauli_matrix(q)).cwiseAbs().maxCoeff() <
            kMatchTol) {
          images_[i] = SignedPauli{sign, q};
          found = true;
        }
      }
    }
    if (!found) {
      throw std::invalid_argument(
          "CliffordElement: matrix does not normalize the Pauli group");
    }
  }
}

SignedPauli CliffordElement::image(Pauli p) const {
  if (p == Pauli::I) {
    throw std::invalid_argument("CliffordElement::image: label must be X/Y/Z");
  }
  return images_[static_cast<int>(p) - 1];
}

std::array<std::array<int, 3>, 3> CliffordElement::action_matrix() const {
  std::array<std::array<int, 3>, 3> m{};
  for (int a = 0; a < 3; ++a) {
    const SignedPauli img = images_[a];
    m[static_cast<int>(img.label) - 1][a] = img.sign;
  }
  return m;
}

bool CliffordElement::is_pauli() const {
  for (int a = 0; a < 3; ++a) {
    if (static_cast<int>(images_[a].label) != a + 1) {
      return false;
    }
  }
  return true;
}

const std::vector<CliffordElement>& clifford_group() {
  static const std::vector<CliffordElement> group = [] {
    std::vector<CliffordElement> elems;
    elems.emplace_back(Eigen::Matrix2cd::Identity(), "I");
    std::deque<std::size_t> queue = {0};
    const std::array<std::pair<const Eigen::Matrix2cd*, std::string>, 2> gens =
        {{{&hadamard(), "H"}, {&phase_s(), "S"}}};
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      for (const auto& [gmat, gname] : gens) {
        const Eigen::Matrix2cd m = (*gmat) * elems[idx].matrix();
        const std::string word =
            gname + (elems[idx].name() == "I" ? "" : elems[idx].name());
        CliffordElement cand(m, word);
        bool known = false;
        for (const auto& e : elems) {
          if (e == cand) {
            known = true;
            break;
          }
        }
        if (!known) {
          elems.push_back(std::move(cand));
          queue.push_back(elems.size() - 1);
        }
      }
    }
    if (elems.size() != 24) {
      throw std::logic_error("clifford_group: closure size != 24");
    }
    return elems;
  }();
  return group;
}

std::size_t clifford_index(const CliffordElement& e) {
  const auto& group = clifford_group();
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i] == e) {
      return i;
    }
  }
  throw std::invalid_argument("clifford_index: element not in group");
}

CliffordElement compose(const CliffordElement& a, const CliffordElement& b) {
  const CliffordElement raw(a.matrix() * b.matrix(), "?");
  return clifford_group()[clifford_index(raw)];
}

CliffordElement inverse(const CliffordElement& e) {
  const CliffordElement raw(e.matrix().adjoint(), "?");
  return clifford_group()[clifford_index(raw)];
}

SignedPauli conjugation_action(const CliffordElement& c, Pauli p) {
  return c.image(p);
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Vector4cd max_entangled_phi() {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  const double r = 1.0 / std::sqrt(2.0);
  v(0) = r;  // |00>
  v(3) = r;  // |11>
  return v;
}

TwoQubitState::TwoQubitState(const Eigen::Matrix4cd& rho, double tol)
    : rho_(rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("TwoQubitState: matrix is not hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > tol ||
      std::abs(rho.trace().imag()) > tol) {
    throw std::invalid_argument("TwoQubitState: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw std::invalid_argument("TwoQubitState: matrix is not positive");
  }
}

std::array<double, 15> CGTable::coords() const {
  std::array<double, 15> out{};
  std::size_t k = 0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == 0 && c == 0) {
        continue;
      }
      out[k++] = entries[r][c];
    }
  }
  return out;
}

std::vector<Rational> CGTable::exact_coords() const {
  const auto c = coords();
  std::vector<Rational> out(kTableDim);
  for (std::size_t i = 0; i < kTableDim; ++i) {
    out[i] = exact_rational(c[i]);
  }
  return out;
}

std::vector<Rational> CGTable::rounded_coords(double eps) const {
  const auto c = coords();
  std::vector<Rational> out(kTableDim);
  for (std::size_t i = 0; i < kTableDim; ++i) {
    out[i] = rationalize(c[i], eps);
  }
  return out;
}

CGTable CGTable::from_coords(const std::array<double, 15>& c) {
  CGTable t;
  t.entries[0][0] = 1.0;
  std::size_t k = 0;
  for (int r = 0; r < 4; ++r) {
    for (int col = 0; col < 4; ++col) {
      if (r == 0 && col == 0) {
        continue;
      }
      t.entries[r][col] = c[k++];
    }
  }
  return t;
}

double CGTable::max_abs_diff(const CGTable& a, const CGTable& b) {
  double m = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      m = std::max(m, std::abs(a.entries[r][c] - b.entries[r][c]));
    }
  }
  return m;
}

CGTable cg_table(const TwoQubitState& state) {
  CGTable t;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const Eigen::Matrix4cd obs =
          kron2(pauli_matrix(static_cast<Pauli>(c)),
                pauli_matrix(static_cast<Pauli>(r)));
      t.entries[r][c] = (state.matrix() * obs).trace().real();
    }
  }
  return t;
}

CGTable relabel_second_factor(const CGTable& t, const CliffordElement& c) {
  CGTable out;
  out.entries[0] = t.entries[0];
  for (int a = 1; a < 4; ++a) {
    const SignedPauli img = c.image(static_cast<Pauli>(a));
    const int b = static_cast<int>(img.label);
    for (int col = 0; col < 4; ++col) {
      out.entries[b][col] = img.sign * t.entries[a][col];
    }
  }
  return out;
}

CGTable relabel_first_factor(const CGTable& t, const CliffordElement& c) {
  CGTable out;
  for (int r = 0; r < 4; ++r) {
    out.entries[r][0] = t.entries[r][0];
  }
  for (int a = 1; a < 4; ++a) {
    const SignedPauli img = c.image(static_cast<Pauli>(a));
    const int b = static_cast<int>(img.label);
    for (int r = 0; r < 4; ++r) {
      out.entries[r][b] = img.sign * t.entries[r][a];
    }
  }
  return out;
}

}  // namespace bellmagic::qcore
