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

#include "bellmagic/distill.hpp"

#include <cmath>
#include <stdexcept>

namespace bellmagic::distill {

namespace {

using qcore::Pauli;

// Takes the measured Pauli axis to Z under conjugation, R sigma R^dag = Z.
Eigen::Matrix2cd decode_rotation(Pauli p) {
  const double c = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd r;
  switch (p) {
    case Pauli::X:  // Hadamard
      r << c, c, c, -c;
      return r;
    case Pauli::Y:  // H S^dag
      r << c, std::complex<double>(0, -c), c, std::complex<double>(0, c);
      return r;
    case Pauli::Z:
      return Eigen::Matrix2cd::Identity();
    case Pauli::I:
      break;
  }
  throw std::invalid_argument("decode_rotation: identity is not measurable");
}

}  // namespace

Eigen::Matrix4cd ParityMeasurement::projector() const {
  if (first == Pauli::I || second == Pauli::I) {
    throw std::invalid_argument(
        "ParityMeasurement: identity is not a parity axis");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("ParityMeasurement: sign must be +-1");
  }
  return 0.5 * (Eigen::Matrix4cd::Identity() +
                static_cast<double>(sign) *
                    qcore::kron2(qcore::pauli_matrix(first),
                                 qcore::pauli_matrix(second)));
}

std::string octahedron_verdict_name(OctahedronVerdict v) {
  switch (v) {
    case OctahedronVerdict::kInside:
      return "inside";
    case OctahedronVerdict::kBoundary:
      return "boundary";
    case OctahedronVerdict::kOutside:
      return "outside";
  }
  throw std::invalid_argument("octahedron_verdict_name: bad enum value");
}

OctahedronVerdict octahedron_check(const std::array<double, 3>& bloch,
                                   double tol) {
  const double margin =
      std::abs(bloch[0]) + std::abs(bloch[1]) + std::abs(bloch[2]) - 1.0;
  if (margin > tol) {
    return OctahedronVerdict::kOutside;
  }
  if (margin < -tol) {
    return OctahedronVerdict::kInside;
  }
  return OctahedronVerdict::kBoundary;
}

AncillaReport prepare_ancilla(const channels::Channel& channel,
                              const ParityMeasurement& m) {
  const Eigen::Matrix4cd proj = m.projector();
  const channels::ChoiState choi = channels::kraus_to_choi(channel);
  const Eigen::Matrix4cd& rho = choi.state.matrix();

  const double p = (proj * rho).trace().real();
  if (p <= 1e-12) {
    throw std::runtime_error(
        "prepare_ancilla: the selected parity outcome has probability ~0");
  }
  Eigen::Matrix4cd post = proj * rho * proj / p;

  const Eigen::Matrix4cd u =
      qcore::kron2(decode_rotation(m.first), decode_rotation(m.second));
  post = u * post * u.adjoint();

  // CNOT from the first qubit onto the second, |a,b> -> |a, a xor b>. The
  // post-measurement state has definite Z (x) Z parity, so this leaves the
  // second qubit in a computational basis state and all the information on
  // the first.
  constexpr int kPerm[4] = {0, 1, 3, 2};
  Eigen::Matrix4cd flipped;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      flipped(kPerm[i], kPerm[j]) = post(i, j);
    }
  }

  Eigen::Matrix2cd red = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      for (int b = 0; b < 2; ++b) {
        red(a, ap) += flipped(2 * a + b, 2 * ap + b);
      }
    }
  }

  AncillaReport rep;
  rep.success_prob = p;
  rep.bloch = {
      (red * qcore::pauli_matrix(Pauli::X)).trace().real(),
      (red * qcore::pauli_matrix(Pauli::Y)).trace().real(),
      (red * qcore::pauli_matrix(Pauli::Z)).trace().real()};
  rep.octahedron_margin = std::abs(rep.bloch[0]) + std::abs(rep.bloch[1]) +
                          std::abs(rep.bloch[2]) - 1.0;
  return rep;
}

nlohmann::json ancilla_to_json(const AncillaReport& r) {
  return nlohmann::json{
      {"bloch", {r.bloch[0], r.bloch[1], r.bloch[2]}},
      {"success_prob", r.success_prob},
      {"octahedron_margin", r.octahedron_margin},
      {"octahedron", octahedron_verdict_name(octahedron_check(r.bloch))}};
}

}  // namespace bellmagic::distill
