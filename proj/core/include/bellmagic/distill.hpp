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

#ifndef BELLMAGIC_DISTILL_HPP_
#define BELLMAGIC_DISTILL_HPP_

#include <array>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "bellmagic/channels.hpp"
#include "bellmagic/qcore.hpp"

namespace bellmagic::distill {

// Two-outcome parity measurement on a pair of qubits.  `sign` selects the
// +1 or -1 eigenspace of sigma_first (x) sigma_second.
struct ParityMeasurement {
  qcore::Pauli first = qcore::Pauli::Z;
  qcore::Pauli second = qcore::Pauli::Z;
  int sign = 1;

  // Rank-2 projector (I + sign * sigma_first (x) sigma_second) / 2.
  // Throws std::invalid_argument if a label is the identity or sign is
  // not +-1.
  Eigen::Matrix4cd projector() const;
};

// Single-qubit state extracted from one half of a parity-measured pair.
struct AncillaReport {
  std::array<double, 3> bloch{};  // (x, y, z) Bloch coordinates
  double success_prob = 0.0;      // probability of the selected parity
  // |x| + |y| + |z| - 1.  Positive values leave the stabilizer
  // octahedron, which is what magic-state distillation needs.
  double octahedron_margin = 0.0;
};

enum class OctahedronVerdict { kInside, kBoundary, kOutside };

std::string octahedron_verdict_name(OctahedronVerdict v);

OctahedronVerdict octahedron_check(const std::array<double, 3>& bloch,
                                   double tol = 1e-12);

// Runs the ancilla preparation: form the channel's Choi state, project
// onto the selected parity eigenspace, rotate each qubit so the measured
// Pauli axis becomes Z, disentangle with a CNOT and trace the second
// qubit out.  Throws std::runtime_error when the selected outcome has
// probability <= 1e-12, i.e. the measurement never succeeds.
AncillaReport prepare_ancilla(const channels::Channel& channel,
                              const ParityMeasurement& m);

nlohmann::json ancilla_to_json(const AncillaReport& r);

}  // namespace bellmagic::distill

#endif  // BELLMAGIC_DISTILL_HPP_
