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

#ifndef BELLMAGIC_CHANNELS_HPP
#define BELLMAGIC_CHANNELS_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "bellmagic/qcore.hpp"

namespace bellmagic::channels {

/**
 * A single-qubit quantum operation in Kraus form, E(rho) = sum_i K_i rho
 * K_i^dag. Construction validates trace preservation (sum_i K_i^dag K_i = 1
 * within `tol`) and throws std::invalid_argument otherwise. Complete
 * positivity is automatic for Kraus form.
 */
class Channel {
 public:
  explicit Channel(std::vector<Eigen::Matrix2cd> kraus, double tol = 1e-10);

  const std::vector<Eigen::Matrix2cd>& kraus() const { return kraus_; }

 private:
  std::vector<Eigen::Matrix2cd> kraus_;
};

/**
 * The two-qubit state dual to a channel: (id ⊗ E) applied to the projector
 * on (|00> + |11>)/sqrt(2). The first tensor factor is the unmeasured half;
 * the channel acts on the second. Construction additionally checks that the
 * partial trace over the second factor is 1/2 (trace preservation).
 */
struct ChoiState {
  qcore::TwoQubitState state;

  explicit ChoiState(const Eigen::Matrix4cd& rho, double tol = 1e-9);
};

/** A convex mixture of unitaries (always a unital channel). */
struct UnitalMixture {
  std::vector<std::pair<double, Eigen::Matrix2cd>> terms;

  /** Kraus form { sqrt(p_i) U_i }. Throws if weights are negative or do not
   *  sum to 1 (within 1e-10), or a term is not unitary. */
  Channel to_channel() const;
};

/** Parameters of the phase gate exposed to Gaussian phase noise: the target
 *  rotation angle theta and the noise spread s >= 0. */
struct DephasedPhaseGate {
  double theta;
  double s;
};

/** Parameters of the phase gate followed by depolarizing noise of strength
 *  p in [0, 1]. */
struct DepolarizedPhaseGate {
  double theta;
  double p;
};

/** Choi state of a channel. */
ChoiState kraus_to_choi(const Channel& e);

/** Minimal Kraus set recovered from a Choi state's eigensystem (eigenvalues
 *  below 1e-12 are dropped). */
std::vector<Eigen::Matrix2cd> choi_to_kraus(const ChoiState& c);

/** Pauli expectation table of a Choi state. */
qcore::CGTable choi_to_cg(const ChoiState& c);

/** Convenience: table of (id ⊗ E) |phi><phi|. */
qcore::CGTable cg_table(const Channel& e);

/** Applies the channel to a single-qubit operator. */
Eigen::Matrix2cd apply(const Channel& e, const Eigen::Matrix2cd& rho);

/** Post-composition with a Clifford: returns C∘E (apply E, then C). */
Channel compose(const qcore::CliffordElement& c, const Channel& e);

/**
 * Phase gate diag(1, e^{i theta}) whose angle fluctuates with Gaussian
 * spread s. Kraus form:
 *   K_0 = sqrt((1 + e^{-s^2/2})/2) diag(1,  e^{i theta})
 *   K_1 = sqrt((1 - e^{-s^2/2})/2) diag(1, -e^{i theta})
 * Throws std::invalid_argument for s < 0.
 */
Channel make_dephased_phase_gate(const DephasedPhaseGate& g);

/**
 * The same dephased phase gate written as a phase flip with probability
 * p = (1 - e^{-s^2/2})/2 after the rotation:
 *   K_0 = sqrt(1-p) U_z(theta),   K_1 = sqrt(p) Z U_z(theta).
 * Equivalent to make_dephased_phase_gate (same Choi state); kept as the
 * second algebraic route for tests.
 */
Channel make_dephased_phase_gate_flip_form(const DephasedPhaseGate& g);

/** Closed-form expectation table of the dephased phase gate:
 *    diag block [[e cos, e sin], [e sin, -e cos]] with e = e^{-s^2/2},
 *    unit II and ZZ entries, zeros elsewhere. */
qcore::CGTable dephased_phase_table(double theta, double s);

/** E(rho) = (1-p) U_z(theta) rho U_z(theta)^dag + p 1/2.
 *  Throws std::invalid_argument for p outside [0, 1]. */
Channel make_depolarized_phase_gate(const DepolarizedPhaseGate& g);

/**
 * Convex mixture of Clifford conjugations. `weights` is indexed like
 * qcore::clifford_group(); it must be entrywise >= 0 and sum to 1 within
 * 1e-10. Throws std::invalid_argument otherwise.
 */
Channel make_clifford_mixture(const std::vector<double>& weights);

/** Same, keyed by canonical element names ("I", "H", "S", "HS", ...). */
Channel make_clifford_mixture(const std::map<std::string, double>& weights);

// --- JSON interchange -------------------------------------------------------
//
// Accepted forms:
//   {"kraus": [[[re,im],[re,im],[re,im],[re,im]], ...]}   row-major 2x2
//   {"family": "dephased_phase",    "theta": t, "s": s}
//   {"family": "depolarized_phase", "theta": t, "p": p}
//   {"family": "clifford_mixture",  "weights": {"I": w, "H": w, ...}}

Channel channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const Channel& e);

// --- seeded sampling (used by the verification sweeps) ----------------------

/** Haar-ish random CPTP channel from a QR-orthonormalized Gaussian isometry
 *  with `kraus_rank` in 1..4. */
Channel sample_cptp_channel(std::mt19937_64& rng, int kraus_rank = 4);

/** Haar random single-qubit unitary as a channel. */
Channel sample_unitary_channel(std::mt19937_64& rng);

/** Random convex weights over the 24 Clifford elements (flat Dirichlet). */
std::vector<double> sample_mixture_weights(std::mt19937_64& rng,
                                           std::size_t n);

}  // namespace bellmagic::channels

#endif  // BELLMAGIC_CHANNELS_HPP
