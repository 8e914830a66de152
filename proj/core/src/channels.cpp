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

#include "bellmagic/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace bellmagic::channels {

using qcore::complex;

namespace {

Eigen::Matrix2cd phase_rotation(double theta) {
  Eigen::Matrix2cd u;
  u << 1.0, 0.0, 0.0, std::polar(1.0, theta);
  return u;
}

Eigen::Matrix4cd phi_projector() {
  const Eigen::Vector4cd phi = qcore::max_entangled_phi();
  return phi * phi.adjoint();
}

}  // namespace

Channel::Channel(std::vector<Eigen::Matrix2cd> kraus, double tol)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw std::invalid_argument("Channel: empty Kraus set");
  }
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& k : kraus_) {
    sum += k.adjoint() * k;
  }
  if ((sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument(
        "Channel: Kraus operators do not preserve the trace");
  }
}

ChoiState::ChoiState(const Eigen::Matrix4cd& rho, double tol)
    : state(rho, tol) {
  // Partial trace over the second factor must be 1/2.
  Eigen::Matrix2cd red = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      complex s = 0;
      for (int b = 0; b < 2; ++b) {
        s += rho(2 * a + b, 2 * ap + b);
      }
      red(a, ap) = s;
    }
  }
  if ((red - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument(
        "ChoiState: first-factor marginal is not maximally mixed");
  }
}

Channel UnitalMixture::to_channel() const {
  if (terms.empty()) {
    throw std::invalid_argument("UnitalMixture: no terms");
  }
  double total = 0.0;
  std::vector<Eigen::Matrix2cd> kraus;
  kraus.reserve(terms.size());
  for (const auto& [p, u] : terms) {
    if (p < 0.0) {
      throw std::invalid_argument("UnitalMixture: negative weight");
    }
    if ((u * u.adjoint() - Eigen::Matrix2cd::Identity())
            .cwiseAbs()
            .maxCoeff() > 1e-10) {
      throw std::invalid_argument("UnitalMixture: term is not unitary");
    }
    total += p;
    kraus.push_back(std::sqrt(p) * u);
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("UnitalMixture: weights do not sum to 1");
  }
  return Channel(std::move(kraus));
}

ChoiState kraus_to_choi(const Channel& e) {
  const Eigen::Matrix4cd proj = phi_projector();
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  for (const auto& k : e.kraus()) {
    const Eigen::Matrix4cd lifted = qcore::kron2(id, k);
    out += lifted * proj * lifted.adjoint();
  }
  return ChoiState(out);
}

std::vector<Eigen::Matrix2cd> choi_to_kraus(const ChoiState& c) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(c.state.matrix());
  std::vector<Eigen::Matrix2cd> kraus;
  for (int n = 0; n < 4; ++n) {
    const double lambda = es.eigenvalues()(n);
    if (lambda < 1e-12) {
      continue;
    }
    const Eigen::Vector4cd v = es.eigenvectors().col(n);
    // Choi vector component (a, b) = K[b][a] / sqrt(2).
    Eigen::Matrix2cd k;
    const double scale = std::sqrt(2.0 * lambda);
    k << scale * v(0), scale * v(2), scale * v(1), scale * v(3);
    kraus.push_back(k);
  }
  return kraus;
}

qcore::CGTable choi_to_cg(const ChoiState& c) { return qcore::cg_table(c.state); }

qcore::CGTable cg_table(const Channel& e) { return choi_to_cg(kraus_to_choi(e)); }

Eigen::Matrix2cd apply(const Channel& e, const Eigen::Matrix2cd& rho) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (const auto& k : e.kraus()) {
    out += k * rho * k.adjoint();
  }
  return out;
}

Channel compose(const qcore::CliffordElement& c, const Channel& e) {
  std::vector<Eigen::Matrix2cd> kraus;
  kraus.reserve(e.kraus().size());
  for (const auto& k : e.kraus()) {
    kraus.push_back(c.matrix() * k);
  }
  return Channel(std::move(kraus));
}

Channel make_dephased_phase_gate(const DephasedPhaseGate& g) {
  if (g.s < 0.0) {
    throw std::invalid_argument("make_dephased_phase_gate: s must be >= 0");
  }
  const double e = std::exp(-g.s * g.s / 2.0);
  Eigen::Matrix2cd k0;
  k0 << 1.0, 0.0, 0.0, std::polar(1.0, g.theta);
  k0 *= std::sqrt((1.0 + e) / 2.0);
  Eigen::Matrix2cd k1;
  k1 << 1.0, 0.0, 0.0, -std::polar(1.0, g.theta);
  k1 *= std::sqrt((1.0 - e) / 2.0);
  return Channel({k0, k1});
}

Channel make_dephased_phase_gate_flip_form(const DephasedPhaseGate& g) {
  if (g.s < 0.0) {
    throw std::invalid_argument(
        "make_dephased_phase_gate_flip_form: s must be >= 0");
  }
  const double e = std::exp(-g.s * g.s / 2.0);
  const double p = (1.0 - e) / 2.0;
  const Eigen::Matrix2cd u = phase_rotation(g.theta);
  const Eigen::Matrix2cd z = qcore::pauli_matrix(qcore::Pauli::Z);
  return Channel({std::sqrt(1.0 - p) * u, std::sqrt(p) * z * u});
}

qcore::CGTable dephased_phase_table(double theta, double s) {
  if (s < 0.0) {
    throw std::invalid_argument("dephased_phase_table: s must be >= 0");
  }
  const double e = std::exp(-s * s / 2.0);
  qcore::CGTable t;
  t.entries[0][0] = 1.0;
  t.entries[1][1] = e * std::cos(theta);   // XX
  t.entries[1][2] = e * std::sin(theta);   // YX
  t.entries[2][1] = e * std::sin(theta);   // XY
  t.entries[2][2] = -e * std::cos(theta);  // YY
  t.entries[3][3] = 1.0;                   // ZZ
  return t;
}

Channel make_depolarized_phase_gate(const DepolarizedPhaseGate& g) {
  if (g.p < 0.0 || g.p > 1.0) {
    throw std::invalid_argument(
        "make_depolarized_phase_gate: p must be in [0, 1]");
  }
  const Eigen::Matrix2cd u = phase_rotation(g.theta);
  std::vector<Eigen::Matrix2cd> kraus;
  kraus.push_back(std::sqrt(1.0 - g.p) * u);
  const double w = std::sqrt(g.p) / 2.0;
  for (auto pl : {qcore::Pauli::I, qcore::Pauli::X, qcore::Pauli::Y,
                  qcore::Pauli::Z}) {
    kraus.push_back(w * qcore::pauli_matrix(pl) * u);
  }
  return Channel(std::move(kraus));
}

Channel make_clifford_mixture(const std::vector<double>& weights) {
  const auto& group = qcore::clifford_group();
  if (weights.size() != group.size()) {
    throw std::invalid_argument(
        "make_clifford_mixture: need one weight per Clifford element");
  }
  double total = 0.0;
  std::vector<Eigen::Matrix2cd> kraus;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0) {
      throw std::invalid_argument("make_clifford_mixture: negative weight");
    }
    total += weights[i];
    if (weights[i] > 0.0) {
      kraus.push_back(std::sqrt(weights[i]) * group[i].matrix());
    }
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "make_clifford_mixture: weights do not sum to 1");
  }
  return Channel(std::move(kraus));
}

Channel make_clifford_mixture(const std::map<std::string, double>& weights) {
  const auto& group = qcore::clifford_group();
  std::vector<double> w(group.size(), 0.0);
  for (const auto& [name, p] : weights) {
    bool found = false;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (group[i].name() == name) {
        w[i] += p;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("make_clifford_mixture: unknown element '" +
                                  name + "'");
    }
  }
  return make_clifford_mixture(w);
}

Channel channel_from_json(const nlohmann::json& j) {
  if (j.contains("kraus")) {
    std::vector<Eigen::Matrix2cd> kraus;
    for (const auto& km : j.at("kraus")) {
      if (!km.is_array() || km.size() != 4) {
        throw std::invalid_argument(
            "channel_from_json: each Kraus operator needs 4 row-major "
            "entries");
      }
      Eigen::Matrix2cd k;
      for (int idx = 0; idx < 4; ++idx) {
        const auto& entry = km.at(idx);
        if (!entry.is_array() || entry.size() != 2) {
          throw std::invalid_argument(
              "channel_from_json: entries must be [re, im] pairs");
        }
        k(idx / 2, idx % 2) =
            complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
      kraus.push_back(k);
    }
    return Channel(std::move(kraus));
  }
  if (j.contains("family")) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "dephased_phase") {
      return make_dephased_phase_gate(
          {j.at("theta").get<double>(), j.at("s").get<double>()});
    }
    if (family == "depolarized_phase") {
      return make_depolarized_phase_gate(
          {j.at("theta").get<double>(), j.at("p").get<double>()});
    }
    if (family == "clifford_mixture") {
      std::map<std::string, double> w;
      for (const auto& [name, p] : j.at("weights").items()) {
        w[name] = p.get<double>();
      }
      return make_clifford_mixture(w);
    }
    throw std::invalid_argument("channel_from_json: unknown family '" +
                                family + "'");
  }
  throw std::invalid_argument(
      "channel_from_json: expected a 'kraus' list or a 'family' spec");
}

nlohmann::json channel_to_json(const Channel& e) {
  nlohmann::json kraus = nlohmann::json::array();
  for (const auto& k : e.kraus()) {
    nlohmann::json km = nlohmann::json::array();
    for (int idx = 0; idx < 4; ++idx) {
      const complex v = k(idx / 2, idx % 2);
      km.push_back({v.real(), v.imag()});
    }
    kraus.push_back(std::move(km));
  }
  return nlohmann::json{{"kraus", std::move(kraus)}};
}

Channel sample_cptp_channel(std::mt19937_64& rng, int kraus_rank) {
  if (kraus_rank < 1 || kraus_rank > 4) {
    throw std::invalid_argument("sample_cptp_channel: rank must be 1..4");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int rows = 2 * kraus_rank;
  Eigen::MatrixXcd g(rows, 2);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < 2; ++j) {
      g(i, j) = complex(gauss(rng), gauss(rng));
    }
  }
  // Orthonormalize the two columns (Gram-Schmidt yields a Haar isometry for
  // Gaussian input).
  Eigen::VectorXcd c0 = g.col(0);
  c0.normalize();
  Eigen::VectorXcd c1 = g.col(1);
  c1 -= c0 * (c0.adjoint() * c1)(0, 0);
  c1.normalize();
  std::vector<Eigen::Matrix2cd> kraus;
  for (int b = 0; b < kraus_rank; ++b) {
    Eigen::Matrix2cd k;
    k << c0(2 * b), c1(2 * b), c0(2 * b + 1), c1(2 * b + 1);
    kraus.push_back(k);
  }
  return Channel(std::move(kraus));
}

Channel sample_unitary_channel(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      g(i, j) = complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::Vector2cd c0 = g.col(0);
  c0.normalize();
  Eigen::Vector2cd c1 = g.col(1);
  c1 -= c0 * (c0.adjoint() * c1)(0, 0);
  c1.normalize();
  Eigen::Matrix2cd u;
  u.col(0) = c0;
  u.col(1) = c1;
  return Channel({u});
}

std::vector<double> sample_mixture_weights(std::mt19937_64& rng,
                                           std::size_t n) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : w) {
    x /= total;
  }
  return w;
}

}  // namespace bellmagic::channels
