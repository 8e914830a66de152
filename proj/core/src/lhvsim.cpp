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

#include "bellmagic/lhvsim.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bellmagic::lhvsim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Output of `party` for Pauli setting 0..3 (0 = I) under bits `lambda`.
int answer(const LHVRuleSet& rules, int party, int setting, int lambda) {
  if (setting == 0) {
    return 1;
  }
  return rules.outputs[party][setting - 1][lambda];
}

}  // namespace

LHVRuleSet phi_ruleset() {
  LHVRuleSet rules{};
  for (int lambda = 0; lambda < 8; ++lambda) {
    const int r1 = lambda & 1;
    const int r2 = (lambda >> 1) & 1;
    const int r3 = (lambda >> 2) & 1;
    rules.outputs[0][0][lambda] = static_cast<std::int8_t>(r1 ? -1 : 1);
    rules.outputs[0][1][lambda] = static_cast<std::int8_t>(r2 ? -1 : 1);
    rules.outputs[0][2][lambda] = static_cast<std::int8_t>(r3 ? -1 : 1);
    rules.outputs[1][0][lambda] = rules.outputs[0][0][lambda];
    rules.outputs[1][1][lambda] =
        static_cast<std::int8_t>(-rules.outputs[0][1][lambda]);
    rules.outputs[1][2][lambda] = rules.outputs[0][2][lambda];
  }
  return rules;
}

qcore::CGTable exact_table(const LHVRuleSet& rules) {
  qcore::CGTable t{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      int sum = 0;
      for (int lambda = 0; lambda < 8; ++lambda) {
        sum += answer(rules, 0, c, lambda) * answer(rules, 1, r, lambda);
      }
      t.entries[r][c] = sum / 8.0;
    }
  }
  return t;
}

qcore::CGTable sample_table(const LHVRuleSet& rules, std::size_t n,
                            std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("sample_table: need at least one sample");
  }
  std::uint64_t stream = seed;
  qcore::CGTable t{};
  t.entries[0][0] = 1.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == 0 && c == 0) {
        continue;
      }
      std::mt19937_64 rng(splitmix64(stream));
      std::uniform_int_distribution<int> bits(0, 7);
      long long sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const int lambda = bits(rng);
        sum += answer(rules, 0, c, lambda) * answer(rules, 1, r, lambda);
      }
      t.entries[r][c] = static_cast<double>(sum) / static_cast<double>(n);
    }
  }
  return t;
}

std::vector<qcore::CGTable> stabilizer_state_tables() {
  using Eigen::Matrix4cd;
  using Eigen::Vector4cd;

  const std::complex<double> i(0, 1);
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  Eigen::Matrix2cd sg;
  sg << 1, 0, 0, i;
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();

  Matrix4cd cnot12 = Matrix4cd::Zero();
  cnot12(0, 0) = cnot12(1, 1) = cnot12(3, 2) = cnot12(2, 3) = 1;
  Matrix4cd cnot21 = Matrix4cd::Zero();
  cnot21(0, 0) = cnot21(3, 1) = cnot21(2, 2) = cnot21(1, 3) = 1;

  const std::vector<Matrix4cd> gens = {
      qcore::kron2(h, id2),  qcore::kron2(id2, h), qcore::kron2(sg, id2),
      qcore::kron2(id2, sg), cnot12,               cnot21};

  // Projector entries of a two-qubit stabilizer state are Gaussian
  // rationals with denominator dividing 8, so scaling by 8 and rounding
  // gives an exact phase-free key.
  const auto key = [](const Vector4cd& psi) {
    const Matrix4cd p = psi * psi.adjoint();
    std::ostringstream os;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const double re = 8 * p(a, b).real();
        const double im = 8 * p(a, b).imag();
        const long long ri = std::llround(re);
        const long long ii = std::llround(im);
        if (std::abs(re - ri) > 1e-6 || std::abs(im - ii) > 1e-6) {
          throw std::logic_error("stabilizer orbit left the expected grid");
        }
        os << ri << ',' << ii << ';';
      }
    }
    return os.str();
  };

  std::map<std::string, Vector4cd> seen;
  std::vector<Vector4cd> frontier;
  Vector4cd start = Vector4cd::Zero();
  start(0) = 1;
  seen.emplace(key(start), start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    std::vector<Vector4cd> next;
    for (const auto& psi : frontier) {
      for (const auto& g : gens) {
        const Vector4cd img = g * psi;
        if (seen.emplace(key(img), img).second) {
          next.push_back(img);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<qcore::CGTable> tables;
  tables.reserve(seen.size());
  for (const auto& [k, psi] : seen) {
    qcore::CGTable t =
        qcore::cg_table(qcore::TwoQubitState(psi * psi.adjoint()));
    // Pauli expectations of a pure stabilizer state are exactly 0 or +/-1;
    // snap off the rounding dust left by the 1/sqrt(2) amplitudes so the
    // exact geometry downstream sees the true lattice point.
    for (auto& row : t.entries) {
      for (auto& v : row) {
        const double r = std::round(v);
        if (std::abs(v - r) > 1e-9) {
          throw std::logic_error("stabilizer orbit left the expected grid");
        }
        v = r == 0 ? 0.0 : r;
      }
    }
    tables.push_back(t);
  }
  return tables;
}

nlohmann::json ruleset_to_json(const LHVRuleSet& rules) {
  static const char* kParties[2] = {"first", "second"};
  static const char* kSettings[3] = {"X", "Y", "Z"};
  nlohmann::json j;
  for (int p = 0; p < 2; ++p) {
    nlohmann::json party;
    for (int a = 0; a < 3; ++a) {
      nlohmann::json outs = nlohmann::json::array();
      for (int lambda = 0; lambda < 8; ++lambda) {
        outs.push_back(static_cast<int>(rules.outputs[p][a][lambda]));
      }
      party[kSettings[a]] = std::move(outs);
    }
    j[kParties[p]] = std::move(party);
  }
  return j;
}

LHVRuleSet ruleset_from_json(const nlohmann::json& j) {
  static const char* kParties[2] = {"first", "second"};
  static const char* kSettings[3] = {"X", "Y", "Z"};
  LHVRuleSet rules{};
  for (int p = 0; p < 2; ++p) {
    for (int a = 0; a < 3; ++a) {
      const auto& outs = j.at(kParties[p]).at(kSettings[a]);
      if (!outs.is_array() || outs.size() != 8) {
        throw std::invalid_argument(
            "ruleset_from_json: each setting needs 8 outputs");
      }
      for (int lambda = 0; lambda < 8; ++lambda) {
        const int v = outs[lambda].get<int>();
        if (v != 1 && v != -1) {
          throw std::invalid_argument(
              "ruleset_from_json: outputs must be +-1");
        }
        rules.outputs[p][a][lambda] = static_cast<std::int8_t>(v);
      }
    }
  }
  return rules;
}

}  // namespace bellmagic::lhvsim
