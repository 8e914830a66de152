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

#ifndef BELLMAGIC_LHVSIM_HPP_
#define BELLMAGIC_LHVSIM_HPP_

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellmagic/qcore.hpp"

namespace bellmagic::lhvsim {

// Local response model over three shared unbiased bits.  For each party
// (0 = first tensor factor, 1 = second) and each non-identity Pauli setting
// (0=X, 1=Y, 2=Z), outputs[party][setting][lambda] in {+1,-1} is the answer
// when the shared bits are lambda = r1 + 2 r2 + 4 r3.  Measuring I always
// answers +1.
struct LHVRuleSet {
  std::int8_t outputs[2][3][8];
};

// Name of the seed-expansion scheme used by sample_table; recorded next to
// the seed in reports so sampled tables can be reproduced elsewhere.
inline constexpr const char* kGeneratorId = "splitmix64:mt19937_64";

// The shared-bit rules that reproduce the singlet-class correlations of
// |phi> = (|00> + |11>)/sqrt(2):
//   X: both parties answer (-1)^{r1}
//   Y: party 0 answers (-1)^{r2}, party 1 answers (-1)^{r2+1}
//   Z: both parties answer (-1)^{r3}
LHVRuleSet phi_ruleset();

// Expectation table of the ruleset, averaged over all 8 bit assignments.
// Every value is a multiple of 1/8, so the doubles are exact.
qcore::CGTable exact_table(const LHVRuleSet& rules);

// Monte-Carlo estimate of exact_table using n shared-bit draws per setting
// pair.  Each of the 15 table entries runs on its own generator whose seed
// is derived from `seed` with a splitmix64 stream, so entries can be
// estimated independently (and in parallel) while staying reproducible.
// Throws std::invalid_argument when n == 0.
qcore::CGTable sample_table(const LHVRuleSet& rules, std::size_t n,
                            std::uint64_t seed);

// Tables of all 60 two-qubit pure stabilizer states: the closure of |00>
// under one-qubit Cliffords on either side and controlled-NOTs in both
// directions, deduplicated by projector.
std::vector<qcore::CGTable> stabilizer_state_tables();

nlohmann::json ruleset_to_json(const LHVRuleSet& rules);
LHVRuleSet ruleset_from_json(const nlohmann::json& j);

}  // namespace bellmagic::lhvsim

#endif  // BELLMAGIC_LHVSIM_HPP_
