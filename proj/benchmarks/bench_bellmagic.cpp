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

#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "bellmagic/channels.hpp"
#include "bellmagic/distill.hpp"
#include "bellmagic/geometry.hpp"
#include "bellmagic/lhvsim.hpp"
#include "bellmagic/polytopes.hpp"
#include "bellmagic/witness.hpp"

namespace {

namespace bm = bellmagic;

const bm::witness::WitnessContext& ctx() {
  static const auto c = bm::witness::WitnessContext::make();
  return c;
}

void BM_CliffordFacetEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::polytopes::build_clifford_polytope());
  }
}
BENCHMARK(BM_CliffordFacetEnumeration)->Unit(benchmark::kMillisecond);

void BM_LhvFacetEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::polytopes::build_lhv_polytope());
  }
}
BENCHMARK(BM_LhvFacetEnumeration)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void BM_ChannelToTable(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto channel = bm::channels::sample_cptp_channel(rng, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::channels::cg_table(channel));
  }
}
BENCHMARK(BM_ChannelToTable);

void BM_ChshScan(benchmark::State& state) {
  const auto& c = ctx();  // built once, outside the timed region
  const auto t = bm::channels::cg_table(
      bm::channels::make_dephased_phase_gate({M_PI / 4, 0.3}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::witness::chsh_scan(c, t));
  }
}
BENCHMARK(BM_ChshScan);

void BM_LpMembershipInside(benchmark::State& state) {
  const auto& c = ctx();
  std::mt19937_64 rng(11);
  const auto t = bm::channels::cg_table(bm::channels::make_clifford_mixture(
      bm::channels::sample_mixture_weights(rng, 24)));
  const auto coords = t.rounded_coords();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bm::geometry::lp_membership(coords, c.clifford.vertices));
  }
}
BENCHMARK(BM_LpMembershipInside)->Unit(benchmark::kMillisecond);

void BM_LpMembershipOutside(benchmark::State& state) {
  const auto& c = ctx();
  const auto t = bm::channels::cg_table(
      bm::channels::make_dephased_phase_gate({M_PI / 4, 0.0}));
  const auto coords = t.rounded_coords();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bm::geometry::lp_membership(coords, c.clifford.vertices));
  }
}
BENCHMARK(BM_LpMembershipOutside)->Unit(benchmark::kMillisecond);

void BM_UqcWitness(benchmark::State& state) {
  const auto& c = ctx();
  const auto t = bm::channels::cg_table(
      bm::channels::make_depolarized_phase_gate({M_PI / 4, 0.35}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::witness::uqc_witness(c, t));
  }
}
BENCHMARK(BM_UqcWitness)->Unit(benchmark::kMillisecond);

void BM_Decompose3322(benchmark::State& state) {
  const auto& c = ctx();
  std::size_t canonical = 0;
  for (std::size_t i = 0; i < c.lhv.facets.size(); ++i) {
    if (c.lhv.facets[i].cls == bm::polytopes::FacetClass::kI3322) {
      canonical = i;
      break;
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::witness::decompose_3322(c, canonical));
  }
}
BENCHMARK(BM_Decompose3322)->Unit(benchmark::kMillisecond);

void BM_PrepareAncilla(benchmark::State& state) {
  const auto channel = bm::channels::make_dephased_phase_gate({M_PI / 4, 0.2});
  const bm::distill::ParityMeasurement m{bm::qcore::Pauli::Z,
                                         bm::qcore::Pauli::Z, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::distill::prepare_ancilla(channel, m));
  }
}
BENCHMARK(BM_PrepareAncilla);

void BM_SampleTable(benchmark::State& state) {
  const auto rules = bm::lhvsim::phi_ruleset();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::lhvsim::sample_table(rules, n, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n) * 15);
}
BENCHMARK(BM_SampleTable)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ThresholdBisection(benchmark::State& state) {
  const auto& c = ctx();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bm::witness::threshold_scan(
        c, bm::witness::Family::kDephasedPhase, M_PI / 4,
        bm::witness::Criterion::kChsh, 0.5, 1.2, 1e-9));
  }
}
BENCHMARK(BM_ThresholdBisection)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
