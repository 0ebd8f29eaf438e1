// Copyright 2026 The mixedphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "mixedphase/channels.hpp"
#include "mixedphase/ensemble.hpp"
#include "mixedphase/experiments.hpp"
#include "mixedphase/loop_soup.hpp"
#include "mixedphase/stabilizer.hpp"

using namespace mixedphase;

static void BM_RegionEntropy(benchmark::State &state) {
  int L = int(state.range(0));
  TorusLattice lat(L, L);
  auto s = build_loop_state(lat);
  auto region = lat.rectangle({{0, 0}, L / 2, L / 2});
  for (auto _ : state) benchmark::DoNotOptimize(region_entropy(s, region));
}
BENCHMARK(BM_RegionEntropy)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_MarkovScan(benchmark::State &state) {
  int L = int(state.range(0));
  TorusLattice lat(L, L);
  auto s = build_loop_state(lat);
  std::vector<Vertex> centers{{0, 0}, {L / 2, L / 2}};
  for (auto _ : state) benchmark::DoNotOptimize(markov_scan(s, lat, centers, 2));
}
BENCHMARK(BM_MarkovScan)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_CliffordDepth2(benchmark::State &state) {
  TorusLattice lat(8, 8);
  auto s = build_loop_state(lat);
  auto c = random_clifford_circuit(lat, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_circuit(s, c));
}
BENCHMARK(BM_CliffordDepth2)->Unit(benchmark::kMillisecond);

static void BM_EnsembleSweep(benchmark::State &state) {
  TorusLattice lat(3, 3);
  std::vector<double> p{0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(markov_sweep_partial_dephasing(lat, p, {0}));
}
BENCHMARK(BM_EnsembleSweep)->Unit(benchmark::kMillisecond);

static void BM_DeltaSExact(benchmark::State &state) {
  auto n = std::int64_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_s_exact(0.49, n));
}
BENCHMARK(BM_DeltaSExact)->Arg(1000)->Arg(100000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
