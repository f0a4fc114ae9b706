// Copyright 2026 The mjdist Authors
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

#include "mjdist/aut_search.hpp"
#include "mjdist/dist_engine.hpp"
#include "mjdist/graph.hpp"

namespace {

using namespace mjdist;

void BM_BuildGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MergedJohnsonSpec spec(n, n / 2, {1});
  for (auto _ : state) benchmark::DoNotOptimize(build(spec));
  state.counters["vertices"] = static_cast<double>(spec.num_vertices());
}
BENCHMARK(BM_BuildGraph)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State& state, MergedJohnsonSpec spec) {
  const Graph g = build(spec);
  for (auto _ : state) benchmark::DoNotOptimize(search(g).group_order);
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, J8_4_13, MergedJohnsonSpec(8, 4, {1, 3}))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AutomorphismGroup, J12_4_13, MergedJohnsonSpec(12, 4, {1, 3}))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AutomorphismGroup, J10_5_1, MergedJohnsonSpec(10, 5, {1}))
    ->Unit(benchmark::kMillisecond);

void BM_DeterminingSetCheck(benchmark::State& state) {
  const MergedJohnsonSpec spec(12, 4, {1, 3});
  const Graph g = build(spec);
  const auto set = determining_set_for(spec).vertices;
  for (auto _ : state) benchmark::DoNotOptimize(is_determining_set(g, set));
}
BENCHMARK(BM_DeterminingSetCheck)->Unit(benchmark::kMillisecond);

void BM_DistinguishingNumber(benchmark::State& state, MergedJohnsonSpec spec) {
  for (auto _ : state) benchmark::DoNotOptimize(distinguishing_number(spec).dist);
}
BENCHMARK_CAPTURE(BM_DistinguishingNumber, J8_4_13, MergedJohnsonSpec(8, 4, {1, 3}))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DistinguishingNumber, J9_3_1, MergedJohnsonSpec(9, 3, {1}))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DistinguishingNumber, J12_4_13, MergedJohnsonSpec(12, 4, {1, 3}))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
