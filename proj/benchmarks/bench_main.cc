// Copyright 2026 The matchaug Authors.
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

#include "matchaug/algorithms.h"
#include "matchaug/demand_sources.h"
#include "matchaug/epl.h"
#include "matchaug/max_weight_matching.h"
#include "matchaug/topology.h"

namespace {

using namespace matchaug;

void BM_EplRing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = Ring(n);
  const DemandMatrix d = SparseRandomDemand(n, 0.9, kDefaultSparseHigh, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Epl(g, d));
  state.SetComplexityN(n);
}
BENCHMARK(BM_EplRing)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_MaxWeightMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DemandMatrix d = SparseRandomDemand(n, 0.9, kDefaultSparseHigh, 3);
  // Distinct weights make the instance harder than uniform ones.
  std::vector<WeightedPair> edges = d.Pairs();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i].weight = 1.0 + static_cast<double>((i * 7919) % 1000);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxWeightMatching(n, edges));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaxWeightMatching)
    ->RangeMultiplier(2)
    ->Range(64, 512)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_Algorithm(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Graph g = Ring(n);
  const DemandMatrix d = SparseRandomDemand(n, 0.9, kDefaultSparseHigh, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunAlgorithm(algo, g, d));
  }
  state.SetLabel(std::string(AlgorithmName(algo)));
}
BENCHMARK(BM_Algorithm)
    ->ArgsProduct({{0, 1, 2, 3}, {256, 1024}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
