// Copyright 2026 The depprof Authors. All rights reserved.
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

#include "depprof/hypergraph.hpp"
#include "depprof/random_instance.hpp"

namespace {

using namespace depprof;

Hypergraph sized(std::size_t vertices, std::uint64_t seed) {
  SizeBounds b;
  b.min_vertices = b.max_vertices = vertices;
  b.max_edges = vertices * 2;
  b.allow_empty_edge = false;
  return random_hypergraph(seed, b);
}

void BM_Mmcs(benchmark::State& state) {
  const auto h = sized(static_cast<std::size_t>(state.range(0)), 7);
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_minimal_transversal(h, [&](const VertexSet&) { return ++count, true; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["transversals"] = static_cast<double>(count);
}
BENCHMARK(BM_Mmcs)->DenseRange(6, 18, 4);

void BM_BruteForceTransversals(benchmark::State& state) {
  const auto h = sized(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_minimal_transversals(h));
}
BENCHMARK(BM_BruteForceTransversals)->DenseRange(6, 18, 4);

void BM_TransversalHypergraph(benchmark::State& state) {
  const auto h = sized(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(transversal_hypergraph(transversal_hypergraph(h)));
}
BENCHMARK(BM_TransversalHypergraph)->DenseRange(8, 20, 4);

}  // namespace
