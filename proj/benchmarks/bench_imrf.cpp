// Copyright 2026 The imrf Authors
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

#include "imrf/diagram.hpp"
#include "imrf/fcmi.hpp"
#include "imrf/imeasure.hpp"
#include "imrf/subfield.hpp"

namespace {

using namespace imrf;

// Deterministic graph with a ring plus chords, so every size has cutsets.
Graph ring_with_chords(int n) {
  Graph g = Graph::cycle(n);
  for (int v = 1; v + 3 <= n; v += 3) g.add_edge(v, v + 3);
  return g;
}

void BM_EntropyVector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Distribution p = generate_mrf(Graph::path(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(entropy_vector(p));
}
BENCHMARK(BM_EntropyVector)->DenseRange(4, 12, 4);

void BM_MuFromEntropy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EntropyVector h = entropy_vector(generate_mrf(Graph::path(std::min(n, 12)), 1));
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::size_t m = 1; m < values.size(); ++m) values[m] = h.values()[m % h.values().size()];
  const EntropyVector big(n, 2.0, values);
  for (auto _ : state) benchmark::DoNotOptimize(mu_from_entropy(big));
}
BENCHMARK(BM_MuFromEntropy)->DenseRange(8, 16, 4);

void BM_GStar(benchmark::State& state, Construction c) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = ring_with_chords(n);
  VertexSet vp;
  for (int v = 1; v <= n; v += 2) vp.insert(v);
  for (auto _ : state) benchmark::DoNotOptimize(subfield(g, vp, c));
}
BENCHMARK_CAPTURE(BM_GStar, paths, Construction::Paths)->RangeMultiplier(2)->Range(8, 24);
BENCHMARK_CAPTURE(BM_GStar, closed_form, Construction::ClosedForm)->RangeMultiplier(2)->Range(8, 24);
BENCHMARK_CAPTURE(BM_GStar, elimination, Construction::Elimination)->RangeMultiplier(2)->Range(8, 24);

void BM_ImageOfGraph(benchmark::State& state) {
  const Graph g = ring_with_chords(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(image_of_graph(g));
}
BENCHMARK(BM_ImageOfGraph)->DenseRange(6, 14, 4);

void BM_BuildPlan(benchmark::State& state) {
  const Graph g = ring_with_chords(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_plan(g));
}
BENCHMARK(BM_BuildPlan)->DenseRange(6, 14, 4);

}  // namespace
BENCHMARK_MAIN();
