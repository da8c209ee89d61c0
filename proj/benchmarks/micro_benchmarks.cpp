// Copyright 2026 The storient Authors
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

#include "storient/angle_labeling.hpp"
#include "storient/ilp_solver.hpp"
#include "storient/layout.hpp"
#include "storient/plan_gen.hpp"
#include "storient/st_core.hpp"

namespace {

using namespace storient;

GeneratedInstance instance(int n, double p) { return generate({n, p, 7}); }

void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate({n, 0.5, 7}));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Generate)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_HeuristicOrientation(benchmark::State& state) {
  const GeneratedInstance inst = instance(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_orientation(inst.graph, inst.s, inst.t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HeuristicOrientation)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_TransitiveFaces(benchmark::State& state) {
  const GeneratedInstance inst = instance(static_cast<int>(state.range(0)), 0.5);
  const StOrientation o = heuristic_orientation(inst.graph, inst.s, inst.t);
  for (auto _ : state) benchmark::DoNotOptimize(transitive_edges_faces(inst.graph, o));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TransitiveFaces)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_TransitiveReach(benchmark::State& state) {
  const GeneratedInstance inst = instance(static_cast<int>(state.range(0)), 0.5);
  const StOrientation o = heuristic_orientation(inst.graph, inst.s, inst.t);
  for (auto _ : state) benchmark::DoNotOptimize(transitive_edges_reach(inst.graph, o));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TransitiveReach)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_LabelRoundtrip(benchmark::State& state) {
  const GeneratedInstance inst = instance(static_cast<int>(state.range(0)), 0.5);
  const StOrientation o = heuristic_orientation(inst.graph, inst.s, inst.t);
  for (auto _ : state) {
    const StLabeling l = labels_from_orientation(inst.graph, o);
    benchmark::DoNotOptimize(orientation_from_labels(inst.graph, l));
  }
}
BENCHMARK(BM_LabelRoundtrip)->Arg(256)->Arg(1024);

void BM_Layout(benchmark::State& state) {
  const GeneratedInstance inst = instance(static_cast<int>(state.range(0)), 0.5);
  const StOrientation o = heuristic_orientation(inst.graph, inst.s, inst.t);
  for (auto _ : state) {
    const VisRep vr = visibility_representation(inst.graph, o, inst.s, inst.t);
    benchmark::DoNotOptimize(polyline_drawing(inst.graph, o, vr));
  }
}
BENCHMARK(BM_Layout)->Arg(256)->Arg(1024);

void BM_SolveSparse(benchmark::State& state) {
  const GeneratedInstance inst = instance(static_cast<int>(state.range(0)), 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(solve_min_transitive(inst.graph, inst.s, inst.t));
}
BENCHMARK(BM_SolveSparse)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
