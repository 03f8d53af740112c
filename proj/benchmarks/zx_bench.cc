// Copyright 2026 The mptzx Authors
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

#include <benchmark/benchmark.h>

#include "mptzx/circuit.h"
#include "mptzx/zx_build.h"
#include "mptzx/zx_rules.h"
#include "mptzx/zx_simplify.h"

using namespace mptzx;

namespace {

BrickworkCircuit circuit(size_t n, double p) {
    return sample_circuit({p, 0.1, n, 4 * n, InitialState::kBellPairs, 11});
}

void BM_diagram_from_circuit(benchmark::State &state) {
    BrickworkCircuit c = circuit(state.range(0), 0.24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagram_from_circuit(c));
    }
    state.SetItemsProcessed(state.iterations() * c.bricks.size());
}
BENCHMARK(BM_diagram_from_circuit)->Arg(48)->Arg(192)->Unit(benchmark::kMillisecond);

void BM_to_graph_like(benchmark::State &state) {
    ZxDiagram raw = diagram_from_circuit(circuit(state.range(0), 0.24));
    for (auto _ : state) {
        ZxDiagram d = raw;
        to_graph_like(d);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_to_graph_like)->Arg(48)->Arg(192)->Unit(benchmark::kMillisecond);

// Full reduction at measurement rates below, near and above the transition.
void BM_clifford_simplify(benchmark::State &state) {
    ZxDiagram raw = diagram_from_circuit(circuit(state.range(0), state.range(1) / 100.0));
    for (auto _ : state) {
        ZxDiagram d = raw;
        benchmark::DoNotOptimize(clifford_simplify(d));
    }
}
BENCHMARK(BM_clifford_simplify)
    ->ArgsProduct({{48, 96, 192}, {10, 24, 40}})
    ->ArgNames({"N", "p%"})
    ->Unit(benchmark::kMillisecond);

}  // namespace
