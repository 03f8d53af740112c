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

#include "mptzx/oracle/connectivity.h"

#include <vector>

#include "mptzx/rng.h"
#include "mptzx/tableau.h"

namespace mptzx::oracle {

bool connected_by_closure(const ClassicalNetwork &net) {
    size_t n = net.n_nodes;
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (size_t v = 0; v < n; v++) {
        reach[v][v] = 1;
    }
    for (const auto &[a, b] : net.edges) {
        reach[a][b] = reach[b][a] = 1;
    }
    for (size_t k = 0; k < n; k++) {
        for (size_t i = 0; i < n; i++) {
            if (!reach[i][k]) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                reach[i][j] |= reach[k][j];
            }
        }
    }
    for (uint32_t in : net.input_nodes) {
        for (uint32_t out : net.output_nodes) {
            if (reach[in][out]) {
                return true;
            }
        }
    }
    return false;
}

bool reference_entropy_positive(const BrickworkCircuit &circuit, uint64_t seed) {
    size_t n = circuit.n_qubits;
    // System qubit q lives at 2q, its reference at 2q + 1.
    StabilizerTableau state = StabilizerTableau::bell_pairs(2 * n);
    Rng rng(seed);
    for (const Brick &brick : circuit.bricks) {
        auto [a, b] = brick_sites(brick);
        switch (brick.kind) {
            case GateKind::kCnot: {
                auto [c, t] = cnot_control_target(brick);
                state.apply_cnot(2 * c, 2 * t);
                break;
            }
            case GateKind::kSwap:
                state.apply_swap(2 * a, 2 * b);
                break;
            case GateKind::kIdentity:
                break;
            case GateKind::kBellMeasure:
                state.measure_bell_pair(2 * a, 2 * b, rng);
                break;
        }
    }
    std::vector<size_t> reference;
    for (size_t q = 0; q < n; q++) {
        reference.push_back(2 * q + 1);
    }
    return state.entanglement_entropy(reference) > 0;
}

}  // namespace mptzx::oracle
