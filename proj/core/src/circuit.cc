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

#include "mptzx/circuit.h"

#include <cmath>
#include <stdexcept>

namespace mptzx {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::kCnot:
            return "CNOT";
        case GateKind::kSwap:
            return "SWAP";
        case GateKind::kIdentity:
            return "I";
        case GateKind::kBellMeasure:
            return "BELL";
    }
    return "?";
}

std::string to_string(InitialState state) {
    return state == InitialState::kBellPairs ? "bell_pairs" : "product";
}

InitialState parse_initial_state(const std::string &text) {
    if (text == "bell_pairs") {
        return InitialState::kBellPairs;
    }
    if (text == "product") {
        return InitialState::kProduct;
    }
    throw std::invalid_argument("unknown initial state '" + text + "'");
}

OperationProbabilities operation_probabilities(double p, double r) {
    if (!(p >= 0.0 && p <= 1.0) || !(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("probabilities p and r must lie in [0, 1]");
    }
    return {r * (1.0 - p), (1.0 - r) * (1.0 - p), p / 2.0, p / 2.0};
}

void ModelParams::validate() const {
    operation_probabilities(p, r);
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw std::invalid_argument("n_qubits must be even and at least 2, got " + std::to_string(n_qubits));
    }
    if (depth_layers == 0) {
        throw std::invalid_argument("depth_layers must be positive");
    }
}

BrickworkCircuit sample_circuit(const ModelParams &params) {
    params.validate();
    OperationProbabilities probs = operation_probabilities(params.p, params.r);
    double t_cnot = probs.cnot;
    double t_swap = t_cnot + probs.swap;
    double t_id = t_swap + probs.identity;

    BrickworkCircuit c;
    c.n_qubits = params.n_qubits;
    c.depth_layers = params.depth_layers;
    c.seed = params.seed;
    c.bricks.reserve(c.num_half_layers() * (params.n_qubits / 2));

    Rng rng(derive_seed({params.seed, 0x63697263ULL}));
    for (size_t layer = 0; layer < c.num_half_layers(); layer++) {
        for (size_t bond = BrickworkCircuit::first_bond(layer); bond + 1 < params.n_qubits; bond += 2) {
            double u = rng.uniform();
            Brick b{static_cast<uint32_t>(layer), static_cast<uint32_t>(bond), GateKind::kBellMeasure};
            if (u < t_cnot) {
                b.kind = GateKind::kCnot;
                b.control = rng.coin() ? ControlSide::kRight : ControlSide::kLeft;
            } else if (u < t_swap) {
                b.kind = GateKind::kSwap;
            } else if (u < t_id) {
                b.kind = GateKind::kIdentity;
            }
            c.bricks.push_back(b);
        }
    }
    return c;
}

void apply_brick(StabilizerTableau &state, const Brick &brick, Rng &rng, BellOutcome *outcome) {
    auto [a, b] = brick_sites(brick);
    switch (brick.kind) {
        case GateKind::kCnot: {
            auto [c, t] = cnot_control_target(brick);
            state.apply_cnot(c, t);
            break;
        }
        case GateKind::kSwap:
            state.apply_swap(a, b);
            break;
        case GateKind::kIdentity:
            break;
        case GateKind::kBellMeasure: {
            BellOutcome o = state.measure_bell_pair(a, b, rng);
            if (outcome) {
                *outcome = o;
            }
            break;
        }
    }
}

StabilizerTableau run_circuit(const BrickworkCircuit &circuit, InitialState initial_state,
                              std::vector<BellRecord> *log) {
    StabilizerTableau state = initial_state == InitialState::kBellPairs
                                  ? StabilizerTableau::bell_pairs(circuit.n_qubits)
                                  : StabilizerTableau::product_state(circuit.n_qubits);
    Rng rng(derive_seed({circuit.seed, 0x6d656173ULL}));
    for (size_t i = 0; i < circuit.bricks.size(); i++) {
        const Brick &brick = circuit.bricks[i];
        if (brick.bond + 1 >= circuit.n_qubits) {
            throw std::invalid_argument("brick " + std::to_string(i) + " acts outside the chain");
        }
        BellOutcome outcome;
        apply_brick(state, brick, rng, &outcome);
        if (log && brick.kind == GateKind::kBellMeasure) {
            log->push_back({i, outcome});
        }
    }
    return state;
}

}  // namespace mptzx
