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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mptzx/tableau.h"

namespace mptzx {

enum class GateKind : uint8_t { kCnot, kSwap, kIdentity, kBellMeasure };
enum class ControlSide : uint8_t { kLeft, kRight };
enum class InitialState : uint8_t { kBellPairs, kProduct };

std::string to_string(GateKind kind);
std::string to_string(InitialState state);
InitialState parse_initial_state(const std::string &text);

/// One two-site operation. `layer` indexes half-layers: even half-layers act
/// on bonds (0,1),(2,3),..., odd half-layers on (1,2),(3,4),.... `bond` is the
/// left site of the pair.
struct Brick {
    uint32_t layer;
    uint32_t bond;
    GateKind kind;
    ControlSide control = ControlSide::kLeft;

    bool operator==(const Brick &other) const = default;
};

/// Probabilities of the four brick kinds.
struct OperationProbabilities {
    double cnot;
    double swap;
    double identity;
    double bell;
};

/// CNOT r(1-p), SWAP (1-r)(1-p), identity p/2, Bell measurement p/2.
OperationProbabilities operation_probabilities(double p, double r);

struct ModelParams {
    double p = 0.0;  ///< measurement-sector weight
    double r = 0.0;  ///< CNOT fraction of the unitary sector
    size_t n_qubits = 0;
    size_t depth_layers = 0;  ///< full (odd + even) layers
    InitialState initial_state = InitialState::kBellPairs;
    uint64_t seed = 0;

    void validate() const;
};

struct BrickworkCircuit {
    size_t n_qubits = 0;
    size_t depth_layers = 0;
    uint64_t seed = 0;
    std::vector<Brick> bricks;

    size_t num_half_layers() const {
        return 2 * depth_layers;
    }
    /// Time stamp of a half-layer: full layer k starts at t = k and its second
    /// half-layer (bonds (1,2),(3,4),...) sits at t = k + 1/2.
    static double time_of_layer(size_t layer) {
        return 0.5 * static_cast<double>(layer);
    }
    /// First site of the first bond touched by a half-layer.
    static size_t first_bond(size_t layer) {
        return layer % 2;
    }

    bool operator==(const BrickworkCircuit &other) const = default;
};

/// Draws every brick independently from operation_probabilities(p, r).
BrickworkCircuit sample_circuit(const ModelParams &params);

/// Outcome of one Bell measurement during run_circuit (for replay against
/// other simulators).
struct BellRecord {
    size_t brick_index;
    BellOutcome outcome;
};

/// Applies the circuit, half-layer by half-layer and left to right, to the
/// requested initial state. Measurement randomness is drawn from a stream
/// derived from the circuit seed.
StabilizerTableau run_circuit(const BrickworkCircuit &circuit, InitialState initial_state,
                              std::vector<BellRecord> *log = nullptr);

/// Applies a single brick at its sites.
void apply_brick(StabilizerTableau &state, const Brick &brick, Rng &rng, BellOutcome *outcome = nullptr);

/// Sites (left, right) of a brick and, for CNOTs, (control, target).
inline std::pair<size_t, size_t> brick_sites(const Brick &brick) {
    return {brick.bond, brick.bond + 1};
}
inline std::pair<size_t, size_t> cnot_control_target(const Brick &brick) {
    return brick.control == ControlSide::kLeft ? std::pair<size_t, size_t>{brick.bond, brick.bond + 1}
                                               : std::pair<size_t, size_t>{brick.bond + 1, brick.bond};
}

}  // namespace mptzx
