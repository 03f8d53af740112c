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

#include <optional>

#include "mptzx/circuit.h"
#include "mptzx/zx_diagram.h"

namespace mptzx {

struct DiagramOptions {
    /// When set, the inputs are closed with the initial state (Bell cups or
    /// single-legged X spiders for |0>) and the diagram has no input boundary.
    /// When unset, the diagram is the circuit's linear map with N open inputs.
    std::optional<InitialState> prepare_state;
};

/// ZX diagram of a brickwork circuit. A CNOT becomes a Z spider on the
/// control joined by a plain wire to an X spider on the target; SWAP crosses
/// wires; a Bell measurement becomes a cap followed by a cup (the projector
/// onto the Bell pair, up to scalar). Spider positions are (site, time) with
/// inputs at t = 0 and outputs at t = depth.
ZxDiagram diagram_from_circuit(const BrickworkCircuit &circuit, const DiagramOptions &options = {});

}  // namespace mptzx
