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

#include <string>

#include <nlohmann/json.hpp>

#include "mptzx/circuit.h"

namespace mptzx {

/// Circuit record:
///   {"n_qubits": N, "depth": D, "seed": S,
///    "bricks": [[layer, bond, "CNOT", "L"|"R"], [layer, bond, "SWAP"], ...]}
/// Identity bricks are included so every active bond of every half-layer
/// appears exactly once. Extra top-level keys (p, r, config_hash, ...) are
/// preserved by callers but ignored here.
nlohmann::json circuit_to_json(const BrickworkCircuit &circuit);

/// Throws ParseError naming the JSON pointer of the first bad field.
BrickworkCircuit circuit_from_json(const nlohmann::json &record);

/// Parses text; syntax errors are reported with their byte offset.
nlohmann::json parse_json_text(const std::string &text, const std::string &source_name);

}  // namespace mptzx
