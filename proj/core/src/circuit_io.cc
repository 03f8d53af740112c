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

#include "mptzx/circuit_io.h"

#include "mptzx/errors.h"

namespace mptzx {

using nlohmann::json;

json circuit_to_json(const BrickworkCircuit &circuit) {
    json bricks = json::array();
    for (const Brick &b : circuit.bricks) {
        json entry = json::array({b.layer, b.bond, to_string(b.kind)});
        if (b.kind == GateKind::kCnot) {
            entry.push_back(b.control == ControlSide::kLeft ? "L" : "R");
        }
        bricks.push_back(std::move(entry));
    }
    return json{{"n_qubits", circuit.n_qubits},
                {"depth", circuit.depth_layers},
                {"seed", circuit.seed},
                {"bricks", std::move(bricks)}};
}

namespace {

template <typename T>
T require_unsigned(const json &obj, const std::string &key) {
    if (!obj.contains(key)) {
        throw ParseError("/" + key, "missing field");
    }
    const json &v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError("/" + key, "expected a non-negative integer");
    }
    return v.get<T>();
}

}  // namespace

BrickworkCircuit circuit_from_json(const json &record) {
    if (!record.is_object()) {
        throw ParseError("", "circuit record must be a JSON object");
    }
    BrickworkCircuit c;
    c.n_qubits = require_unsigned<size_t>(record, "n_qubits");
    c.depth_layers = require_unsigned<size_t>(record, "depth");
    c.seed = record.contains("seed") ? require_unsigned<uint64_t>(record, "seed") : 0;
    if (c.n_qubits < 2) {
        throw ParseError("/n_qubits", "need at least two qubits");
    }
    if (!record.contains("bricks") || !record.at("bricks").is_array()) {
        throw ParseError("/bricks", "expected an array");
    }
    const json &bricks = record.at("bricks");
    c.bricks.reserve(bricks.size());
    for (size_t i = 0; i < bricks.size(); i++) {
        std::string where = "/bricks/" + std::to_string(i);
        const json &e = bricks[i];
        if (!e.is_array() || e.size() < 3 || e.size() > 4) {
            throw ParseError(where, "expected [layer, bond, kind, control_side?]");
        }
        for (size_t k = 0; k < 2; k++) {
            if (!e[k].is_number_integer() || e[k].get<int64_t>() < 0) {
                throw ParseError(where + "/" + std::to_string(k), "layer and bond must be non-negative integers");
            }
        }
        Brick b{e[0].get<uint32_t>(), e[1].get<uint32_t>(), GateKind::kIdentity};
        if (!e[2].is_string()) {
            throw ParseError(where + "/2", "kind must be a string");
        }
        std::string kind = e[2].get<std::string>();
        if (kind == "CNOT") {
            b.kind = GateKind::kCnot;
            if (e.size() != 4 || !e[3].is_string()) {
                throw ParseError(where + "/3", "CNOT needs control side \"L\" or \"R\"");
            }
            std::string side = e[3].get<std::string>();
            if (side != "L" && side != "R") {
                throw ParseError(where + "/3", "control side must be \"L\" or \"R\"");
            }
            b.control = side == "L" ? ControlSide::kLeft : ControlSide::kRight;
        } else if (kind == "SWAP") {
            b.kind = GateKind::kSwap;
        } else if (kind == "I") {
            b.kind = GateKind::kIdentity;
        } else if (kind == "BELL") {
            b.kind = GateKind::kBellMeasure;
        } else {
            throw ParseError(where + "/2", "unknown brick kind '" + kind + "'");
        }
        if (b.layer >= c.num_half_layers()) {
            throw ParseError(where + "/0", "layer beyond circuit depth");
        }
        if (b.bond + 1 >= c.n_qubits || b.bond % 2 != BrickworkCircuit::first_bond(b.layer)) {
            throw ParseError(where + "/1", "bond not active in this half-layer");
        }
        if (!c.bricks.empty()) {
            const Brick &prev = c.bricks.back();
            if (b.layer < prev.layer || (b.layer == prev.layer && b.bond <= prev.bond)) {
                throw ParseError(where, "bricks must be ordered by layer then bond");
            }
        }
        c.bricks.push_back(b);
    }
    return c;
}

json parse_json_text(const std::string &text, const std::string &source_name) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(source_name + "@byte " + std::to_string(e.byte), e.what());
    }
}

}  // namespace mptzx
