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

#include "mptzx/zx_build.h"

#include <utility>

namespace mptzx {

ZxDiagram diagram_from_circuit(const BrickworkCircuit &circuit, const DiagramOptions &options) {
    ZxDiagram d;
    size_t n = circuit.n_qubits;
    std::vector<SpiderId> frontier(n);
    if (!options.prepare_state.has_value()) {
        for (size_t q = 0; q < n; q++) {
            frontier[q] = d.add_boundary(BoundaryKind::kInput, {static_cast<double>(q), 0.0});
        }
    } else if (*options.prepare_state == InitialState::kBellPairs) {
        for (size_t q = 0; q + 1 < n; q += 2) {
            SpiderId cup = d.add_spider(SpiderColor::kZ, 0, {static_cast<double>(q) + 0.5, 0.0});
            frontier[q] = frontier[q + 1] = cup;
        }
        if (n % 2 == 1) {
            frontier[n - 1] = d.add_spider(SpiderColor::kX, 0, {static_cast<double>(n - 1), 0.0});
        }
    } else {
        for (size_t q = 0; q < n; q++) {
            frontier[q] = d.add_spider(SpiderColor::kX, 0, {static_cast<double>(q), 0.0});
        }
    }

    for (const Brick &b : circuit.bricks) {
        double t = BrickworkCircuit::time_of_layer(b.layer);
        auto [left, right] = brick_sites(b);
        switch (b.kind) {
            case GateKind::kCnot: {
                auto [c, x] = cnot_control_target(b);
                SpiderId zc = d.add_spider(SpiderColor::kZ, 0, {static_cast<double>(c), t});
                SpiderId xt = d.add_spider(SpiderColor::kX, 0, {static_cast<double>(x), t});
                d.add_wire(frontier[c], zc);
                d.add_wire(frontier[x], xt);
                d.add_wire(zc, xt);
                frontier[c] = zc;
                frontier[x] = xt;
                break;
            }
            case GateKind::kSwap:
                std::swap(frontier[left], frontier[right]);
                break;
            case GateKind::kIdentity:
                break;
            case GateKind::kBellMeasure: {
                Position mid{static_cast<double>(left) + 0.5, t};
                SpiderId cap = d.add_spider(SpiderColor::kZ, 0, mid);
                d.add_wire(frontier[left], cap);
                d.add_wire(frontier[right], cap);
                SpiderId cup = d.add_spider(SpiderColor::kZ, 0, mid);
                frontier[left] = frontier[right] = cup;
                break;
            }
        }
    }

    double t_end = static_cast<double>(circuit.depth_layers);
    for (size_t q = 0; q < n; q++) {
        SpiderId out = d.add_boundary(BoundaryKind::kOutput, {static_cast<double>(q), t_end});
        d.add_wire(frontier[q], out);
    }
    return d;
}

}  // namespace mptzx
