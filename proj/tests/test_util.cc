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

#include "test_util.h"

namespace mptzx::test_util {

namespace {

Position random_position(Rng &rng) {
    return {static_cast<double>(rng.next() % 6), 0.5 * static_cast<double>(rng.next() % 8)};
}

void attach_boundaries(Rng &rng, ZxDiagram &d, const std::vector<SpiderId> &inner, size_t n_inputs,
                       size_t n_outputs, bool distinct_targets, bool random_type) {
    size_t k = 0;
    auto attach = [&](BoundaryKind kind) {
        SpiderId b = d.add_boundary(kind, random_position(rng));
        SpiderId target = distinct_targets ? inner[k++ % inner.size()] : inner[rng.next() % inner.size()];
        EdgeType type = random_type && rng.coin() ? EdgeType::kHadamard : EdgeType::kPlain;
        d.add_wire(b, target, type);
    };
    for (size_t i = 0; i < n_inputs; i++) {
        attach(BoundaryKind::kInput);
    }
    for (size_t i = 0; i < n_outputs; i++) {
        attach(BoundaryKind::kOutput);
    }
}

}  // namespace

ZxDiagram random_diagram(Rng &rng, size_t n_inputs, size_t n_outputs, size_t n_internal, double wire_prob) {
    ZxDiagram d;
    std::vector<SpiderId> inner;
    for (size_t i = 0; i < n_internal; i++) {
        SpiderColor color = rng.coin() ? SpiderColor::kZ : SpiderColor::kX;
        inner.push_back(d.add_spider(color, static_cast<int>(rng.next() % 4), random_position(rng)));
    }
    for (size_t i = 0; i < n_internal; i++) {
        for (size_t j = i + 1; j < n_internal; j++) {
            if (rng.uniform() < wire_prob) {
                EdgeType type = rng.coin() ? EdgeType::kHadamard : EdgeType::kPlain;
                uint32_t count = rng.uniform() < 0.2 ? 2 : 1;
                d.add_wire(inner[i], inner[j], type, count);
            }
        }
    }
    attach_boundaries(rng, d, inner, n_inputs, n_outputs, false, true);
    return d;
}

ZxDiagram random_graph_like(Rng &rng, size_t n_inputs, size_t n_outputs, size_t n_internal, double edge_prob) {
    ZxDiagram d;
    std::vector<SpiderId> inner;
    for (size_t i = 0; i < n_internal; i++) {
        inner.push_back(d.add_spider(SpiderColor::kZ, static_cast<int>(rng.next() % 4), random_position(rng)));
    }
    for (size_t i = 0; i < n_internal; i++) {
        for (size_t j = i + 1; j < n_internal; j++) {
            if (rng.uniform() < edge_prob) {
                d.add_wire(inner[i], inner[j], EdgeType::kHadamard);
            }
        }
    }
    attach_boundaries(rng, d, inner, n_inputs, n_outputs, n_inputs + n_outputs <= n_internal, true);
    return d;
}

ModelParams random_params(Rng &rng, size_t max_qubits, size_t max_depth) {
    ModelParams params;
    params.n_qubits = 2 + 2 * static_cast<size_t>(rng.next() % (max_qubits / 2));
    params.depth_layers = 1 + static_cast<size_t>(rng.next() % max_depth);
    params.p = rng.uniform();
    params.r = rng.uniform();
    params.seed = rng.next();
    params.initial_state = rng.coin() ? InitialState::kBellPairs : InitialState::kProduct;
    return params;
}

std::vector<size_t> region_of_mask(size_t mask, size_t n) {
    std::vector<size_t> region;
    for (size_t q = 0; q < n; q++) {
        if (mask >> q & 1) {
            region.push_back(q);
        }
    }
    return region;
}

std::vector<SpiderId> internal_spiders(const ZxDiagram &d) {
    std::vector<SpiderId> out;
    for (SpiderId v : d.live_spiders()) {
        if (!d.is_boundary(v)) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace mptzx::test_util
