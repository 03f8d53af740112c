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
#include <vector>

#include "mptzx/circuit.h"
#include "mptzx/rng.h"
#include "mptzx/zx_diagram.h"

namespace mptzx::test_util {

/// Arbitrary diagram: Z and X spiders with random phases, plain and Hadamard
/// wires (some parallel), and every boundary attached by one wire to a random
/// internal spider.
ZxDiagram random_diagram(Rng &rng, size_t n_inputs, size_t n_outputs, size_t n_internal, double wire_prob);

/// Graph-like diagram: Z spiders joined by single Hadamard wires, each
/// boundary attached by one plain or Hadamard wire to its own internal
/// spider.
ZxDiagram random_graph_like(Rng &rng, size_t n_inputs, size_t n_outputs, size_t n_internal, double edge_prob);

/// Random brickwork parameters with even N in [2, max_qubits] and depth in
/// [1, max_depth].
ModelParams random_params(Rng &rng, size_t max_qubits, size_t max_depth);

/// Qubits whose bit is set in `mask`.
std::vector<size_t> region_of_mask(size_t mask, size_t n);

/// Live internal spiders.
std::vector<SpiderId> internal_spiders(const ZxDiagram &d);

}  // namespace mptzx::test_util
