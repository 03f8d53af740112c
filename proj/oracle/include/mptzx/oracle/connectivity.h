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

#include <cstdint>

#include "mptzx/circuit.h"
#include "mptzx/percolation.h"

namespace mptzx::oracle {

/// Input-output connectivity by boolean transitive closure (Warshall) of
/// the adjacency matrix. Cubic; meant for small graphs.
bool connected_by_closure(const ClassicalNetwork &net);

/// Whether the circuit's map leaves some input correlated with the output:
/// every system qubit starts maximally entangled with its own reference
/// qubit, the circuit acts on the system, and the reference register keeps
/// nonzero entropy iff the map did not purify it. Bell measurements are
/// not postselected; the entropy does not depend on the outcomes.
bool reference_entropy_positive(const BrickworkCircuit &circuit, uint64_t seed);

}  // namespace mptzx::oracle
