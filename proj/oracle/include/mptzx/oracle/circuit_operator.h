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

#include "mptzx/circuit.h"
#include "mptzx/zx_eval.h"

namespace mptzx::oracle {

/// The circuit's linear map (2^N x 2^N) built gate by gate from explicit
/// matrices: CNOT, SWAP, identity and the Bell projector |Phi+><Phi+| for
/// Bell measurements. Qubit 0 is the most significant index bit, matching
/// evaluate_dense.
DenseMatrix circuit_operator(const BrickworkCircuit &circuit);

/// circuit_operator applied to the initial state, as a 2^N x 1 matrix.
DenseMatrix prepared_output_state(const BrickworkCircuit &circuit, InitialState initial);

}  // namespace mptzx::oracle
