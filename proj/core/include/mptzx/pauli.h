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
#include <string>
#include <string_view>

#include "mptzx/bit_vector.h"

namespace mptzx {

/// Hermitian Pauli string with a +/-1 sign, stored as X and Z bit vectors.
/// Qubit q carries X if x[q] and not z[q], Z if z[q] and not x[q], Y if both.
struct PauliRow {
    BitVector x;
    BitVector z;
    bool negative = false;

    PauliRow() = default;
    explicit PauliRow(size_t num_qubits) : x(num_qubits), z(num_qubits) {
    }

    /// Parses strings like "+XZ_Y" or "-IXX". Accepts '_' and 'I' for identity.
    static PauliRow from_string(std::string_view text);

    size_t num_qubits() const {
        return x.size();
    }
    bool is_identity() const {
        return !x.any() && !z.any();
    }
    /// Symplectic form; true iff the two strings anticommute.
    bool anticommutes(const PauliRow &other) const;

    /// this <- this * rhs. Both must commute so the product stays Hermitian.
    void multiply_commuting(const PauliRow &rhs);

    std::string str() const;
    bool operator==(const PauliRow &other) const = default;
};

/// Power of i picked up when multiplying single-qubit Paulis (x1,z1)*(x2,z2),
/// in {-1, 0, 1}.
int pauli_product_phase(bool x1, bool z1, bool x2, bool z2);

}  // namespace mptzx
