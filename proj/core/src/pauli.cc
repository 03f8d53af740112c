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

#include "mptzx/pauli.h"

#include <stdexcept>

namespace mptzx {

PauliRow PauliRow::from_string(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliRow row(text.size());
    row.negative = negative;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case '_':
            case 'I':
                break;
            case 'X':
                row.x.set(q, true);
                break;
            case 'Y':
                row.x.set(q, true);
                row.z.set(q, true);
                break;
            case 'Z':
                row.z.set(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli character '" + std::string(1, text[q]) + "'");
        }
    }
    return row;
}

bool PauliRow::anticommutes(const PauliRow &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    uint64_t acc = 0;
    auto ax = x.words(), az = z.words(), bx = other.x.words(), bz = other.z.words();
    for (size_t k = 0; k < ax.size(); k++) {
        acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
    }
    return std::popcount(acc) & 1;
}

int pauli_product_phase(bool x1, bool z1, bool x2, bool z2) {
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return z2 ? (x2 ? 1 : -1) : 0;
    }
    if (z1) {
        return x2 ? (z2 ? -1 : 1) : 0;
    }
    return 0;
}

void PauliRow::multiply_commuting(const PauliRow &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    int phase = 0;
    for (size_t q = 0; q < num_qubits(); q++) {
        phase += pauli_product_phase(x.get(q), z.get(q), rhs.x.get(q), rhs.z.get(q));
    }
    phase = ((phase % 4) + 4) % 4;
    if (phase & 1) {
        throw std::invalid_argument("multiply_commuting called on anticommuting Paulis");
    }
    negative = negative ^ rhs.negative ^ (phase == 2);
    x ^= rhs.x;
    z ^= rhs.z;
}

std::string PauliRow::str() const {
    std::string out(1, negative ? '-' : '+');
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back("_XZY"[int(x.get(q)) + 2 * int(z.get(q))]);
    }
    return out;
}

}  // namespace mptzx
