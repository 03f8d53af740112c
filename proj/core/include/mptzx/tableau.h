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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mptzx/pauli.h"
#include "mptzx/rng.h"

namespace mptzx {

/// One non-identity factor of a sparse Pauli string.
struct PauliTerm {
    uint32_t qubit;
    bool x;
    bool z;
};

struct MeasurementResult {
    int outcome;  ///< +1 or -1, eigenvalue of the measured observable.
    bool random;  ///< false when the outcome was fixed by the state.
};

/// Outcomes of the two commuting parity measurements making up a Bell-basis
/// measurement. Determined outcomes are not computed and left empty.
struct BellOutcome {
    std::optional<int> xx;
    std::optional<int> zz;
};

/// Pure stabilizer state of N qubits stored as N commuting, independent
/// generators. Storage is column-major: for every qubit there is one bit
/// column over generators for the X part and one for the Z part, so Clifford
/// gates and anticommutation tests are word-parallel over generators.
class StabilizerTableau {
   public:
    /// Bell pairs on sites (0,1), (2,3), ...; n must be even and positive.
    static StabilizerTableau bell_pairs(size_t num_qubits);
    /// |0...0>.
    static StabilizerTableau product_state(size_t num_qubits);
    /// Builds a tableau from explicit generators. Throws std::invalid_argument
    /// unless the rows are N pairwise-commuting independent N-qubit strings.
    static StabilizerTableau from_rows(const std::vector<PauliRow> &rows);

    size_t num_qubits() const {
        return n_;
    }
    PauliRow row(size_t index) const;
    std::vector<PauliRow> rows() const;

    void apply_cnot(size_t control, size_t target);
    void apply_swap(size_t a, size_t b);

    /// Projective measurement of a (signed) Pauli observable.
    MeasurementResult measure(const PauliRow &observable, Rng &rng);
    /// Measures the positive-sign Pauli described by `terms`. Returns the
    /// outcome if it was random and leaves the state untouched (returning
    /// nullopt) when it was already determined. Deterministic outcomes are not
    /// computed; use determined_outcome for that.
    std::optional<int> collapse(std::span<const PauliTerm> terms, Rng &rng);
    /// XX then ZZ on the pair. Afterwards the pair holds one of the four Bell
    /// states and is unentangled with the rest of the chain.
    BellOutcome measure_bell_pair(size_t a, size_t b, Rng &rng);
    /// Eigenvalue of `observable` if the state is one of its eigenstates.
    std::optional<int> determined_outcome(const PauliRow &observable) const;

    /// Von Neumann entropy in bits of the reduced state on `region`.
    size_t entanglement_entropy(std::span<const size_t> region) const;
    /// Entropy of the contiguous block [begin, end).
    size_t interval_entropy(size_t begin, size_t end) const;
    /// S_A + S_C - S_B for the three contiguous thirds A, B, C of the chain.
    int mutual_information_i2() const;

    /// Checks pairwise commutation and full GF(2) rank.
    bool is_valid() const;

    /// Equality of the stored generators and signs (not of the stabilizer
    /// group: equal states may have different generator sets).
    bool operator==(const StabilizerTableau &other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_ && sign_ == other.sign_;
    }
    std::string str() const;

   private:
    StabilizerTableau(size_t num_qubits);

    uint64_t *xcol(size_t q) {
        return x_.data() + q * w_;
    }
    uint64_t *zcol(size_t q) {
        return z_.data() + q * w_;
    }
    const uint64_t *xcol(size_t q) const {
        return x_.data() + q * w_;
    }
    const uint64_t *zcol(size_t q) const {
        return z_.data() + q * w_;
    }
    bool bit(const uint64_t *col, size_t row) const {
        return (col[row >> 6] >> (row & 63)) & 1;
    }
    void check_qubit(size_t q) const;
    size_t rank_of_columns(std::span<const size_t> qubits) const;
    void debug_check() const;

    size_t n_ = 0;
    size_t w_ = 0;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    std::vector<uint64_t> sign_;
    // scratch for measurements, kept to avoid reallocation in hot loops
    std::vector<uint64_t> scratch_;
};

}  // namespace mptzx
