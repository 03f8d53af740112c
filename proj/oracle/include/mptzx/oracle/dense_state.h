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

#include <Eigen/Dense>

#include "mptzx/circuit.h"

namespace mptzx::oracle {

/// Dense statevector on up to ~14 qubits. Bit q of the basis index is
/// qubit q.
class DenseState {
   public:
    static DenseState bell_pairs(size_t n);
    static DenseState product(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amp_;
    }

    void apply_cnot(size_t control, size_t target);
    void apply_swap(size_t a, size_t b);

    /// Probability of `outcome` (+1 or -1) when measuring P_a P_b with P
    /// equal to 'X' or 'Z'.
    double parity_probability(char pauli, size_t a, size_t b, int outcome) const;
    /// Projects onto the outcome and renormalizes. Throws std::domain_error
    /// if the outcome has (numerically) zero probability.
    void project_parity(char pauli, size_t a, size_t b, int outcome);

    /// Von Neumann entropy in bits from the eigenvalues of the reduced
    /// density matrix.
    double entropy_bits(const std::vector<size_t> &region) const;

   private:
    explicit DenseState(size_t n);
    Eigen::VectorXcd parity_applied(char pauli, size_t a, size_t b) const;

    size_t n_;
    Eigen::VectorXcd amp_;
};

/// Replays a circuit densely. Bell measurements follow the outcomes in
/// `log` where the tableau found them random; where the tableau left them
/// empty (determined) the oracle requires an outcome of probability one and
/// takes it. Random outcomes must have probability 1/2 here. Any mismatch
/// throws std::logic_error.
DenseState run_dense(const BrickworkCircuit &circuit, InitialState initial, const std::vector<BellRecord> &log);

}  // namespace mptzx::oracle
