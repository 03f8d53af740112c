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

#include "mptzx/oracle/circuit_operator.h"

#include <stdexcept>

#include <Eigen/Dense>

namespace mptzx::oracle {

namespace {

size_t bit_of(size_t n, size_t q) {
    return n - 1 - q;
}

/// Left-multiplies `m` by the two-qubit gate `g` (4x4, basis |q_a q_b>).
void apply_two_qubit(Eigen::MatrixXcd &m, size_t n, size_t qa, size_t qb, const Eigen::Matrix4cd &g) {
    size_t ba = bit_of(n, qa);
    size_t bb = bit_of(n, qb);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
    for (Eigen::Index row = 0; row < m.rows(); row++) {
        size_t u = static_cast<size_t>(row);
        size_t in = (u >> ba & 1) << 1 | (u >> bb & 1);
        size_t base = u & ~(size_t{1} << ba) & ~(size_t{1} << bb);
        for (size_t o = 0; o < 4; o++) {
            std::complex<double> coeff = g(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(in));
            if (coeff == 0.0) {
                continue;
            }
            size_t target = base | (o >> 1 & 1) << ba | (o & 1) << bb;
            out.row(static_cast<Eigen::Index>(target)) += coeff * m.row(row);
        }
    }
    m = std::move(out);
}

Eigen::MatrixXcd operator_matrix(const BrickworkCircuit &circuit) {
    size_t n = circuit.n_qubits;
    if (n == 0 || n > 12) {
        throw std::invalid_argument("circuit_operator supports 1..12 qubits");
    }
    Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);

    Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();  // control = first qubit
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
    Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
    Eigen::Matrix4cd bell = Eigen::Matrix4cd::Zero();
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;

    for (const Brick &brick : circuit.bricks) {
        auto [a, b] = brick_sites(brick);
        switch (brick.kind) {
            case GateKind::kCnot: {
                auto [c, t] = cnot_control_target(brick);
                apply_two_qubit(m, n, c, t, cnot);
                break;
            }
            case GateKind::kSwap:
                apply_two_qubit(m, n, a, b, swap);
                break;
            case GateKind::kIdentity:
                break;
            case GateKind::kBellMeasure:
                apply_two_qubit(m, n, a, b, bell);
                break;
        }
    }
    return m;
}

DenseMatrix to_dense(const Eigen::MatrixXcd &m) {
    DenseMatrix out(static_cast<size_t>(m.rows()), static_cast<size_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            out.at(static_cast<size_t>(r), static_cast<size_t>(c)) = m(r, c);
        }
    }
    return out;
}

}  // namespace

DenseMatrix circuit_operator(const BrickworkCircuit &circuit) {
    return to_dense(operator_matrix(circuit));
}

DenseMatrix prepared_output_state(const BrickworkCircuit &circuit, InitialState initial) {
    size_t n = circuit.n_qubits;
    Eigen::MatrixXcd m = operator_matrix(circuit);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(m.cols());
    if (initial == InitialState::kProduct) {
        psi(0) = 1;
    } else {
        if (n % 2 != 0) {
            throw std::invalid_argument("Bell pairs need an even qubit count");
        }
        for (Eigen::Index i = 0; i < psi.size(); i++) {
            size_t u = static_cast<size_t>(i);
            bool ok = true;
            for (size_t k = 0; k + 1 < n; k += 2) {
                ok = ok && ((u >> bit_of(n, k) & 1) == (u >> bit_of(n, k + 1) & 1));
            }
            psi(i) = ok ? 1.0 : 0.0;
        }
    }
    Eigen::MatrixXcd out = m * psi;
    return to_dense(out);
}

}  // namespace mptzx::oracle
