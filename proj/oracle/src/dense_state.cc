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

#include "mptzx/oracle/dense_state.h"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace mptzx::oracle {

DenseState::DenseState(size_t n) : n_(n), amp_(Eigen::VectorXcd::Zero(Eigen::Index{1} << n)) {
    if (n == 0 || n > 20) {
        throw std::invalid_argument("dense oracle supports 1..20 qubits");
    }
}

DenseState DenseState::product(size_t n) {
    DenseState s(n);
    s.amp_(0) = 1;
    return s;
}

DenseState DenseState::bell_pairs(size_t n) {
    if (n % 2 != 0) {
        throw std::invalid_argument("Bell pairs need an even qubit count");
    }
    DenseState s(n);
    size_t pairs = n / 2;
    double amp = std::pow(2.0, -0.5 * static_cast<double>(pairs));
    for (size_t mask = 0; mask < (size_t{1} << pairs); mask++) {
        size_t index = 0;
        for (size_t k = 0; k < pairs; k++) {
            if (mask >> k & 1) {
                index |= size_t{3} << (2 * k);
            }
        }
        s.amp_(static_cast<Eigen::Index>(index)) = amp;
    }
    return s;
}

void DenseState::apply_cnot(size_t control, size_t target) {
    for (Eigen::Index i = 0; i < amp_.size(); i++) {
        size_t u = static_cast<size_t>(i);
        if ((u >> control & 1) && !(u >> target & 1)) {
            std::swap(amp_(i), amp_(static_cast<Eigen::Index>(u | size_t{1} << target)));
        }
    }
}

void DenseState::apply_swap(size_t a, size_t b) {
    for (Eigen::Index i = 0; i < amp_.size(); i++) {
        size_t u = static_cast<size_t>(i);
        if ((u >> a & 1) && !(u >> b & 1)) {
            size_t v = (u & ~(size_t{1} << a)) | size_t{1} << b;
            std::swap(amp_(i), amp_(static_cast<Eigen::Index>(v)));
        }
    }
}

Eigen::VectorXcd DenseState::parity_applied(char pauli, size_t a, size_t b) const {
    Eigen::VectorXcd out(amp_.size());
    for (Eigen::Index i = 0; i < amp_.size(); i++) {
        size_t u = static_cast<size_t>(i);
        if (pauli == 'X') {
            out(static_cast<Eigen::Index>(u ^ (size_t{1} << a) ^ (size_t{1} << b))) = amp_(i);
        } else if (pauli == 'Z') {
            bool odd = ((u >> a) ^ (u >> b)) & 1;
            out(i) = odd ? -amp_(i) : amp_(i);
        } else {
            throw std::invalid_argument("parity must be 'X' or 'Z'");
        }
    }
    return out;
}

double DenseState::parity_probability(char pauli, size_t a, size_t b, int outcome) const {
    Eigen::VectorXcd projected = 0.5 * (amp_ + static_cast<double>(outcome) * parity_applied(pauli, a, b));
    return projected.squaredNorm();
}

void DenseState::project_parity(char pauli, size_t a, size_t b, int outcome) {
    Eigen::VectorXcd projected = 0.5 * (amp_ + static_cast<double>(outcome) * parity_applied(pauli, a, b));
    double norm = projected.norm();
    if (norm < 1e-9) {
        throw std::domain_error("projection onto a zero-probability outcome");
    }
    amp_ = projected / norm;
}

double DenseState::entropy_bits(const std::vector<size_t> &region) const {
    std::vector<bool> in(n_, false);
    for (size_t q : region) {
        if (q >= n_) {
            throw std::invalid_argument("region qubit out of range");
        }
        in[q] = true;
    }
    std::vector<size_t> a_bits;
    std::vector<size_t> b_bits;
    for (size_t q = 0; q < n_; q++) {
        (in[q] ? a_bits : b_bits).push_back(q);
    }
    Eigen::Index dim_a = Eigen::Index{1} << a_bits.size();
    Eigen::Index dim_b = Eigen::Index{1} << b_bits.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_a, dim_b);
    for (Eigen::Index i = 0; i < amp_.size(); i++) {
        size_t u = static_cast<size_t>(i);
        size_t ia = 0;
        size_t ib = 0;
        for (size_t k = 0; k < a_bits.size(); k++) {
            ia |= (u >> a_bits[k] & 1) << k;
        }
        for (size_t k = 0; k < b_bits.size(); k++) {
            ib |= (u >> b_bits[k] & 1) << k;
        }
        m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = amp_(i);
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    double s = 0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        double lambda = solver.eigenvalues()(k);
        if (lambda > 1e-12) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

namespace {

/// Takes the tableau's random outcome or the certain one.
int settle(DenseState &s, char pauli, size_t a, size_t b, std::optional<int> tableau_outcome, size_t brick) {
    double p_plus = s.parity_probability(pauli, a, b, +1);
    std::string where = "brick " + std::to_string(brick) + " " + pauli + pauli + ": ";
    if (tableau_outcome) {
        if (std::abs(p_plus - 0.5) > 1e-9) {
            throw std::logic_error(where + "tableau says random, oracle probability " + std::to_string(p_plus));
        }
        return *tableau_outcome;
    }
    if (std::abs(p_plus - 1) < 1e-9) {
        return +1;
    }
    if (std::abs(p_plus) < 1e-9) {
        return -1;
    }
    throw std::logic_error(where + "tableau says determined, oracle probability " + std::to_string(p_plus));
}

}  // namespace

DenseState run_dense(const BrickworkCircuit &circuit, InitialState initial, const std::vector<BellRecord> &log) {
    DenseState s = initial == InitialState::kBellPairs ? DenseState::bell_pairs(circuit.n_qubits)
                                                       : DenseState::product(circuit.n_qubits);
    size_t next_record = 0;
    for (size_t i = 0; i < circuit.bricks.size(); i++) {
        const Brick &brick = circuit.bricks[i];
        auto [a, b] = brick_sites(brick);
        switch (brick.kind) {
            case GateKind::kCnot: {
                auto [c, t] = cnot_control_target(brick);
                s.apply_cnot(c, t);
                break;
            }
            case GateKind::kSwap:
                s.apply_swap(a, b);
                break;
            case GateKind::kIdentity:
                break;
            case GateKind::kBellMeasure: {
                if (next_record >= log.size() || log[next_record].brick_index != i) {
                    throw std::logic_error("measurement log does not match brick " + std::to_string(i));
                }
                const BellOutcome &o = log[next_record++].outcome;
                s.project_parity('X', a, b, settle(s, 'X', a, b, o.xx, i));
                s.project_parity('Z', a, b, settle(s, 'Z', a, b, o.zz, i));
                break;
            }
        }
    }
    return s;
}

}  // namespace mptzx::oracle
