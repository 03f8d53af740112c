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

#include "selftest.h"

#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "mptzx/circuit.h"
#include "mptzx/oracle/circuit_operator.h"
#include "mptzx/oracle/connectivity.h"
#include "mptzx/oracle/dense_state.h"
#include "mptzx/percolation.h"
#include "mptzx/rng.h"
#include "mptzx/scaling.h"
#include "mptzx/zx_build.h"
#include "mptzx/zx_eval.h"
#include "mptzx/zx_simplify.h"

namespace mptzx_tools {

using namespace mptzx;

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string on success
};

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

std::string tableau_vs_dense(uint64_t seed) {
    Rng rng(seed);
    for (int k = 0; k < 100; k++) {
        ModelParams params = random_params(rng, 6, 6);
        BrickworkCircuit c = sample_circuit(params);
        std::vector<BellRecord> log;
        StabilizerTableau t = run_circuit(c, params.initial_state, &log);
        oracle::DenseState d = oracle::run_dense(c, params.initial_state, log);
        for (size_t mask = 1; mask + 1 < (size_t{1} << c.n_qubits); mask++) {
            std::vector<size_t> region;
            for (size_t q = 0; q < c.n_qubits; q++) {
                if (mask >> q & 1) {
                    region.push_back(q);
                }
            }
            double dense = d.entropy_bits(region);
            if (std::abs(dense - static_cast<double>(t.entanglement_entropy(region))) > 1e-9) {
                return "entropy mismatch in circuit " + std::to_string(k);
            }
        }
    }
    return "";
}

std::string zx_vs_dense(uint64_t seed) {
    Rng rng(seed);
    for (int k = 0; k < 100; k++) {
        ModelParams params = random_params(rng, 6, 4);
        BrickworkCircuit c = sample_circuit(params);
        DenseMatrix expected = oracle::circuit_operator(c);
        ZxDiagram d = diagram_from_circuit(c);
        clifford_simplify(d);
        double err = proportionality_error(expected, evaluate_dense(d));
        if (!(err < 1e-9)) {
            return "simplified diagram differs from the circuit in case " + std::to_string(k);
        }
    }
    return "";
}

std::string percolation_dual(uint64_t seed) {
    Rng rng(seed);
    for (int k = 0; k < 1000; k++) {
        ClassicalNetwork net;
        net.n_nodes = 2 + static_cast<size_t>(rng.next() % 30);
        size_t m = static_cast<size_t>(rng.next() % (2 * net.n_nodes));
        for (size_t e = 0; e < m; e++) {
            net.edges.emplace_back(static_cast<uint32_t>(rng.next() % net.n_nodes),
                                   static_cast<uint32_t>(rng.next() % net.n_nodes));
        }
        for (uint32_t v = 0; v < net.n_nodes; v++) {
            double u = rng.uniform();
            if (u < 0.2) {
                net.input_nodes.push_back(v);
            } else if (u < 0.4) {
                net.output_nodes.push_back(v);
            }
        }
        bool bfs = is_percolating(net);
        if (bfs != is_percolating_union_find(net) || bfs != oracle::connected_by_closure(net)) {
            return "connectivity disagreement on graph " + std::to_string(k);
        }
    }
    return "";
}

std::string fit_self_consistency() {
    std::vector<CurvePoint> pts;
    for (int k = 0; k <= 10; k++) {
        double p = 0.15 + 0.02 * k;
        pts.push_back({p, fermionic(p, 0.25, 0.02), 0.01});
    }
    ThresholdFit f = fermionic_fit(96, pts);
    if (std::abs(f.p_c - 0.25) > 1e-6) {
        return "fermionic fit returned " + std::to_string(f.p_c);
    }
    std::vector<FssPoint> fss;
    for (size_t n : {48, 96, 192, 384}) {
        fss.push_back({n, 0.251 + 0.3 * std::pow(static_cast<double>(n), -0.75), 0.01});
    }
    FssEstimate est = extrapolate_threshold(fss);
    if (std::abs(est.p_c_inf - 0.251) > 1e-9) {
        return "extrapolation returned " + std::to_string(est.p_c_inf);
    }
    return "";
}

}  // namespace

bool run_selftest(std::ostream &out, uint64_t seed) {
    std::vector<Check> checks = {
        {"tableau entropies vs dense statevector", [&] { return tableau_vs_dense(seed); }},
        {"simplified ZX diagram vs dense circuit operator", [&] { return zx_vs_dense(seed + 1); }},
        {"BFS vs union-find vs transitive closure", [&] { return percolation_dual(seed + 2); }},
        {"fitters on exact model data", [] { return fit_self_consistency(); }},
    };
    bool ok = true;
    for (const Check &check : checks) {
        std::string failure;
        try {
            failure = check.run();
        } catch (const std::exception &e) {
            failure = std::string("exception: ") + e.what();
        }
        out << (failure.empty() ? "PASS " : "FAIL ") << check.name;
        if (!failure.empty()) {
            out << ": " << failure;
            ok = false;
        }
        out << "\n";
    }
    return ok;
}

}  // namespace mptzx_tools
