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

#include "mptzx/circuit.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

using namespace mptzx;

namespace {

BrickworkCircuit uniform_circuit(size_t n, size_t depth, GateKind kind) {
    BrickworkCircuit c;
    c.n_qubits = n;
    c.depth_layers = depth;
    for (size_t layer = 0; layer < c.num_half_layers(); layer++) {
        for (size_t bond = BrickworkCircuit::first_bond(layer); bond + 1 < n; bond += 2) {
            c.bricks.push_back({static_cast<uint32_t>(layer), static_cast<uint32_t>(bond), kind});
        }
    }
    return c;
}

}  // namespace

TEST(OperationProbabilities, TableValues) {
    OperationProbabilities p = operation_probabilities(0.21, 0.1);
    EXPECT_NEAR(p.cnot, 0.079, 1e-12);
    EXPECT_NEAR(p.swap, 0.711, 1e-12);
    EXPECT_NEAR(p.identity, 0.105, 1e-12);
    EXPECT_NEAR(p.bell, 0.105, 1e-12);
    OperationProbabilities all_cnot = operation_probabilities(0, 1);
    EXPECT_EQ(all_cnot.cnot, 1.0);
    EXPECT_EQ(all_cnot.swap + all_cnot.identity + all_cnot.bell, 0.0);
    EXPECT_THROW(operation_probabilities(-0.1, 0.5), std::invalid_argument);
    EXPECT_THROW(operation_probabilities(0.5, 1.5), std::invalid_argument);
}

TEST(SampleCircuit, BrickworkLayout) {
    ModelParams params{0.3, 0.4, 8, 3, InitialState::kBellPairs, 11};
    BrickworkCircuit c = sample_circuit(params);
    EXPECT_EQ(c.num_half_layers(), 6u);
    // 4 bricks on even half-layers, 3 on odd ones.
    EXPECT_EQ(c.bricks.size(), 3u * 4 + 3u * 3);
    for (const Brick &b : c.bricks) {
        EXPECT_EQ(b.bond % 2, b.layer % 2);
        EXPECT_LT(b.bond + 1, 8u);
    }
    EXPECT_EQ(BrickworkCircuit::time_of_layer(0), 0.0);
    EXPECT_EQ(BrickworkCircuit::time_of_layer(1), 0.5);
    EXPECT_EQ(BrickworkCircuit::time_of_layer(4), 2.0);
}

TEST(SampleCircuit, DegenerateDistributions) {
    BrickworkCircuit c = sample_circuit({0.0, 1.0, 6, 4, InitialState::kBellPairs, 1});
    for (const Brick &b : c.bricks) {
        EXPECT_EQ(b.kind, GateKind::kCnot);
    }
    BrickworkCircuit s = sample_circuit({0.0, 0.0, 6, 4, InitialState::kBellPairs, 1});
    for (const Brick &b : s.bricks) {
        EXPECT_EQ(b.kind, GateKind::kSwap);
    }
}

TEST(SampleCircuit, MeasurementSectorFrequencies) {
    BrickworkCircuit c = sample_circuit({1.0, 0.3, 1002, 100, InitialState::kBellPairs, 99});
    size_t bell = 0;
    for (const Brick &b : c.bricks) {
        ASSERT_TRUE(b.kind == GateKind::kIdentity || b.kind == GateKind::kBellMeasure);
        bell += b.kind == GateKind::kBellMeasure;
    }
    double n = static_cast<double>(c.bricks.size());
    ASSERT_GT(n, 1e5);
    double sigma = std::sqrt(n * 0.25);
    EXPECT_LT(std::abs(static_cast<double>(bell) - 0.5 * n), 3 * sigma);
}

TEST(SampleCircuit, SeedDeterminism) {
    ModelParams params{0.2, 0.5, 12, 10, InitialState::kBellPairs, 77};
    BrickworkCircuit a = sample_circuit(params);
    BrickworkCircuit b = sample_circuit(params);
    EXPECT_EQ(a, b);
    EXPECT_EQ(run_circuit(a, params.initial_state), run_circuit(b, params.initial_state));
    params.seed = 78;
    EXPECT_NE(sample_circuit(params), a);
}

TEST(ModelParams, Validation) {
    EXPECT_THROW(ModelParams({0.1, 0.1, 5, 2}).validate(), std::invalid_argument);
    EXPECT_THROW(ModelParams({0.1, 0.1, 0, 2}).validate(), std::invalid_argument);
    EXPECT_THROW(ModelParams({0.1, 0.1, 4, 0}).validate(), std::invalid_argument);
    EXPECT_THROW(ModelParams({1.1, 0.1, 4, 2}).validate(), std::invalid_argument);
    EXPECT_NO_THROW(ModelParams({0.1, 0.1, 4, 2}).validate());
}

TEST(RunCircuit, IdentityCircuitKeepsInitialState) {
    BrickworkCircuit c = uniform_circuit(6, 3, GateKind::kIdentity);
    EXPECT_EQ(run_circuit(c, InitialState::kBellPairs), StabilizerTableau::bell_pairs(6));
    EXPECT_EQ(run_circuit(c, InitialState::kProduct), StabilizerTableau::product_state(6));
}

TEST(RunCircuit, SwapCircuitPermutesPairing) {
    // One full swap layer moves every qubit two sites (reflected at the
    // edges); the entropy profile stays that of a perfect matching.
    BrickworkCircuit c = uniform_circuit(8, 2, GateKind::kSwap);
    StabilizerTableau t = run_circuit(c, InitialState::kBellPairs);
    EXPECT_TRUE(t.is_valid());
    size_t singles = 0;
    for (size_t q = 0; q < 8; q++) {
        EXPECT_EQ(t.interval_entropy(q, q + 1), 1u);
        singles++;
    }
    EXPECT_EQ(singles, 8u);
    EXPECT_EQ(t.interval_entropy(0, 8), 0u);
    // Each qubit's partner is unique: pair entropies are 0 for exactly four pairs.
    size_t pairs = 0;
    for (size_t a = 0; a < 8; a++) {
        for (size_t b = a + 1; b < 8; b++) {
            std::vector<size_t> region = {a, b};
            pairs += t.entanglement_entropy(region) == 0;
        }
    }
    EXPECT_EQ(pairs, 4u);
}

TEST(RunCircuit, BellLogCoversEveryMeasurement) {
    ModelParams params{0.6, 0.5, 6, 5, InitialState::kProduct, 3};
    BrickworkCircuit c = sample_circuit(params);
    std::vector<BellRecord> log;
    run_circuit(c, params.initial_state, &log);
    size_t expected = 0;
    for (const Brick &b : c.bricks) {
        expected += b.kind == GateKind::kBellMeasure;
    }
    EXPECT_EQ(log.size(), expected);
}

TEST(RunCircuit, RejectsBricksOutsideChain) {
    BrickworkCircuit c = uniform_circuit(4, 1, GateKind::kIdentity);
    c.bricks.push_back({1, 3, GateKind::kCnot});
    EXPECT_THROW(run_circuit(c, InitialState::kBellPairs), std::invalid_argument);
}

TEST(InitialState, ParseAndPrint) {
    EXPECT_EQ(parse_initial_state(to_string(InitialState::kBellPairs)), InitialState::kBellPairs);
    EXPECT_EQ(parse_initial_state(to_string(InitialState::kProduct)), InitialState::kProduct);
    EXPECT_THROW(parse_initial_state("ghz"), std::invalid_argument);
}
