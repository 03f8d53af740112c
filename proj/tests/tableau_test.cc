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

#include "mptzx/tableau.h"

#include <gtest/gtest.h>

#include <cmath>

#include "mptzx/circuit.h"
#include "mptzx/oracle/dense_state.h"
#include "test_util.h"

using namespace mptzx;

namespace {

StabilizerTableau from_strings(const std::vector<std::string> &rows) {
    std::vector<PauliRow> parsed;
    for (const auto &r : rows) {
        parsed.push_back(PauliRow::from_string(r));
    }
    return StabilizerTableau::from_rows(parsed);
}

PauliRow conjugated_by_cnot(const std::string &pauli) {
    // Extend the Pauli to a full stabilizer set so the tableau tracks it.
    std::string partner = {pauli[1], pauli[0]};
    StabilizerTableau t = from_strings({pauli, partner});
    t.apply_cnot(0, 1);
    return t.row(0);
}

}  // namespace

TEST(StabilizerTableau, BellPairRows) {
    StabilizerTableau t = StabilizerTableau::bell_pairs(2);
    EXPECT_EQ(t.row(0), PauliRow::from_string("+XX"));
    EXPECT_EQ(t.row(1), PauliRow::from_string("+ZZ"));
    StabilizerTableau t4 = StabilizerTableau::bell_pairs(4);
    EXPECT_EQ(t4, from_strings({"XX__", "ZZ__", "__XX", "__ZZ"}));
    EXPECT_TRUE(t4.is_valid());
    EXPECT_THROW(StabilizerTableau::bell_pairs(3), std::invalid_argument);
    EXPECT_THROW(StabilizerTableau::bell_pairs(0), std::invalid_argument);
}

TEST(StabilizerTableau, ProductState) {
    EXPECT_EQ(StabilizerTableau::product_state(1).row(0), PauliRow::from_string("Z"));
    StabilizerTableau t = StabilizerTableau::product_state(4);
    EXPECT_EQ(t, from_strings({"Z___", "_Z__", "__Z_", "___Z"}));
    for (size_t mask = 0; mask < 16; mask++) {
        auto region = test_util::region_of_mask(mask, 4);
        EXPECT_EQ(t.entanglement_entropy(region), 0u);
    }
    EXPECT_THROW(StabilizerTableau::product_state(0), std::invalid_argument);
}

TEST(StabilizerTableau, FromRowsRejectsBadSets) {
    EXPECT_THROW(from_strings({"X_", "Z_"}), std::invalid_argument);   // anticommute
    EXPECT_THROW(from_strings({"XX", "XX"}), std::invalid_argument);   // dependent
    EXPECT_THROW(from_strings({"XX", "Z"}), std::invalid_argument);    // ragged
    EXPECT_THROW(StabilizerTableau::from_rows({}), std::invalid_argument);
}

TEST(StabilizerTableau, CnotConjugation) {
    EXPECT_EQ(conjugated_by_cnot("XI"), PauliRow::from_string("XX"));
    EXPECT_EQ(conjugated_by_cnot("ZI"), PauliRow::from_string("Z_"));
    EXPECT_EQ(conjugated_by_cnot("IZ"), PauliRow::from_string("ZZ"));
    EXPECT_EQ(conjugated_by_cnot("IX"), PauliRow::from_string("_X"));
    StabilizerTableau t = StabilizerTableau::product_state(2);
    EXPECT_THROW(t.apply_cnot(0, 0), std::invalid_argument);
    EXPECT_THROW(t.apply_cnot(0, 2), std::invalid_argument);
}

TEST(StabilizerTableau, SwapConjugation) {
    StabilizerTableau t = from_strings({"XI", "IZ"});
    t.apply_swap(0, 1);
    EXPECT_EQ(t.row(0), PauliRow::from_string("_X"));
    EXPECT_EQ(t.row(1), PauliRow::from_string("Z_"));
    StabilizerTableau b = StabilizerTableau::bell_pairs(2);
    b.apply_swap(0, 1);
    EXPECT_EQ(b.row(1), PauliRow::from_string("ZZ"));
    EXPECT_THROW(b.apply_swap(1, 1), std::invalid_argument);
    EXPECT_THROW(b.apply_swap(0, 5), std::invalid_argument);
}

TEST(StabilizerTableau, DeterministicMeasurement) {
    StabilizerTableau t = StabilizerTableau::product_state(2);
    StabilizerTableau before = t;
    Rng rng(1);
    MeasurementResult m = t.measure(PauliRow::from_string("Z_"), rng);
    EXPECT_EQ(m.outcome, 1);
    EXPECT_FALSE(m.random);
    EXPECT_EQ(t, before);
    EXPECT_EQ(t.measure(PauliRow::from_string("-Z_"), rng).outcome, -1);
    EXPECT_EQ(t.determined_outcome(PauliRow::from_string("ZZ")), 1);
    EXPECT_FALSE(t.determined_outcome(PauliRow::from_string("X_")).has_value());
}

TEST(StabilizerTableau, RandomMeasurementOnBellPairMatchesDenseProjection) {
    int plus = 0;
    for (uint64_t seed = 0; seed < 200; seed++) {
        StabilizerTableau t = StabilizerTableau::bell_pairs(2);
        Rng rng(seed);
        MeasurementResult m = t.measure(PauliRow::from_string("Z_"), rng);
        EXPECT_TRUE(m.random);
        plus += m.outcome == 1;
        EXPECT_EQ(t.determined_outcome(PauliRow::from_string("Z_")), m.outcome);
        EXPECT_EQ(t.determined_outcome(PauliRow::from_string("ZZ")), 1);
        size_t q0 = 0;
        EXPECT_EQ(t.entanglement_entropy(std::span<const size_t>(&q0, 1)), 0u);

        // Dense check: project (|00> + |11>)/sqrt2 onto the outcome and
        // compute the purity of qubit 0's reduced state.
        double amp[4] = {M_SQRT1_2, 0, 0, M_SQRT1_2};
        int bit = m.outcome == 1 ? 0 : 1;
        double norm = 0;
        for (int i = 0; i < 4; i++) {
            if ((i & 1) != bit) {
                amp[i] = 0;
            }
            norm += amp[i] * amp[i];
        }
        double rho00 = (amp[0] * amp[0] + amp[2] * amp[2]) / norm;
        double rho01 = (amp[0] * amp[1] + amp[2] * amp[3]) / norm;
        double rho11 = (amp[1] * amp[1] + amp[3] * amp[3]) / norm;
        EXPECT_NEAR(rho00 * rho00 + 2 * rho01 * rho01 + rho11 * rho11, 1.0, 1e-12);
    }
    EXPECT_GT(plus, 60);
    EXPECT_LT(plus, 140);
}

TEST(StabilizerTableau, RepeatedMeasurementIsIdempotent) {
    StabilizerTableau t = StabilizerTableau::bell_pairs(4);
    Rng rng(7);
    PauliRow obs = PauliRow::from_string("_XZ_");
    MeasurementResult first = t.measure(obs, rng);
    StabilizerTableau after = t;
    MeasurementResult second = t.measure(obs, rng);
    EXPECT_EQ(first.outcome, second.outcome);
    EXPECT_FALSE(second.random);
    EXPECT_EQ(t, after);
}

TEST(StabilizerTableau, BellMeasurementDisentanglesPair) {
    StabilizerTableau t = StabilizerTableau::bell_pairs(4);
    Rng rng(3);
    BellOutcome o = t.measure_bell_pair(1, 2, rng);
    EXPECT_TRUE(o.xx.has_value());
    EXPECT_TRUE(o.zz.has_value());
    std::vector<size_t> pair = {1, 2};
    EXPECT_EQ(t.entanglement_entropy(pair), 0u);
    std::vector<size_t> outer = {0, 3};
    EXPECT_EQ(t.entanglement_entropy(outer), 0u);
    // Entanglement swapping: 0 and 3 now form a pair.
    std::vector<size_t> zero = {0};
    EXPECT_EQ(t.entanglement_entropy(zero), 1u);

    StabilizerTableau again = t;
    BellOutcome o2 = t.measure_bell_pair(1, 2, rng);
    EXPECT_FALSE(o2.xx.has_value());
    EXPECT_FALSE(o2.zz.has_value());
    EXPECT_EQ(t, again);
    EXPECT_THROW(t.measure_bell_pair(1, 1, rng), std::invalid_argument);
}

TEST(StabilizerTableau, EntropyExamples) {
    StabilizerTableau t = StabilizerTableau::bell_pairs(2);
    size_t q = 0;
    EXPECT_EQ(t.entanglement_entropy(std::span<const size_t>(&q, 1)), 1u);
    std::vector<size_t> all = {0, 1};
    EXPECT_EQ(t.entanglement_entropy(all), 0u);
    EXPECT_EQ(t.entanglement_entropy(std::span<const size_t>()), 0u);
    EXPECT_EQ(t.interval_entropy(0, 1), 1u);
    EXPECT_EQ(t.interval_entropy(0, 2), 0u);
}

TEST(StabilizerTableau, MutualInformationExamples) {
    EXPECT_EQ(StabilizerTableau::product_state(6).mutual_information_i2(), 0);
    EXPECT_EQ(StabilizerTableau::bell_pairs(6).mutual_information_i2(), 0);
    StabilizerTableau straddle = from_strings({"X____X", "Z____Z", "__XX__", "__ZZ__", "_Z____", "____Z_"});
    EXPECT_EQ(straddle.mutual_information_i2(), 2);
    EXPECT_THROW(StabilizerTableau::bell_pairs(4).mutual_information_i2(), std::invalid_argument);
}

TEST(StabilizerTableau, EntropiesMatchDenseOracleOnRandomCircuits) {
    Rng rng(2024);
    for (int k = 0; k < 150; k++) {
        ModelParams params = test_util::random_params(rng, 6, 6);
        BrickworkCircuit c = sample_circuit(params);
        std::vector<BellRecord> log;
        StabilizerTableau t = run_circuit(c, params.initial_state, &log);
        ASSERT_TRUE(t.is_valid());
        oracle::DenseState d = oracle::run_dense(c, params.initial_state, log);
        for (size_t mask = 0; mask < (size_t{1} << c.n_qubits); mask++) {
            auto region = test_util::region_of_mask(mask, c.n_qubits);
            double dense = d.entropy_bits(region);
            ASSERT_NEAR(dense, std::round(dense), 1e-9);
            ASSERT_EQ(t.entanglement_entropy(region), static_cast<size_t>(std::round(dense))) << "case " << k;
        }
    }
}

TEST(StabilizerTableau, WideTableauStaysValid) {
    ModelParams params;
    params.n_qubits = 130;
    params.depth_layers = 40;
    params.p = 0.2;
    params.r = 0.5;
    params.seed = 5;
    StabilizerTableau t = run_circuit(sample_circuit(params), params.initial_state);
    EXPECT_TRUE(t.is_valid());
    EXPECT_EQ(t.interval_entropy(0, 130), 0u);
    EXPECT_EQ(t.interval_entropy(0, 65), t.interval_entropy(65, 130));
}
