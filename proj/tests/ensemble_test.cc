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

#include "mptzx/ensemble.h"

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "mptzx/oracle/dense_state.h"

using namespace mptzx;

TEST(ParallelFor, VisitsEveryIndexOnce) {
    for (size_t workers : {1, 2, 7}) {
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), workers, [&](size_t i) { hits[i]++; });
        for (int h : hits) {
            ASSERT_EQ(h, 1);
        }
    }
    parallel_for(0, 4, [](size_t) { FAIL(); });
}

TEST(ParallelFor, RethrowsLowestFailingIndex) {
    for (size_t workers : {1, 4}) {
        try {
            parallel_for(100, workers, [](size_t i) {
                if (i == 17 || i == 60) {
                    throw std::runtime_error("index " + std::to_string(i));
                }
            });
            FAIL();
        } catch (const std::runtime_error &e) {
            EXPECT_STREQ(e.what(), "index 17");
        }
    }
}

TEST(MeanAndStderr, Values) {
    MeanEstimate m = mean_and_stderr({1, 2, 3, 4});
    EXPECT_DOUBLE_EQ(m.mean, 2.5);
    EXPECT_NEAR(m.stderr_, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
    EXPECT_EQ(m.count, 4u);
}

TEST(RealizationSeed, DistinctAndStable) {
    EXPECT_EQ(realization_seed(5, 3), realization_seed(5, 3));
    EXPECT_NE(realization_seed(5, 3), realization_seed(5, 4));
    EXPECT_NE(realization_seed(5, 3), realization_seed(6, 3));
}

TEST(MeasureI2, IndependentOfWorkerCount) {
    ModelParams base{0.2, 0.1, 24, 96, InitialState::kBellPairs, 0};
    std::vector<int> one = sample_i2(base, 40, 99, 1);
    std::vector<int> many = sample_i2(base, 40, 99, 5);
    EXPECT_EQ(one, many);
    MeanEstimate a = measure_i2_ensemble(base, 40, 99, 1);
    MeanEstimate b = measure_i2_ensemble(base, 40, 99, 3);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.stderr_, b.stderr_);
    EXPECT_THROW(measure_i2_ensemble(base, 1, 99, 1), std::invalid_argument);
}

TEST(MeasureI2, SmallCaseMatchesDenseOracle) {
    ModelParams base{0.3, 0.5, 6, 2, InitialState::kBellPairs, 0};
    std::vector<int> values = sample_i2(base, 30, 12345, 2);
    for (size_t i = 0; i < values.size(); i++) {
        ModelParams params = base;
        params.seed = realization_seed(12345, i);
        BrickworkCircuit c = sample_circuit(params);
        std::vector<BellRecord> log;
        run_circuit(c, params.initial_state, &log);
        oracle::DenseState d = oracle::run_dense(c, params.initial_state, log);
        double i2 = d.entropy_bits({0, 1}) + d.entropy_bits({4, 5}) - d.entropy_bits({2, 3});
        ASSERT_NEAR(values[i], i2, 1e-9) << "realization " << i;
    }
}

TEST(MeasureI2, PhaseRegimes) {
    auto mean_i2 = [](double p, double r, size_t n) {
        ModelParams base{p, r, n, 4 * n, InitialState::kBellPairs, 0};
        return measure_i2_ensemble(base, 100, 7 + n, 4).mean;
    };
    EXPECT_GT(mean_i2(0.15, 0.1, 48), mean_i2(0.15, 0.1, 12) + 0.5);
    EXPECT_LT(mean_i2(0.35, 0.1, 48), mean_i2(0.35, 0.1, 12));
}

TEST(PercolationEnsemble, IndependentOfWorkerCount) {
    ModelParams base{0.2, 0.1, 16, 64, InitialState::kBellPairs, 0};
    auto a = percolation_ensemble(base, 24, 5, 1);
    auto b = percolation_ensemble(base, 24, 5, 6);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a[i].seed, b[i].seed);
        EXPECT_EQ(a[i].connected, b[i].connected);
        EXPECT_EQ(a[i].largest_cluster, b[i].largest_cluster);
        EXPECT_EQ(a[i].second_largest_cluster, b[i].second_largest_cluster);
    }
    PercolationSummary s = summarize_percolation(a);
    EXPECT_EQ(s.count, 24u);
    EXPECT_NEAR(s.p_path_err, std::sqrt(s.p_path * (1 - s.p_path) / 24), 1e-15);
}

TEST(PooledDistanceStats, IndependentOfWorkerCount) {
    ModelParams base{0.15, 0.2, 12, 48, InitialState::kBellPairs, 0};
    PooledDistanceStats a = pooled_distance_stats(base, 10, 8, 1);
    PooledDistanceStats b = pooled_distance_stats(base, 10, 8, 4);
    EXPECT_EQ(a.histogram.counts, b.histogram.counts);
    EXPECT_EQ(a.fraction_above_n, b.fraction_above_n);
    EXPECT_GT(a.window_events, 0u);
    EXPECT_DOUBLE_EQ(a.d_max, std::sqrt(17.0) * 12);
}
