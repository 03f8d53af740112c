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
#include <functional>
#include <vector>

#include "mptzx/circuit.h"
#include "mptzx/curves.h"
#include "mptzx/zx_stats.h"

namespace mptzx {

/// Runs fn(0), ..., fn(count - 1) on up to `workers` threads, each thread
/// claiming the next unclaimed index. fn must only write to state owned by
/// its index. The exception from the lowest failing index is rethrown.
void parallel_for(size_t count, size_t workers, const std::function<void(size_t)> &fn);

/// Hardware concurrency, at least 1.
size_t default_workers();

struct MeanEstimate {
    double mean = 0;
    double stderr_ = 0;
    size_t count = 0;
};

MeanEstimate mean_and_stderr(const std::vector<double> &values);

/// Seed of realization `index` in the stream `stream_seed`.
uint64_t realization_seed(uint64_t stream_seed, size_t index);

/// I2 of each realization; realization i uses base with
/// seed = realization_seed(stream_seed, i).
std::vector<int> sample_i2(const ModelParams &base, size_t n_realizations, uint64_t stream_seed, size_t workers);

/// Mean and standard error of I2. Throws std::invalid_argument for
/// n_realizations <= 1.
MeanEstimate measure_i2_ensemble(const ModelParams &base, size_t n_realizations, uint64_t stream_seed,
                                 size_t workers);

struct PercolationSample {
    double p = 0;
    double r = 0;
    size_t n_qubits = 0;
    uint64_t seed = 0;
    bool connected = false;
    size_t largest_cluster = 0;
    size_t second_largest_cluster = 0;
};

/// Full pipeline for one realization: sample the circuit, build the diagram
/// of its linear map (open inputs at t = 0), reduce it with
/// clifford_simplify, and analyze the classical network.
PercolationSample percolation_sample(const ModelParams &params);

std::vector<PercolationSample> percolation_ensemble(const ModelParams &base, size_t n_realizations,
                                                    uint64_t stream_seed, size_t workers);

struct PercolationSummary {
    size_t count = 0;
    size_t hits = 0;
    double p_path = 0;
    double p_path_err = 0;  ///< sqrt(P (1 - P) / M)
    MeanEstimate slc;
    MeanEstimate largest;
};

PercolationSummary summarize_percolation(const std::vector<PercolationSample> &samples);

struct PooledDistanceStats {
    std::vector<StepDistance> per_step;
    DistanceHistogram histogram;
    double d_max = 0;
    double tail_slope = 0;
    double fraction_above_n = 0;
    size_t window_events = 0;
};

/// Rewrite-distance statistics pooled over realizations: the window of the
/// final `window` fraction of steps is taken per realization, then all
/// window distances are binned together.
PooledDistanceStats pooled_distance_stats(const ModelParams &base, size_t n_realizations, uint64_t stream_seed,
                                          size_t workers, double window = 0.25, size_t bins_per_decade = 8);

}  // namespace mptzx
