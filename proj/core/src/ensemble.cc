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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "mptzx/percolation.h"
#include "mptzx/rng.h"
#include "mptzx/zx_build.h"
#include "mptzx/zx_simplify.h"

namespace mptzx {

void parallel_for(size_t count, size_t workers, const std::function<void(size_t)> &fn) {
    workers = std::max<size_t>(1, std::min(workers, count));
    std::vector<std::exception_ptr> errors(count);
    std::atomic<size_t> next{0};
    auto body = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> threads;
        for (size_t w = 0; w < workers; w++) {
            threads.emplace_back(body);
        }
        for (std::thread &t : threads) {
            t.join();
        }
    }
    for (const std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

size_t default_workers() {
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

MeanEstimate mean_and_stderr(const std::vector<double> &values) {
    MeanEstimate est;
    est.count = values.size();
    if (values.empty()) {
        return est;
    }
    double n = static_cast<double>(values.size());
    double sum = 0;
    for (double v : values) {
        sum += v;
    }
    est.mean = sum / n;
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) {
            ss += (v - est.mean) * (v - est.mean);
        }
        est.stderr_ = std::sqrt(ss / (n - 1) / n);
    }
    return est;
}

uint64_t realization_seed(uint64_t stream_seed, size_t index) {
    return derive_seed({stream_seed, static_cast<uint64_t>(index)});
}

std::vector<int> sample_i2(const ModelParams &base, size_t n_realizations, uint64_t stream_seed, size_t workers) {
    base.validate();
    std::vector<int> out(n_realizations);
    parallel_for(n_realizations, workers, [&](size_t i) {
        ModelParams params = base;
        params.seed = realization_seed(stream_seed, i);
        BrickworkCircuit circuit = sample_circuit(params);
        out[i] = run_circuit(circuit, params.initial_state).mutual_information_i2();
    });
    return out;
}

MeanEstimate measure_i2_ensemble(const ModelParams &base, size_t n_realizations, uint64_t stream_seed,
                                 size_t workers) {
    if (n_realizations <= 1) {
        throw std::invalid_argument("measure_i2_ensemble needs at least 2 realizations");
    }
    std::vector<int> values = sample_i2(base, n_realizations, stream_seed, workers);
    return mean_and_stderr(std::vector<double>(values.begin(), values.end()));
}

PercolationSample percolation_sample(const ModelParams &params) {
    BrickworkCircuit circuit = sample_circuit(params);
    ZxDiagram d = diagram_from_circuit(circuit);
    clifford_simplify(d);
    ClassicalNetwork net = network_from_diagram(d);
    ClusterStats clusters = cluster_stats(net);

    PercolationSample s;
    s.p = params.p;
    s.r = params.r;
    s.n_qubits = params.n_qubits;
    s.seed = params.seed;
    s.connected = is_percolating(net);
    s.largest_cluster = clusters.largest;
    s.second_largest_cluster = clusters.second_largest;
    return s;
}

std::vector<PercolationSample> percolation_ensemble(const ModelParams &base, size_t n_realizations,
                                                    uint64_t stream_seed, size_t workers) {
    base.validate();
    std::vector<PercolationSample> out(n_realizations);
    parallel_for(n_realizations, workers, [&](size_t i) {
        ModelParams params = base;
        params.seed = realization_seed(stream_seed, i);
        out[i] = percolation_sample(params);
    });
    return out;
}

PercolationSummary summarize_percolation(const std::vector<PercolationSample> &samples) {
    PercolationSummary s;
    s.count = samples.size();
    std::vector<double> slc;
    std::vector<double> largest;
    for (const PercolationSample &x : samples) {
        s.hits += x.connected ? 1 : 0;
        slc.push_back(static_cast<double>(x.second_largest_cluster));
        largest.push_back(static_cast<double>(x.largest_cluster));
    }
    if (s.count > 0) {
        double m = static_cast<double>(s.count);
        s.p_path = static_cast<double>(s.hits) / m;
        s.p_path_err = std::sqrt(s.p_path * (1 - s.p_path) / m);
    }
    s.slc = mean_and_stderr(slc);
    s.largest = mean_and_stderr(largest);
    return s;
}

PooledDistanceStats pooled_distance_stats(const ModelParams &base, size_t n_realizations, uint64_t stream_seed,
                                          size_t workers, double window, size_t bins_per_decade) {
    base.validate();
    std::vector<DistanceStats> parts(n_realizations);
    parallel_for(n_realizations, workers, [&](size_t i) {
        ModelParams params = base;
        params.seed = realization_seed(stream_seed, i);
        ZxDiagram d = diagram_from_circuit(sample_circuit(params));
        SimplifyOptions options;
        options.telemetry = true;
        SimplifyResult result = clifford_simplify(d, options);
        DistanceStats stats = rewrite_distance_stats(result.events, params.n_qubits, window, bins_per_decade);
        stats.histogram = {};
        parts[i] = std::move(stats);
    });

    PooledDistanceStats pooled;
    pooled.d_max = std::sqrt(17.0) * static_cast<double>(base.n_qubits);
    std::map<size_t, std::pair<double, size_t>> by_step;
    std::vector<double> distances;
    for (const DistanceStats &part : parts) {
        for (const StepDistance &sd : part.per_step) {
            auto &acc = by_step[sd.step];
            acc.first += sd.mean * static_cast<double>(sd.count);
            acc.second += sd.count;
        }
        distances.insert(distances.end(), part.window_distances.begin(), part.window_distances.end());
    }
    for (const auto &[step, acc] : by_step) {
        pooled.per_step.push_back({step, acc.first / static_cast<double>(acc.second), acc.second});
    }
    pooled.histogram = log_histogram(distances, pooled.d_max, bins_per_decade);
    pooled.tail_slope = histogram_tail_slope(pooled.histogram, pooled.d_max);
    pooled.window_events = distances.size();
    double n = static_cast<double>(base.n_qubits);
    size_t above = static_cast<size_t>(std::count_if(distances.begin(), distances.end(), [n](double x) { return x > n; }));
    pooled.fraction_above_n = distances.empty() ? 0 : static_cast<double>(above) / static_cast<double>(distances.size());
    return pooled;
}

}  // namespace mptzx
