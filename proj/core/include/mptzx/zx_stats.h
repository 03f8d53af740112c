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

#include "mptzx/zx_rules.h"

namespace mptzx {

struct StepDistance {
    size_t step;
    double mean;
    size_t count;
};

struct DistanceHistogram {
    std::vector<double> edges;  ///< bin edges, size = counts.size() + 1
    std::vector<size_t> counts;
    size_t total = 0;
};

struct DistanceStats {
    std::vector<StepDistance> per_step;
    /// Distances of events in the final `window` fraction of steps.
    std::vector<double> window_distances;
    DistanceHistogram histogram;
    double d_max = 0;  ///< sqrt(N^2 + (4N)^2) = sqrt(17) N
    /// Slope of log(density) against log(d) over the nonempty histogram bins
    /// with 1 <= d <= d_max; NaN if fewer than three such bins.
    double tail_slope = 0;

    /// Fraction of window events with distance strictly above `d`.
    double fraction_above(double d) const;
};

/// Log-spaced histogram (bins_per_decade per decade, starting at 0.25 and
/// extending past max(d_max, largest distance)).
DistanceHistogram log_histogram(const std::vector<double> &distances, double d_max, size_t bins_per_decade = 8);

/// Slope of log(density) against log(d) over the nonempty bins with
/// 1 <= d <= d_max; NaN if fewer than three such bins.
double histogram_tail_slope(const DistanceHistogram &h, double d_max);

/// Mean distance per step and a log-binned histogram of the distances in
/// the final `window` fraction of steps (steps s with s >= (1 - window) *
/// (max_step + 1)). Empty input gives empty statistics.
DistanceStats rewrite_distance_stats(const std::vector<RewriteEvent> &events, size_t n_qubits, double window = 0.25,
                                     size_t bins_per_decade = 8);

}  // namespace mptzx
