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

#include "mptzx/zx_stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace mptzx {

double DistanceStats::fraction_above(double d) const {
    if (window_distances.empty()) {
        return 0;
    }
    size_t n = 0;
    for (double x : window_distances) {
        n += x > d;
    }
    return static_cast<double>(n) / static_cast<double>(window_distances.size());
}

DistanceHistogram log_histogram(const std::vector<double> &distances, double d_max, size_t bins_per_decade) {
    if (bins_per_decade == 0) {
        throw std::invalid_argument("bins_per_decade must be positive");
    }
    // Log-spaced bins from 0.25 up to past d_max; distance 0 lands in the
    // first bin.
    double lo = 0.25;
    double hi = std::max(d_max, 1.0) * 1.0001;
    for (double x : distances) {
        hi = std::max(hi, x * 1.0001);
    }
    size_t n_bins = static_cast<size_t>(std::ceil(std::log10(hi / lo) * static_cast<double>(bins_per_decade)));
    n_bins = std::max<size_t>(n_bins, 1);
    DistanceHistogram h;
    for (size_t k = 0; k <= n_bins; k++) {
        h.edges.push_back(lo * std::pow(10.0, static_cast<double>(k) / static_cast<double>(bins_per_decade)));
    }
    h.counts.assign(n_bins, 0);
    for (double x : distances) {
        auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
        size_t bin = it == h.edges.begin() ? 0 : static_cast<size_t>(it - h.edges.begin()) - 1;
        h.counts[std::min(bin, n_bins - 1)]++;
    }
    h.total = distances.size();
    return h;
}

double histogram_tail_slope(const DistanceHistogram &h, double d_max) {
    std::vector<double> xs, ys;
    for (size_t k = 0; k < h.counts.size(); k++) {
        double center = std::sqrt(h.edges[k] * h.edges[k + 1]);
        if (h.counts[k] == 0 || h.edges[k] < 1.0 || center > d_max) {
            continue;
        }
        double density = static_cast<double>(h.counts[k]) / (h.edges[k + 1] - h.edges[k]);
        xs.push_back(std::log(center));
        ys.push_back(std::log(density));
    }
    if (xs.size() < 3) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        mx += xs[k] / n;
        my += ys[k] / n;
    }
    double sxy = 0, sxx = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    return sxy / sxx;
}

DistanceStats rewrite_distance_stats(const std::vector<RewriteEvent> &events, size_t n_qubits, double window,
                                     size_t bins_per_decade) {
    if (!(window > 0 && window <= 1)) {
        throw std::invalid_argument("window must lie in (0, 1]");
    }
    DistanceStats stats;
    stats.d_max = std::sqrt(17.0) * static_cast<double>(n_qubits);
    if (events.empty()) {
        stats.tail_slope = std::numeric_limits<double>::quiet_NaN();
        return stats;
    }

    std::map<size_t, std::pair<double, size_t>> by_step;
    size_t max_step = 0;
    for (const RewriteEvent &e : events) {
        auto &acc = by_step[e.step];
        acc.first += e.distance;
        acc.second++;
        max_step = std::max(max_step, e.step);
    }
    for (const auto &[step, acc] : by_step) {
        stats.per_step.push_back({step, acc.first / static_cast<double>(acc.second), acc.second});
    }

    double cutoff = (1.0 - window) * static_cast<double>(max_step + 1);
    for (const RewriteEvent &e : events) {
        if (static_cast<double>(e.step) >= cutoff) {
            stats.window_distances.push_back(e.distance);
        }
    }

    stats.histogram = log_histogram(stats.window_distances, stats.d_max, bins_per_decade);
    stats.tail_slope = histogram_tail_slope(stats.histogram, stats.d_max);
    return stats;
}

}  // namespace mptzx
