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

#include "mptzx/collapse.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mptzx {

namespace {

/// Linear interpolation on a curve sorted by x; nullopt-like via NaN outside.
double interpolate(const std::vector<CollapsedPoint> &curve, double x) {
    if (curve.empty() || x < curve.front().x || x > curve.back().x) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    auto it = std::lower_bound(curve.begin(), curve.end(), x,
                               [](const CollapsedPoint &p, double v) { return p.x < v; });
    if (it->x == x) {
        return it->y;
    }
    const CollapsedPoint &hi = *it;
    const CollapsedPoint &lo = *std::prev(it);
    double t = (x - lo.x) / (hi.x - lo.x);
    return lo.y + t * (hi.y - lo.y);
}

}  // namespace

double collapse_score(const std::vector<std::vector<CollapsedPoint>> &curves) {
    if (curves.size() < 2) {
        return 0;
    }
    std::vector<std::vector<CollapsedPoint>> sorted = curves;
    for (auto &c : sorted) {
        std::sort(c.begin(), c.end(), [](const CollapsedPoint &a, const CollapsedPoint &b) { return a.x < b.x; });
    }
    double total = 0;
    size_t count = 0;
    for (size_t i = 0; i < sorted.size(); i++) {
        for (size_t j = 0; j < sorted.size(); j++) {
            if (i == j) {
                continue;
            }
            for (const CollapsedPoint &p : sorted[i]) {
                double y = interpolate(sorted[j], p.x);
                if (!std::isnan(y)) {
                    total += (p.y - y) * (p.y - y);
                    count++;
                }
            }
        }
    }
    if (count == 0) {
        return std::numeric_limits<double>::infinity();
    }
    return total / static_cast<double>(count);
}

CollapseResult scaling_collapse(const CurveSet &data, double x_c, double exponent, CollapseMode mode) {
    if (data.empty()) {
        throw std::invalid_argument("scaling_collapse needs at least one curve");
    }
    if (mode == CollapseMode::kTransition && !(exponent > 0)) {
        throw std::invalid_argument("the correlation-length exponent must be positive");
    }
    CollapseResult result;
    std::vector<std::vector<CollapsedPoint>> curves;
    for (const auto &[n, curve] : data) {
        double nn = static_cast<double>(n);
        double scale = mode == CollapseMode::kTransition ? std::pow(nn, 1.0 / exponent) : std::pow(nn, exponent);
        std::vector<CollapsedPoint> rescaled;
        for (const CurvePoint &pt : curve) {
            double x = mode == CollapseMode::kTransition ? (pt.x - x_c) * scale : pt.x * scale;
            rescaled.push_back({x, pt.y, pt.err, n});
        }
        result.points.insert(result.points.end(), rescaled.begin(), rescaled.end());
        curves.push_back(std::move(rescaled));
    }
    result.degenerate = curves.size() < 2;
    result.score = collapse_score(curves);
    return result;
}

}  // namespace mptzx
