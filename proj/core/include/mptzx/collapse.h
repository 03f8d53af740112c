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

#include <vector>

#include "mptzx/curves.h"

namespace mptzx {

enum class CollapseMode {
    kTransition,  ///< x' = (x - x_c) N^(1/exponent)
    kBoundary,    ///< x' = x N^exponent, x being the distance from the boundary
};

struct CollapsedPoint {
    double x;
    double y;
    double err;
    size_t n;
};

struct CollapseResult {
    std::vector<CollapsedPoint> points;
    double score = 0;
    /// Set when fewer than two sizes were supplied; the score is then 0.
    bool degenerate = false;
};

/// Mean squared deviation of every point from the linear interpolant of each
/// other size's curve, over the abscissa range where the two overlap.
/// Independent of how the curves are labeled. Returns +inf if no pair of
/// curves overlaps and 0 for a single curve.
double collapse_score(const std::vector<std::vector<CollapsedPoint>> &curves);

/// Rescales every curve and scores the collapse. Throws
/// std::invalid_argument on empty input.
CollapseResult scaling_collapse(const CurveSet &data, double x_c, double exponent, CollapseMode mode);

}  // namespace mptzx
