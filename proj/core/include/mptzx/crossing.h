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

struct PairCrossing {
    size_t n_small;
    size_t n_large;
    double x;
    double err;
};

struct CrossingEstimate {
    double x = 0;
    double err = 0;
    std::vector<PairCrossing> pairs;
};

/// Crossing point of curves for successive sizes. For each pair, the
/// difference of the two curves on their shared grid is linearly
/// interpolated and its zero located (the steepest one if there are several),
/// with an error propagated from the point errors. The pair estimates are
/// combined by an inverse-variance weighted mean whose error is the larger
/// of the statistical error and the weighted spread of the pairs.
///
/// Throws NoCrossingError naming the pair when two curves do not cross on
/// their shared grid (including identical curves), and std::invalid_argument
/// for fewer than two sizes.
CrossingEstimate find_crossing(const CurveSet &curves);

}  // namespace mptzx
