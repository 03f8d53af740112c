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

#include "mptzx/crossing.h"

#include <gtest/gtest.h>

#include <cmath>

#include "mptzx/errors.h"

using namespace mptzx;

namespace {

std::vector<CurvePoint> sample(double (*f)(double, double), double n, double lo, double hi, size_t k) {
    std::vector<CurvePoint> pts;
    for (size_t i = 0; i < k; i++) {
        double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(k - 1);
        pts.push_back({x, f(x, n), 0.01});
    }
    return pts;
}

}  // namespace

TEST(FindCrossing, LinearCurves) {
    CurveSet curves;
    curves[6] = {{0, 1, 0.01}, {0.5, 0.5, 0.01}, {1, 0, 0.01}};
    curves[12] = {{0, 0, 0.01}, {0.5, 0.5, 0.01}, {1, 1, 0.01}};
    CrossingEstimate e = find_crossing(curves);
    EXPECT_NEAR(e.x, 0.5, 1e-12);
    ASSERT_EQ(e.pairs.size(), 1u);
    EXPECT_EQ(e.pairs[0].n_small, 6u);
    EXPECT_EQ(e.pairs[0].n_large, 12u);
}

TEST(FindCrossing, ScalingAnsatz) {
    auto f = [](double x, double n) { return std::tanh(-(x - 0.24) * std::pow(n, 0.75)) * std::log(n); };
    CurveSet curves;
    for (double n : {48.0, 96.0, 192.0}) {
        curves[static_cast<size_t>(n)] = sample(f, n, 0.2, 0.28, 41);
    }
    CrossingEstimate e = find_crossing(curves);
    EXPECT_NEAR(e.x, 0.24, 2e-3);
    EXPECT_EQ(e.pairs.size(), 2u);
    EXPECT_GT(e.err, 0);
}

TEST(FindCrossing, IdenticalCurvesAreDegenerate) {
    CurveSet curves;
    curves[6] = {{0, 1, 0.01}, {1, 0, 0.01}};
    curves[12] = curves[6];
    try {
        find_crossing(curves);
        FAIL();
    } catch (const NoCrossingError &e) {
        EXPECT_NE(std::string(e.what()).find("6"), std::string::npos);
    }
}

TEST(FindCrossing, SeparatedCurvesThrowNamingPair) {
    CurveSet curves;
    curves[24] = {{0, 1, 0.01}, {1, 1, 0.01}};
    curves[48] = {{0, 0, 0.01}, {1, 0.2, 0.01}};
    try {
        find_crossing(curves);
        FAIL();
    } catch (const NoCrossingError &e) {
        std::string what = e.what();
        EXPECT_NE(what.find("24"), std::string::npos);
        EXPECT_NE(what.find("48"), std::string::npos);
    }
}

TEST(FindCrossing, NeedsTwoSizes) {
    CurveSet curves;
    curves[6] = {{0, 1, 0.01}, {1, 0, 0.01}};
    EXPECT_THROW(find_crossing(curves), std::invalid_argument);
}
