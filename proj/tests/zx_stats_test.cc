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

#include <gtest/gtest.h>

#include <cmath>

using namespace mptzx;

namespace {

RewriteEvent event_at(size_t step, double distance) {
    return {RewriteRule::kFusion, step, distance, 0, 1};
}

}  // namespace

TEST(DistanceStats, ConventionExamples) {
    ZxDiagram d;
    SpiderId a = d.add_spider(SpiderColor::kZ, 0, {2, 1.0});
    SpiderId b = d.add_spider(SpiderColor::kZ, 0, {2, 1.5});
    SpiderId c = d.add_spider(SpiderColor::kZ, 0, {3, 2});
    SpiderId e = d.add_spider(SpiderColor::kZ, 0, {7, 5});
    RewriteLog log;
    log.record(RewriteRule::kFusion, d, a, b);
    log.record(RewriteRule::kPivot, d, c, e);
    EXPECT_DOUBLE_EQ(log.events[0].distance, 0.5);
    EXPECT_DOUBLE_EQ(log.events[1].distance, 5.0);
}

TEST(DistanceStats, EmptyInput) {
    DistanceStats s = rewrite_distance_stats({}, 12);
    EXPECT_TRUE(s.per_step.empty());
    EXPECT_TRUE(s.window_distances.empty());
    EXPECT_EQ(s.fraction_above(0), 0);
    EXPECT_DOUBLE_EQ(s.d_max, std::sqrt(17.0) * 12);
}

TEST(DistanceStats, PerStepMeansAndWindow) {
    std::vector<RewriteEvent> events;
    for (size_t step = 1; step <= 8; step++) {
        events.push_back(event_at(step, static_cast<double>(step)));
        events.push_back(event_at(step, static_cast<double>(step) + 1));
    }
    DistanceStats s = rewrite_distance_stats(events, 4, 0.25);
    ASSERT_EQ(s.per_step.size(), 8u);
    EXPECT_DOUBLE_EQ(s.per_step[0].mean, 1.5);
    EXPECT_EQ(s.per_step[0].count, 2u);
    // Steps >= 0.75 * 9 = 6.75: steps 7 and 8.
    EXPECT_EQ(s.window_distances.size(), 4u);
    EXPECT_EQ(s.histogram.total, 4u);
    EXPECT_DOUBLE_EQ(s.fraction_above(8), 0.25);
    EXPECT_THROW(rewrite_distance_stats(events, 4, 0), std::invalid_argument);
    EXPECT_THROW(rewrite_distance_stats(events, 4, 1.5), std::invalid_argument);
}

TEST(LogHistogram, BinsCoverAllDistances) {
    std::vector<double> xs = {0, 0.3, 1, 10, 99, 250};
    DistanceHistogram h = log_histogram(xs, 100, 4);
    ASSERT_EQ(h.edges.size(), h.counts.size() + 1);
    EXPECT_DOUBLE_EQ(h.edges.front(), 0.25);
    EXPECT_GT(h.edges.back(), 250);
    size_t sum = 0;
    for (size_t c : h.counts) {
        sum += c;
    }
    EXPECT_EQ(sum, xs.size());
    EXPECT_EQ(h.counts[0], 2u);  // 0 and 0.3
    EXPECT_THROW(log_histogram(xs, 100, 0), std::invalid_argument);
}

TEST(LogHistogram, TailSlopeOfPowerLaw) {
    // Density ~ 1/d: equal counts per logarithmic bin give density ~ 1/d.
    std::vector<double> xs;
    for (int k = 0; k < 4000; k++) {
        xs.push_back(std::exp(std::log(1.0) + (std::log(400.0)) * (k + 0.5) / 4000));
    }
    DistanceHistogram h = log_histogram(xs, 400, 8);
    EXPECT_NEAR(histogram_tail_slope(h, 400), -1.0, 0.05);
    EXPECT_TRUE(std::isnan(histogram_tail_slope(log_histogram({2.0}, 10, 8), 10)));
}
