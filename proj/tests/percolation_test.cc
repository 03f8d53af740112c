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

#include "mptzx/percolation.h"

#include <gtest/gtest.h>

#include <numeric>

#include "mptzx/ensemble.h"
#include "mptzx/errors.h"
#include "mptzx/oracle/connectivity.h"
#include "mptzx/zx_io.h"
#include "test_util.h"

using namespace mptzx;

namespace {

ClassicalNetwork random_network(Rng &rng, size_t n, double mean_degree) {
    ClassicalNetwork net;
    net.n_nodes = n;
    size_t m = static_cast<size_t>(mean_degree * static_cast<double>(n) / 2);
    for (size_t e = 0; e < m; e++) {
        net.edges.emplace_back(static_cast<uint32_t>(rng.next() % n), static_cast<uint32_t>(rng.next() % n));
    }
    for (uint32_t v = 0; v < n; v++) {
        double u = rng.uniform();
        if (u < 0.01) {
            net.input_nodes.push_back(v);
        } else if (u < 0.02) {
            net.output_nodes.push_back(v);
        }
    }
    return net;
}

}  // namespace

TEST(IsPercolating, Examples) {
    ClassicalNetwork direct{2, {{0, 1}}, {0}, {1}};
    EXPECT_TRUE(is_percolating(direct));
    ClassicalNetwork none{2, {}, {0}, {1}};
    EXPECT_FALSE(is_percolating(none));
    ClassicalNetwork no_outputs{3, {{0, 1}, {1, 2}}, {0}, {}};
    EXPECT_FALSE(is_percolating(no_outputs));
    ClassicalNetwork any_output{4, {{0, 1}}, {0, 2}, {1, 3}};
    EXPECT_TRUE(is_percolating(any_output));
}

TEST(IsPercolating, DiagramsWithDisjointWires) {
    ZxDiagram wires;
    for (int q = 0; q < 3; q++) {
        SpiderId in = wires.add_boundary(BoundaryKind::kInput, {});
        SpiderId out = wires.add_boundary(BoundaryKind::kOutput, {});
        wires.add_wire(in, out);
    }
    ClassicalNetwork net = network_from_diagram(wires);
    EXPECT_TRUE(is_percolating(net));
    EXPECT_EQ(cluster_sizes(net), (std::vector<size_t>{2, 2, 2}));

    ZxDiagram cut;
    SpiderId in = cut.add_boundary(BoundaryKind::kInput, {});
    SpiderId out = cut.add_boundary(BoundaryKind::kOutput, {});
    cut.add_wire(in, cut.add_spider(SpiderColor::kZ, 0, {}));
    cut.add_wire(out, cut.add_spider(SpiderColor::kX, 0, {}), EdgeType::kHadamard);
    EXPECT_FALSE(is_percolating(network_from_diagram(cut)));
    EXPECT_FALSE(is_percolating(network_from_dump(diagram_to_json(cut))));
    EXPECT_THROW(network_from_dump(nlohmann::json::object()), ParseError);
}

TEST(IsPercolating, ExhaustiveSmallGraphs) {
    // Every graph on 5 nodes with node 0 as input and node 4 as output, plus
    // random graphs up to 8 nodes with random terminal sets.
    const size_t n = 5;
    std::vector<std::pair<uint32_t, uint32_t>> all;
    for (uint32_t a = 0; a < n; a++) {
        for (uint32_t b = a + 1; b < n; b++) {
            all.emplace_back(a, b);
        }
    }
    for (size_t mask = 0; mask < (size_t{1} << all.size()); mask++) {
        ClassicalNetwork net{n, {}, {0}, {4}};
        for (size_t e = 0; e < all.size(); e++) {
            if (mask >> e & 1) {
                net.edges.push_back(all[e]);
            }
        }
        bool expected = oracle::connected_by_closure(net);
        ASSERT_EQ(is_percolating(net), expected);
        ASSERT_EQ(is_percolating_union_find(net), expected);
    }
    Rng rng(3);
    for (int k = 0; k < 5000; k++) {
        size_t m = 2 + rng.next() % 7;
        ClassicalNetwork net = random_network(rng, m, 1.5);
        net.input_nodes = {0};
        net.output_nodes = {static_cast<uint32_t>(m - 1)};
        ASSERT_EQ(is_percolating(net), oracle::connected_by_closure(net));
    }
}

TEST(IsPercolating, BreadthFirstMatchesUnionFindOnLargeGraphs) {
    Rng rng(4);
    size_t positives = 0;
    for (int k = 0; k < 10000; k++) {
        ClassicalNetwork net = random_network(rng, 1000, 0.3 + 1.4 * rng.uniform());
        bool bfs = is_percolating(net);
        ASSERT_EQ(bfs, is_percolating_union_find(net)) << "graph " << k;
        positives += bfs;
    }
    EXPECT_GT(positives, 1000u);
    EXPECT_LT(positives, 9000u);
}

TEST(ClusterStats, PartitionAndOrdering) {
    Rng rng(5);
    for (int k = 0; k < 200; k++) {
        ClassicalNetwork net = random_network(rng, 200, 1.0);
        std::vector<size_t> sizes = cluster_sizes(net);
        EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), size_t{0}), net.n_nodes);
        EXPECT_TRUE(std::is_sorted(sizes.rbegin(), sizes.rend()));
        ClusterStats s = cluster_stats(net);
        EXPECT_EQ(s.largest, sizes[0]);
        EXPECT_EQ(s.second_largest, sizes.size() > 1 ? sizes[1] : 0);
        EXPECT_EQ(s.num_clusters, sizes.size());
    }
    ClassicalNetwork one{3, {{0, 1}, {1, 2}}, {}, {}};
    EXPECT_EQ(cluster_stats(one).second_largest, 0u);
}

TEST(ClassicalNetwork, Validation) {
    EXPECT_THROW((ClassicalNetwork{2, {{0, 2}}, {}, {}}).validate(), std::invalid_argument);
    EXPECT_THROW((ClassicalNetwork{2, {}, {3}, {}}).validate(), std::invalid_argument);
    EXPECT_THROW((ClassicalNetwork{2, {}, {1}, {1}}).validate(), std::invalid_argument);
}

TEST(UnionFind, Basics) {
    UnionFind uf(5);
    EXPECT_TRUE(uf.unite(0, 1));
    EXPECT_TRUE(uf.unite(3, 4));
    EXPECT_FALSE(uf.unite(1, 0));
    EXPECT_TRUE(uf.unite(1, 4));
    EXPECT_EQ(uf.find(0), uf.find(3));
    EXPECT_EQ(uf.size_of(3), 4u);
    EXPECT_EQ(uf.size_of(2), 1u);
}

TEST(PercolationPipeline, UnitaryLimitAlwaysPercolates) {
    for (double r : {0.0, 0.1, 0.5, 1.0}) {
        ModelParams base{0.0, r, 12, 48, InitialState::kBellPairs, 0};
        PercolationSummary s = summarize_percolation(percolation_ensemble(base, 20, 17, 2));
        EXPECT_EQ(s.p_path, 1.0);
        EXPECT_EQ(s.p_path_err, 0.0);
        EXPECT_EQ(s.hits, 20u);
    }
}

TEST(PercolationPipeline, SwapCircuitsGiveDisjointWires) {
    ModelParams base{0.0, 0.0, 8, 32, InitialState::kBellPairs, 0};
    PercolationSummary s = summarize_percolation(percolation_ensemble(base, 10, 3, 1));
    // Pure SWAP circuits simplify to N disjoint wires.
    EXPECT_EQ(s.largest.mean, 2.0);
    EXPECT_EQ(s.slc.mean, 2.0);
    EXPECT_EQ(s.p_path, 1.0);
}

TEST(PercolationPipeline, MonotoneInMeasurementRate) {
    double previous = 1.0;
    for (double p : {0.05, 0.2, 0.35, 0.6}) {
        ModelParams base{p, 0.1, 12, 48, InitialState::kBellPairs, 0};
        PercolationSummary s = summarize_percolation(percolation_ensemble(base, 200, 23, 4));
        EXPECT_GE(s.p_path, 0.0);
        EXPECT_LE(s.p_path, 1.0);
        EXPECT_LE(s.p_path, previous + 3 * s.p_path_err + 1e-12);
        previous = s.p_path;
    }
    EXPECT_LT(previous, 0.2);
}
