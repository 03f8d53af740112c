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
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mptzx/zx_diagram.h"

namespace mptzx {

/// Undirected graph with distinguished input and output node sets.
struct ClassicalNetwork {
    size_t n_nodes = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<uint32_t> input_nodes;
    std::vector<uint32_t> output_nodes;

    /// Throws std::invalid_argument on out-of-range nodes or overlapping
    /// input/output sets.
    void validate() const;
};

/// One node per live spider (boundaries included), one edge per wire with
/// the wire type ignored. Self-loops are dropped.
ClassicalNetwork network_from_diagram(const ZxDiagram &d);

/// Same mapping applied to a diagram dump; throws ParseError.
ClassicalNetwork network_from_dump(const nlohmann::json &dump);

/// Breadth-first search from all inputs; true iff some output is reached.
bool is_percolating(const ClassicalNetwork &net);

/// Disjoint sets with path halving and union by size.
class UnionFind {
   public:
    explicit UnionFind(size_t n);
    size_t find(size_t x);
    /// Returns true if the two sets were distinct.
    bool unite(size_t a, size_t b);
    size_t size_of(size_t x) {
        return size_[find(x)];
    }

   private:
    std::vector<size_t> parent_;
    std::vector<size_t> size_;
};

/// Percolation predicate evaluated with union-find instead of a search.
bool is_percolating_union_find(const ClassicalNetwork &net);

/// Component sizes in descending order; they sum to n_nodes.
std::vector<size_t> cluster_sizes(const ClassicalNetwork &net);

struct ClusterStats {
    size_t largest = 0;
    size_t second_largest = 0;  ///< 0 when there is a single component
    size_t num_clusters = 0;
};

ClusterStats cluster_stats(const ClassicalNetwork &net);

}  // namespace mptzx
