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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mptzx/errors.h"
#include "mptzx/zx_io.h"

namespace mptzx {

void ClassicalNetwork::validate() const {
    std::vector<uint8_t> role(n_nodes, 0);
    for (uint32_t v : input_nodes) {
        if (v >= n_nodes) {
            throw std::invalid_argument("input node " + std::to_string(v) + " out of range");
        }
        role[v] = 1;
    }
    for (uint32_t v : output_nodes) {
        if (v >= n_nodes) {
            throw std::invalid_argument("output node " + std::to_string(v) + " out of range");
        }
        if (role[v] == 1) {
            throw std::invalid_argument("node " + std::to_string(v) + " is both an input and an output");
        }
    }
    for (auto [a, b] : edges) {
        if (a >= n_nodes || b >= n_nodes) {
            throw std::invalid_argument("edge references a node out of range");
        }
    }
}

ClassicalNetwork network_from_diagram(const ZxDiagram &d) {
    ClassicalNetwork net;
    std::vector<uint32_t> index(d.id_bound(), 0);
    for (SpiderId v : d.live_spiders()) {
        index[v] = static_cast<uint32_t>(net.n_nodes++);
    }
    for (SpiderId v : d.live_spiders()) {
        for (const Neighbor &n : d.neighbors(v)) {
            if (n.id > v) {
                for (uint32_t k = 0; k < n.count.total(); k++) {
                    net.edges.emplace_back(index[v], index[n.id]);
                }
            }
        }
    }
    for (SpiderId v : d.inputs()) {
        net.input_nodes.push_back(index[v]);
    }
    for (SpiderId v : d.outputs()) {
        net.output_nodes.push_back(index[v]);
    }
    return net;
}

ClassicalNetwork network_from_dump(const nlohmann::json &dump) {
    return network_from_diagram(diagram_from_json(dump));
}

bool is_percolating(const ClassicalNetwork &net) {
    std::vector<std::vector<uint32_t>> adj(net.n_nodes);
    for (auto [a, b] : net.edges) {
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<uint8_t> is_output(net.n_nodes, 0);
    for (uint32_t v : net.output_nodes) {
        is_output[v] = 1;
    }
    std::vector<uint8_t> seen(net.n_nodes, 0);
    std::vector<uint32_t> queue;
    for (uint32_t v : net.input_nodes) {
        if (!seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    for (size_t head = 0; head < queue.size(); head++) {
        uint32_t v = queue[head];
        if (is_output[v]) {
            return true;
        }
        for (uint32_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return false;
}

UnionFind::UnionFind(size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
}

size_t UnionFind::find(size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return false;
    }
    if (size_[a] < size_[b]) {
        std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

namespace {

UnionFind components(const ClassicalNetwork &net) {
    UnionFind uf(net.n_nodes);
    for (auto [a, b] : net.edges) {
        uf.unite(a, b);
    }
    return uf;
}

}  // namespace

bool is_percolating_union_find(const ClassicalNetwork &net) {
    UnionFind uf = components(net);
    std::vector<uint8_t> input_root(net.n_nodes, 0);
    for (uint32_t v : net.input_nodes) {
        input_root[uf.find(v)] = 1;
    }
    for (uint32_t v : net.output_nodes) {
        if (input_root[uf.find(v)]) {
            return true;
        }
    }
    return false;
}

std::vector<size_t> cluster_sizes(const ClassicalNetwork &net) {
    UnionFind uf = components(net);
    std::vector<size_t> sizes;
    for (size_t v = 0; v < net.n_nodes; v++) {
        if (uf.find(v) == v) {
            sizes.push_back(uf.size_of(v));
        }
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

ClusterStats cluster_stats(const ClassicalNetwork &net) {
    std::vector<size_t> sizes = cluster_sizes(net);
    ClusterStats s;
    s.num_clusters = sizes.size();
    if (!sizes.empty()) {
        s.largest = sizes[0];
    }
    if (sizes.size() > 1) {
        s.second_largest = sizes[1];
    }
    return s;
}

}  // namespace mptzx
