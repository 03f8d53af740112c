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

#include "mptzx/zx_diagram.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mptzx {

double distance(const Position &a, const Position &b) {
    return std::hypot(a.site - b.site, a.time - b.time);
}

SpiderId ZxDiagram::add_spider(SpiderColor color, int phase, Position pos) {
    SpiderId id = static_cast<SpiderId>(spiders_.size());
    spiders_.push_back(Spider{color, normalize_phase(phase), pos, BoundaryKind::kNone, 0});
    alive_.push_back(1);
    adj_.emplace_back();
    loops_.emplace_back();
    live_++;
    return id;
}

SpiderId ZxDiagram::add_boundary(BoundaryKind kind, Position pos) {
    if (kind == BoundaryKind::kNone) {
        throw std::invalid_argument("add_boundary needs an input or output kind");
    }
    SpiderId id = add_spider(SpiderColor::kZ, 0, pos);
    std::vector<SpiderId> &list = kind == BoundaryKind::kInput ? inputs_ : outputs_;
    spiders_[id].boundary = kind;
    spiders_[id].boundary_index = static_cast<uint32_t>(list.size());
    list.push_back(id);
    return id;
}

Neighbor *ZxDiagram::find_neighbor(SpiderId a, SpiderId b) {
    auto &list = adj_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b, [](const Neighbor &n, SpiderId v) { return n.id < v; });
    if (it == list.end() || it->id != b) {
        return nullptr;
    }
    return &*it;
}

void ZxDiagram::adjust_entry(SpiderId a, SpiderId b, EdgeType type, int64_t delta) {
    auto &list = adj_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b, [](const Neighbor &n, SpiderId v) { return n.id < v; });
    if (it == list.end() || it->id != b) {
        if (delta < 0) {
            throw std::logic_error("removing a wire that does not exist");
        }
        Neighbor entry{b, {}};
        entry.count.of(type) = static_cast<uint32_t>(delta);
        list.insert(it, entry);
        return;
    }
    int64_t updated = static_cast<int64_t>(it->count.of(type)) + delta;
    if (updated < 0) {
        throw std::logic_error("removing a wire that does not exist");
    }
    it->count.of(type) = static_cast<uint32_t>(updated);
    if (it->count.empty()) {
        list.erase(it);
    }
}

void ZxDiagram::add_wire(SpiderId a, SpiderId b, EdgeType type, uint32_t count) {
    if (!alive(a) || !alive(b)) {
        throw std::invalid_argument("wire endpoint is not a live spider");
    }
    if (count == 0) {
        return;
    }
    if (a == b) {
        loops_[a].of(type) += count;
        return;
    }
    adjust_entry(a, b, type, count);
    adjust_entry(b, a, type, count);
}

void ZxDiagram::remove_wire(SpiderId a, SpiderId b, EdgeType type, uint32_t count) {
    if (count == 0) {
        return;
    }
    if (a == b) {
        if (loops_[a].of(type) < count) {
            throw std::logic_error("removing a self-loop that does not exist");
        }
        loops_[a].of(type) -= count;
        return;
    }
    adjust_entry(a, b, type, -static_cast<int64_t>(count));
    adjust_entry(b, a, type, -static_cast<int64_t>(count));
}

void ZxDiagram::remove_all_wires(SpiderId a, SpiderId b) {
    EdgeCount c = wires_between(a, b);
    remove_wire(a, b, EdgeType::kPlain, c.plain);
    remove_wire(a, b, EdgeType::kHadamard, c.hadamard);
}

void ZxDiagram::remove_spider(SpiderId id) {
    if (!alive(id)) {
        throw std::invalid_argument("spider " + std::to_string(id) + " is not alive");
    }
    if (spiders_[id].is_boundary()) {
        throw std::invalid_argument("boundary spiders cannot be removed");
    }
    for (const Neighbor &n : adj_[id]) {
        auto &list = adj_[n.id];
        auto it =
            std::lower_bound(list.begin(), list.end(), id, [](const Neighbor &x, SpiderId v) { return x.id < v; });
        assert(it != list.end() && it->id == id);
        list.erase(it);
    }
    adj_[id].clear();
    adj_[id].shrink_to_fit();
    loops_[id] = {};
    alive_[id] = 0;
    live_--;
}

EdgeCount ZxDiagram::wires_between(SpiderId a, SpiderId b) const {
    if (a == b) {
        return loops_[a];
    }
    const auto &list = adj_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b, [](const Neighbor &n, SpiderId v) { return n.id < v; });
    if (it == list.end() || it->id != b) {
        return {};
    }
    return it->count;
}

size_t ZxDiagram::degree(SpiderId id) const {
    size_t d = 2 * loops_[id].total();
    for (const Neighbor &n : adj_[id]) {
        d += n.count.total();
    }
    return d;
}

void ZxDiagram::toggle_incident_edge_types(SpiderId id) {
    for (Neighbor &n : adj_[id]) {
        std::swap(n.count.plain, n.count.hadamard);
        Neighbor *back = find_neighbor(n.id, id);
        assert(back);
        std::swap(back->count.plain, back->count.hadamard);
    }
}

void ZxDiagram::toggle_hadamard_between_groups(const std::vector<std::vector<SpiderId>> &groups) {
    std::vector<SpiderId> all;
    for (const auto &g : groups) {
        all.insert(all.end(), g.begin(), g.end());
    }
    std::sort(all.begin(), all.end());
    assert(std::adjacent_find(all.begin(), all.end()) == all.end());

    std::vector<SpiderId> &targets = group_scratch_;
    std::vector<SpiderId> own;
    for (const auto &g : groups) {
        own.assign(g.begin(), g.end());
        std::sort(own.begin(), own.end());
        targets.clear();
        std::set_difference(all.begin(), all.end(), own.begin(), own.end(), std::back_inserter(targets));
        if (targets.empty()) {
            continue;
        }
        for (SpiderId s : g) {
            // merge adj_[s] with targets, toggling single Hadamard wires
            const auto &list = adj_[s];
            merge_scratch_.clear();
            merge_scratch_.reserve(list.size() + targets.size());
            size_t i = 0, j = 0;
            while (i < list.size() || j < targets.size()) {
                if (j == targets.size() || (i < list.size() && list[i].id < targets[j])) {
                    merge_scratch_.push_back(list[i++]);
                } else if (i == list.size() || targets[j] < list[i].id) {
                    merge_scratch_.push_back(Neighbor{targets[j++], EdgeCount{0, 1}});
                } else {
                    Neighbor n = list[i++];
                    j++;
                    assert(n.count.plain == 0 && n.count.hadamard == 1);
                    n.count.hadamard ^= 1;
                    if (!n.count.empty()) {
                        merge_scratch_.push_back(n);
                    }
                }
            }
            adj_[s].swap(merge_scratch_);
        }
    }
}

size_t ZxDiagram::num_wires() const {
    size_t total = 0;
    for (SpiderId id = 0; id < spiders_.size(); id++) {
        if (!alive_[id]) {
            continue;
        }
        total += loops_[id].total();
        for (const Neighbor &n : adj_[id]) {
            if (n.id > id) {
                total += n.count.total();
            }
        }
    }
    return total;
}

std::vector<SpiderId> ZxDiagram::live_spiders() const {
    std::vector<SpiderId> out;
    out.reserve(live_);
    for (SpiderId id = 0; id < spiders_.size(); id++) {
        if (alive_[id]) {
            out.push_back(id);
        }
    }
    return out;
}

std::vector<Wire> ZxDiagram::wires() const {
    std::vector<Wire> out;
    for (SpiderId id = 0; id < spiders_.size(); id++) {
        if (!alive_[id]) {
            continue;
        }
        for (uint32_t k = 0; k < loops_[id].plain; k++) {
            out.push_back({id, id, EdgeType::kPlain});
        }
        for (uint32_t k = 0; k < loops_[id].hadamard; k++) {
            out.push_back({id, id, EdgeType::kHadamard});
        }
        for (const Neighbor &n : adj_[id]) {
            if (n.id < id) {
                continue;
            }
            for (uint32_t k = 0; k < n.count.plain; k++) {
                out.push_back({id, n.id, EdgeType::kPlain});
            }
            for (uint32_t k = 0; k < n.count.hadamard; k++) {
                out.push_back({id, n.id, EdgeType::kHadamard});
            }
        }
    }
    return out;
}

}  // namespace mptzx
