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
#include <span>
#include <vector>

namespace mptzx {

enum class SpiderColor : uint8_t { kZ, kX };
enum class EdgeType : uint8_t { kPlain, kHadamard };
enum class BoundaryKind : uint8_t { kNone, kInput, kOutput };

using SpiderId = uint32_t;

/// Space-time location (chain site, time) used for rewrite telemetry.
struct Position {
    double site = 0.0;
    double time = 0.0;
};

/// Euclidean distance in the (site, time) plane.
double distance(const Position &a, const Position &b);

/// Phases are integers mod 4 in units of pi/2.
inline int normalize_phase(int phase) {
    return ((phase % 4) + 4) % 4;
}
inline bool is_pauli_phase(int phase) {
    return phase == 0 || phase == 2;
}
inline bool is_proper_clifford_phase(int phase) {
    return phase == 1 || phase == 3;
}

struct Spider {
    SpiderColor color = SpiderColor::kZ;
    int phase = 0;
    Position pos;
    BoundaryKind boundary = BoundaryKind::kNone;
    uint32_t boundary_index = 0;

    bool is_boundary() const {
        return boundary != BoundaryKind::kNone;
    }
};

/// Number of parallel wires of each type between two spiders.
struct EdgeCount {
    uint32_t plain = 0;
    uint32_t hadamard = 0;

    bool empty() const {
        return plain == 0 && hadamard == 0;
    }
    uint32_t total() const {
        return plain + hadamard;
    }
    uint32_t &of(EdgeType t) {
        return t == EdgeType::kPlain ? plain : hadamard;
    }
    uint32_t of(EdgeType t) const {
        return t == EdgeType::kPlain ? plain : hadamard;
    }
    bool operator==(const EdgeCount &) const = default;
};

struct Neighbor {
    SpiderId id;
    EdgeCount count;
};

struct Wire {
    SpiderId a;
    SpiderId b;
    EdgeType type;
    bool operator==(const Wire &) const = default;
};

inline EdgeType toggle(EdgeType t) {
    return t == EdgeType::kPlain ? EdgeType::kHadamard : EdgeType::kPlain;
}

/// Undirected multigraph of spiders. Boundary spiders are phase-0 Z spiders
/// with one open leg; they carry the diagram's inputs and outputs. Spider ids
/// are never reused, so removed spiders leave holes in the id range.
///
/// Adjacency lists are kept sorted by neighbor id; self-loops are counted
/// separately.
class ZxDiagram {
   public:
    SpiderId add_spider(SpiderColor color, int phase, Position pos);
    /// Appends a boundary spider to the inputs or outputs list.
    SpiderId add_boundary(BoundaryKind kind, Position pos);
    void add_wire(SpiderId a, SpiderId b, EdgeType type = EdgeType::kPlain, uint32_t count = 1);
    /// Removes `count` wires of the given type; throws if fewer exist.
    void remove_wire(SpiderId a, SpiderId b, EdgeType type, uint32_t count = 1);
    /// Removes every wire between a and b (a != b).
    void remove_all_wires(SpiderId a, SpiderId b);
    void remove_spider(SpiderId id);

    bool alive(SpiderId id) const {
        return id < alive_.size() && alive_[id];
    }
    const Spider &spider(SpiderId id) const {
        return spiders_[id];
    }
    bool is_boundary(SpiderId id) const {
        return spiders_[id].is_boundary();
    }
    void set_phase(SpiderId id, int phase) {
        spiders_[id].phase = normalize_phase(phase);
    }
    void add_phase(SpiderId id, int delta) {
        spiders_[id].phase = normalize_phase(spiders_[id].phase + delta);
    }
    void set_color(SpiderId id, SpiderColor color) {
        spiders_[id].color = color;
    }

    std::span<const Neighbor> neighbors(SpiderId id) const {
        return adj_[id];
    }
    EdgeCount wires_between(SpiderId a, SpiderId b) const;
    EdgeCount self_loops(SpiderId id) const {
        return loops_[id];
    }
    void clear_self_loops(SpiderId id) {
        loops_[id] = {};
    }
    /// Wire ends incident to the spider; a self-loop counts twice.
    size_t degree(SpiderId id) const;

    /// Swaps plain and Hadamard wires at every non-loop wire of `id`.
    void toggle_incident_edge_types(SpiderId id);

    /// For every unordered pair of spiders taken from two different groups,
    /// toggles a single Hadamard wire (adds one if absent, removes it if
    /// present). Groups must be disjoint and hold live spiders connected to
    /// each other only by single Hadamard wires.
    void toggle_hadamard_between_groups(const std::vector<std::vector<SpiderId>> &groups);

    size_t id_bound() const {
        return spiders_.size();
    }
    size_t num_spiders() const {
        return live_;
    }
    /// Live spiders that are not boundaries.
    size_t num_internal_spiders() const {
        return live_ - inputs_.size() - outputs_.size();
    }
    size_t num_wires() const;
    std::vector<SpiderId> live_spiders() const;
    /// Every wire once, expanded by multiplicity, ordered by (a, b, type).
    std::vector<Wire> wires() const;

    const std::vector<SpiderId> &inputs() const {
        return inputs_;
    }
    const std::vector<SpiderId> &outputs() const {
        return outputs_;
    }

   private:
    Neighbor *find_neighbor(SpiderId a, SpiderId b);
    void adjust_entry(SpiderId a, SpiderId b, EdgeType type, int64_t delta);

    std::vector<Spider> spiders_;
    std::vector<uint8_t> alive_;
    std::vector<std::vector<Neighbor>> adj_;
    std::vector<EdgeCount> loops_;
    std::vector<SpiderId> inputs_;
    std::vector<SpiderId> outputs_;
    size_t live_ = 0;
    std::vector<Neighbor> merge_scratch_;
    std::vector<SpiderId> group_scratch_;
};

}  // namespace mptzx
