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

#include "mptzx/zx_rules.h"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "mptzx/errors.h"

namespace mptzx {

namespace {

constexpr std::array<const char *, 8> kRuleNames = {
    "fusion", "copy", "hopf", "identity", "local_complement", "pivot", "parallel_hadamard", "self_loop",
};

void require(bool condition, const char *rule, const char *what) {
    if (!condition) {
        throw RuleNotApplicable(std::string(rule) + ": " + what);
    }
}

bool is_nonboundary_z(const ZxDiagram &d, SpiderId id) {
    return d.alive(id) && !d.is_boundary(id) && d.spider(id).color == SpiderColor::kZ;
}

bool is_single_hadamard(const EdgeCount &c) {
    return c.plain == 0 && c.hadamard == 1;
}

/// Drops plain self-loops and turns each Hadamard self-loop into a pi phase.
void resolve_self_loops(ZxDiagram &d, SpiderId v, RewriteLog *log) {
    EdgeCount loops = d.self_loops(v);
    if (loops.empty()) {
        return;
    }
    d.clear_self_loops(v);
    d.add_phase(v, 2 * static_cast<int>(loops.hadamard % 2));
    if (log) {
        for (uint32_t k = 0; k < loops.total(); k++) {
            log->record(RewriteRule::kSelfLoop, d, v, v);
        }
    }
}

/// Cancels pairs of parallel wires between v and its neighbors: Hadamard
/// pairs between equal colors, plain pairs between opposite colors.
void cancel_parallel_pairs(ZxDiagram &d, SpiderId v, RewriteLog *log) {
    if (d.is_boundary(v)) {
        return;
    }
    std::vector<std::pair<SpiderId, EdgeCount>> work;
    for (const Neighbor &n : d.neighbors(v)) {
        if (!d.is_boundary(n.id) && n.count.total() >= 2) {
            work.emplace_back(n.id, n.count);
        }
    }
    for (auto [n, count] : work) {
        bool same = d.spider(n).color == d.spider(v).color;
        EdgeType type = same ? EdgeType::kHadamard : EdgeType::kPlain;
        uint32_t pairs = count.of(type) / 2;
        if (pairs == 0) {
            continue;
        }
        if (log) {
            for (uint32_t k = 0; k < pairs; k++) {
                log->record(same ? RewriteRule::kParallelHadamard : RewriteRule::kHopf, d, v, n);
            }
        }
        d.remove_wire(v, n, type, 2 * pairs);
    }
}

}  // namespace

std::string to_string(RewriteRule rule) {
    return kRuleNames[static_cast<size_t>(rule)];
}

RewriteRule parse_rewrite_rule(const std::string &text) {
    for (size_t k = 0; k < kRuleNames.size(); k++) {
        if (text == kRuleNames[k]) {
            return static_cast<RewriteRule>(k);
        }
    }
    throw std::invalid_argument("unknown rewrite rule '" + text + "'");
}

void fuse(ZxDiagram &d, SpiderId a, SpiderId b, RewriteLog *log) {
    require(a != b && d.alive(a) && d.alive(b), "fusion", "needs two distinct live spiders");
    require(!d.is_boundary(a) && !d.is_boundary(b), "fusion", "boundary spiders cannot fuse");
    require(d.spider(a).color == d.spider(b).color, "fusion", "colors differ");
    EdgeCount between = d.wires_between(a, b);
    require(between.plain >= 1, "fusion", "no plain wire between the spiders");
    if (log) {
        log->record(RewriteRule::kFusion, d, a, b);
    }

    d.remove_all_wires(a, b);
    EdgeCount b_loops = d.self_loops(b);
    d.add_wire(a, a, EdgeType::kPlain, between.plain - 1 + b_loops.plain);
    d.add_wire(a, a, EdgeType::kHadamard, between.hadamard + b_loops.hadamard);
    std::vector<Neighbor> moved(d.neighbors(b).begin(), d.neighbors(b).end());
    for (const Neighbor &n : moved) {
        d.add_wire(a, n.id, EdgeType::kPlain, n.count.plain);
        d.add_wire(a, n.id, EdgeType::kHadamard, n.count.hadamard);
    }
    d.add_phase(a, d.spider(b).phase);
    d.remove_spider(b);
    resolve_self_loops(d, a, log);
}

void copy_through(ZxDiagram &d, SpiderId leaf, SpiderId hub, RewriteLog *log) {
    require(leaf != hub && d.alive(leaf) && d.alive(hub), "copy", "needs two distinct live spiders");
    require(!d.is_boundary(leaf) && !d.is_boundary(hub), "copy", "boundary spiders cannot take part");
    require(d.spider(leaf).color != d.spider(hub).color, "copy", "leaf and hub have the same color");
    require(is_pauli_phase(d.spider(leaf).phase), "copy", "leaf phase is not 0 or pi");
    require(d.degree(leaf) == 1 && d.wires_between(leaf, hub).plain == 1, "copy",
            "leaf must have a single plain wire to the hub");
    require(d.self_loops(hub).empty(), "copy", "hub has self-loops");
    if (log) {
        log->record(RewriteRule::kCopy, d, leaf, hub);
    }

    Spider proto = d.spider(leaf);
    d.remove_spider(leaf);
    std::vector<Neighbor> legs(d.neighbors(hub).begin(), d.neighbors(hub).end());
    d.remove_spider(hub);
    for (const Neighbor &n : legs) {
        for (EdgeType type : {EdgeType::kPlain, EdgeType::kHadamard}) {
            for (uint32_t k = 0; k < n.count.of(type); k++) {
                SpiderId c = d.add_spider(proto.color, proto.phase, proto.pos);
                d.add_wire(c, n.id, type);
            }
        }
    }
}

void hopf(ZxDiagram &d, SpiderId a, SpiderId b, RewriteLog *log) {
    require(a != b && d.alive(a) && d.alive(b), "hopf", "needs two distinct live spiders");
    require(!d.is_boundary(a) && !d.is_boundary(b), "hopf", "boundary spiders cannot take part");
    bool same = d.spider(a).color == d.spider(b).color;
    EdgeType type = same ? EdgeType::kHadamard : EdgeType::kPlain;
    require(d.wires_between(a, b).of(type) >= 2, "hopf",
            same ? "equal colors need two Hadamard wires" : "opposite colors need two plain wires");
    if (log) {
        log->record(same ? RewriteRule::kParallelHadamard : RewriteRule::kHopf, d, a, b);
    }
    d.remove_wire(a, b, type, 2);
}

bool is_identity_candidate(const ZxDiagram &d, SpiderId v) {
    if (!d.alive(v) || d.is_boundary(v) || d.spider(v).phase != 0 || !d.self_loops(v).empty()) {
        return false;
    }
    auto nbrs = d.neighbors(v);
    return nbrs.size() == 2 && nbrs[0].count.total() == 1 && nbrs[1].count.total() == 1;
}

void remove_identity(ZxDiagram &d, SpiderId v, RewriteLog *log) {
    require(is_identity_candidate(d, v), "identity", "spider is not a phase-0 wire between two spiders");
    auto nbrs = d.neighbors(v);
    SpiderId n1 = nbrs[0].id;
    SpiderId n2 = nbrs[1].id;
    EdgeType e1 = nbrs[0].count.plain ? EdgeType::kPlain : EdgeType::kHadamard;
    EdgeType e2 = nbrs[1].count.plain ? EdgeType::kPlain : EdgeType::kHadamard;
    if (log) {
        log->record(RewriteRule::kIdentity, d, n1, n2);
    }
    d.remove_spider(v);
    EdgeType joined = e1 == e2 ? EdgeType::kPlain : EdgeType::kHadamard;
    d.add_wire(n1, n2, joined);

    if (d.is_boundary(n1) || d.is_boundary(n2)) {
        return;
    }
    bool same = d.spider(n1).color == d.spider(n2).color;
    if (same && d.wires_between(n1, n2).plain >= 1) {
        fuse(d, n1, n2, nullptr);
        cancel_parallel_pairs(d, n1, log);
    } else {
        cancel_parallel_pairs(d, n1, log);
    }
}

bool is_lc_candidate(const ZxDiagram &d, SpiderId v, bool allow_boundary_neighbors) {
    if (!is_nonboundary_z(d, v) || !is_proper_clifford_phase(d.spider(v).phase) || !d.self_loops(v).empty()) {
        return false;
    }
    for (const Neighbor &n : d.neighbors(v)) {
        if (d.is_boundary(n.id)) {
            if (!allow_boundary_neighbors || n.count.total() != 1) {
                return false;
            }
        } else if (d.spider(n.id).color != SpiderColor::kZ || !is_single_hadamard(n.count)) {
            return false;
        }
    }
    return true;
}

std::vector<SpiderId> unfuse_boundaries(ZxDiagram &d, SpiderId s) {
    std::vector<std::pair<SpiderId, EdgeType>> targets;
    for (const Neighbor &n : d.neighbors(s)) {
        if (d.is_boundary(n.id)) {
            targets.emplace_back(n.id, n.count.plain ? EdgeType::kPlain : EdgeType::kHadamard);
        }
    }
    std::vector<SpiderId> created;
    Position pos = d.spider(s).pos;
    for (auto [b, e] : targets) {
        SpiderId w = d.add_spider(SpiderColor::kZ, 0, pos);
        d.remove_wire(s, b, e);
        d.add_wire(b, w, toggle(e));
        d.add_wire(w, s, EdgeType::kHadamard);
        created.push_back(w);
    }
    return created;
}

void local_complement(ZxDiagram &d, SpiderId v, RewriteLog *log) {
    require(is_lc_candidate(d, v, true), "local_complement", "spider is not a +-pi/2 spider in graph-like form");
    if (log) {
        auto nbrs = d.neighbors(v);
        log->record(RewriteRule::kLocalComplement, d, v, nbrs.empty() ? v : nbrs.front().id);
    }
    unfuse_boundaries(d, v);
    std::vector<SpiderId> nbrs;
    for (const Neighbor &n : d.neighbors(v)) {
        nbrs.push_back(n.id);
    }
    int alpha = d.spider(v).phase;
    for (SpiderId n : nbrs) {
        d.add_phase(n, -alpha);
    }
    d.remove_spider(v);
    std::vector<std::vector<SpiderId>> groups;
    groups.reserve(nbrs.size());
    for (SpiderId n : nbrs) {
        groups.push_back({n});
    }
    d.toggle_hadamard_between_groups(groups);
}

namespace {

/// Checks one side of a pivot: s is a non-boundary Pauli Z spider and all
/// its neighbors except `other` are Z spiders reached by single Hadamard
/// wires, or boundaries. Returns the number of boundary neighbors, or -1 if
/// the side is not admissible.
int pivot_side_boundaries(const ZxDiagram &d, SpiderId s, SpiderId other) {
    if (!is_nonboundary_z(d, s) || !is_pauli_phase(d.spider(s).phase) || !d.self_loops(s).empty()) {
        return -1;
    }
    int boundaries = 0;
    for (const Neighbor &n : d.neighbors(s)) {
        if (n.id == other) {
            continue;
        }
        if (d.is_boundary(n.id)) {
            if (n.count.total() != 1) {
                return -1;
            }
            boundaries++;
        } else if (d.spider(n.id).color != SpiderColor::kZ || !is_single_hadamard(n.count)) {
            return -1;
        }
    }
    return boundaries;
}

bool has_boundary_neighbor(const ZxDiagram &d, SpiderId s) {
    for (const Neighbor &n : d.neighbors(s)) {
        if (d.is_boundary(n.id)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_pivot_candidate(const ZxDiagram &d, SpiderId u, SpiderId v) {
    if (u == v || !d.alive(u) || !d.alive(v) || !is_single_hadamard(d.wires_between(u, v))) {
        return false;
    }
    int bu = pivot_side_boundaries(d, u, v);
    if (bu < 0) {
        return false;
    }
    int bv = pivot_side_boundaries(d, v, u);
    return bv >= 0 && (bu == 0 || bv == 0);
}

SpiderId find_pivot_partner(const ZxDiagram &d, SpiderId u) {
    if (!is_nonboundary_z(d, u) || !is_pauli_phase(d.spider(u).phase) || !d.self_loops(u).empty()) {
        return u;
    }
    // u's own side does not depend on the partner beyond excluding it, and
    // every admissible partner is itself an admissible neighbor.
    int bu = -1;
    for (const Neighbor &n : d.neighbors(u)) {
        if (is_single_hadamard(n.count) && is_nonboundary_z(d, n.id)) {
            bu = pivot_side_boundaries(d, u, n.id);
            break;
        }
    }
    if (bu < 0) {
        return u;
    }
    for (const Neighbor &n : d.neighbors(u)) {
        if (!is_single_hadamard(n.count) || !is_nonboundary_z(d, n.id) || !is_pauli_phase(d.spider(n.id).phase)) {
            continue;
        }
        int bv = pivot_side_boundaries(d, n.id, u);
        if (bv >= 0 && (bu == 0 || bv == 0)) {
            return n.id;
        }
    }
    return u;
}

std::optional<SpiderId> find_boundary_lc_target(const ZxDiagram &d, SpiderId u) {
    if (!is_nonboundary_z(d, u)) {
        return std::nullopt;
    }
    auto stuck = [&](SpiderId v) {
        return is_nonboundary_z(d, v) && is_pauli_phase(d.spider(v).phase) && !d.neighbors(v).empty() &&
               pivot_side_boundaries(d, v, v) == 0 && find_pivot_partner(d, v) == v;
    };
    if (is_pauli_phase(d.spider(u).phase)) {
        if (stuck(u)) {
            for (const Neighbor &n : d.neighbors(u)) {
                if (is_lc_candidate(d, n.id, true)) {
                    return n.id;
                }
            }
        }
        return std::nullopt;
    }
    if (!has_boundary_neighbor(d, u) || !is_lc_candidate(d, u, true)) {
        return std::nullopt;
    }
    for (const Neighbor &n : d.neighbors(u)) {
        if (!d.is_boundary(n.id) && stuck(n.id)) {
            return u;
        }
    }
    return std::nullopt;
}

void pivot(ZxDiagram &d, SpiderId u, SpiderId v, RewriteLog *log) {
    require(is_pivot_candidate(d, u, v), "pivot", "not a Hadamard edge between Pauli spiders in graph-like form");
    if (log) {
        log->record(RewriteRule::kPivot, d, u, v);
    }
    unfuse_boundaries(d, u);
    unfuse_boundaries(d, v);

    std::vector<SpiderId> nu, nv, shared, only_u, only_v;
    for (const Neighbor &n : d.neighbors(u)) {
        if (n.id != v) {
            nu.push_back(n.id);
        }
    }
    for (const Neighbor &n : d.neighbors(v)) {
        if (n.id != u) {
            nv.push_back(n.id);
        }
    }
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(shared));
    std::set_difference(nu.begin(), nu.end(), shared.begin(), shared.end(), std::back_inserter(only_u));
    std::set_difference(nv.begin(), nv.end(), shared.begin(), shared.end(), std::back_inserter(only_v));

    int pu = d.spider(u).phase;
    int pv = d.spider(v).phase;
    for (SpiderId x : only_u) {
        d.add_phase(x, pv);
    }
    for (SpiderId x : only_v) {
        d.add_phase(x, pu);
    }
    for (SpiderId x : shared) {
        d.add_phase(x, pu + pv + 2);
    }
    d.remove_spider(u);
    d.remove_spider(v);
    d.toggle_hadamard_between_groups({only_u, only_v, shared});
}

void to_graph_like(ZxDiagram &d, RewriteLog *log) {
    size_t bound = d.id_bound();
    for (SpiderId v = 0; v < bound; v++) {
        if (d.alive(v) && !d.is_boundary(v) && d.spider(v).color == SpiderColor::kX) {
            d.toggle_incident_edge_types(v);
            d.set_color(v, SpiderColor::kZ);
        }
    }
    for (SpiderId v = 0; v < bound; v++) {
        if (!d.alive(v) || d.is_boundary(v)) {
            continue;
        }
        while (true) {
            SpiderId partner = v;
            for (const Neighbor &n : d.neighbors(v)) {
                if (n.count.plain > 0 && !d.is_boundary(n.id)) {
                    partner = n.id;
                    break;
                }
            }
            if (partner == v) {
                break;
            }
            fuse(d, v, partner, log);
        }
    }
    for (SpiderId v = 0; v < bound; v++) {
        if (d.alive(v) && !d.is_boundary(v)) {
            resolve_self_loops(d, v, log);
            cancel_parallel_pairs(d, v, log);
        }
    }
}

bool is_graph_like(const ZxDiagram &d, std::string *why) {
    auto fail = [&](const std::string &msg) {
        if (why) {
            *why = msg;
        }
        return false;
    };
    for (SpiderId v : d.live_spiders()) {
        const Spider &s = d.spider(v);
        std::string tag = "spider " + std::to_string(v);
        if (s.color != SpiderColor::kZ) {
            return fail(tag + " is not a Z spider");
        }
        if (!d.self_loops(v).empty()) {
            return fail(tag + " has a self-loop");
        }
        if (s.is_boundary() && (s.phase != 0 || d.degree(v) != 1)) {
            return fail(tag + " is a malformed boundary");
        }
        for (const Neighbor &n : d.neighbors(v)) {
            if (n.count.total() != 1) {
                return fail(tag + " has parallel wires to " + std::to_string(n.id));
            }
            if (!s.is_boundary() && !d.is_boundary(n.id) && n.count.hadamard != 1) {
                return fail(tag + " has a plain wire to " + std::to_string(n.id));
            }
        }
    }
    return true;
}

}  // namespace mptzx
