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
#include <optional>
#include <string>
#include <vector>

#include "mptzx/zx_diagram.h"

namespace mptzx {

enum class RewriteRule : uint8_t {
    kFusion,
    kCopy,
    kHopf,
    kIdentity,
    kLocalComplement,
    kPivot,
    kParallelHadamard,
    kSelfLoop,
};

std::string to_string(RewriteRule rule);
RewriteRule parse_rewrite_rule(const std::string &text);

struct RewriteEvent {
    RewriteRule rule;
    size_t step;
    double distance;
    SpiderId a;
    SpiderId b;

    bool operator==(const RewriteEvent &) const = default;
};

/// Collects rewrite events. Rules append to it when one is passed in.
struct RewriteLog {
    size_t step = 0;
    std::vector<RewriteEvent> events;

    void record(RewriteRule rule, const ZxDiagram &d, SpiderId a, SpiderId b) {
        events.push_back({rule, step, distance(d.spider(a).pos, d.spider(b).pos), a, b});
    }
};

// Every rule throws RuleNotApplicable when its precondition fails, leaving
// the diagram untouched.

/// Merges b into a. Both must be non-boundary spiders of the same color
/// joined by at least one plain wire. Hadamard wires between them become
/// Hadamard self-loops and are resolved immediately (phase += 2 each); plain
/// self-loops are dropped.
void fuse(ZxDiagram &d, SpiderId a, SpiderId b, RewriteLog *log = nullptr);

/// Copies a degree-1 Pauli-phase leaf through a hub of the other color. The
/// hub is removed and one copy of the leaf is attached to each remaining hub
/// wire (inheriting the wire's type).
void copy_through(ZxDiagram &d, SpiderId leaf, SpiderId hub, RewriteLog *log = nullptr);

/// Deletes a pair of wires between a and b: two plain wires between
/// opposite colors or two Hadamard wires between equal colors.
void hopf(ZxDiagram &d, SpiderId a, SpiderId b, RewriteLog *log = nullptr);

/// Removes a phase-0 non-boundary spider with exactly two wire ends to two
/// distinct spiders and joins those spiders directly. If that leaves a plain
/// wire between two non-boundary spiders of the same color they are fused
/// (the lower id survives); parallel wire pairs left behind are cancelled.
void remove_identity(ZxDiagram &d, SpiderId v, RewriteLog *log = nullptr);

/// Local complementation on a Z spider with phase +-pi/2 in a graph-like
/// diagram. Wires from v to boundary spiders are first split with phase-0
/// spiders so that v is interior when it is removed.
void local_complement(ZxDiagram &d, SpiderId v, RewriteLog *log = nullptr);

/// Pivot on a Hadamard edge between two Pauli-phase Z spiders in a
/// graph-like diagram. At least one of u, v must have no boundary
/// neighbors; boundary wires of the other are first split with phase-0
/// spiders so the pivot acts on interior spiders only.
void pivot(ZxDiagram &d, SpiderId u, SpiderId v, RewriteLog *log = nullptr);

/// Splits every wire from s to a boundary spider b: s -e- b becomes
/// s -H- w -toggle(e)- b with w a new phase-0 Z spider at s's position.
/// Returns the new spiders.
std::vector<SpiderId> unfuse_boundaries(ZxDiagram &d, SpiderId s);

// Match predicates used by the simplifier.
bool is_identity_candidate(const ZxDiagram &d, SpiderId v);
/// v is a +-pi/2 Z spider whose neighbors are all non-boundary Z spiders
/// joined by single Hadamard wires (or boundaries, if allowed).
bool is_lc_candidate(const ZxDiagram &d, SpiderId v, bool allow_boundary_neighbors = false);
bool is_pivot_candidate(const ZxDiagram &d, SpiderId u, SpiderId v);
/// Lowest-id partner v such that (u, v) is a pivot candidate, or u itself if
/// there is none.
SpiderId find_pivot_partner(const ZxDiagram &d, SpiderId u);
/// A spider with no boundary neighbors, a Pauli phase and no pivot partner
/// can only be reached by complementing one of its +-pi/2 neighbors, which
/// then all touch a boundary. Given either such a spider or one of those
/// neighbors, returns the spider to complement (for a Pauli u, its lowest
/// such neighbor).
std::optional<SpiderId> find_boundary_lc_target(const ZxDiagram &d, SpiderId u);

/// Brings any diagram to graph-like form: only Z spiders, non-boundary
/// spiders joined by single Hadamard wires, no self-loops.
void to_graph_like(ZxDiagram &d, RewriteLog *log = nullptr);

/// Structural check of the graph-like conditions.
bool is_graph_like(const ZxDiagram &d, std::string *why = nullptr);

}  // namespace mptzx
