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
#include <functional>
#include <vector>

#include "mptzx/zx_rules.h"

namespace mptzx {

struct SimplifyOptions {
    bool telemetry = false;
    /// Invoked after every identity removal, local complementation and pivot
    /// (and the scalar-spider removals in between).
    std::function<void(const ZxDiagram &, RewriteRule)> after_rule;
};

struct SimplifyResult {
    std::vector<RewriteEvent> events;
    /// Number of rounds that applied at least one rule. Round k's events
    /// carry step k; graph-like normalization events carry step 0.
    size_t rounds = 0;
    size_t applications = 0;
    size_t spiders_before = 0;
    size_t spiders_after = 0;
};

/// Clifford simplification with fixed boundaries: brings the diagram to
/// graph-like form, then repeats passes of identity removal, local
/// complementation and pivoting until no rule applies.
///
/// Each pass runs rounds of one rule. A round collects the matches among
/// spiders changed since they were last examined, orders them by cost (the
/// degree of the spider to be removed or complemented, ties by id) and
/// applies those with cost at most 2 * min_cost + 2 that do not touch a
/// spider already rewritten or neighboring a rewrite in the same round. The
/// remaining matches are rescanned in the next round.
SimplifyResult clifford_simplify(ZxDiagram &d, const SimplifyOptions &options = {});

}  // namespace mptzx
