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

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mptzx/zx_diagram.h"
#include "mptzx/zx_rules.h"

namespace mptzx {

/// Diagram dump:
///   {"spiders": [{"id", "color": "Z"|"X", "phase", "site", "time",
///                 "boundary": "none"|"input"|"output"}, ...],
///    "wires": [[a, b, "plain"|"hadamard"], ...],
///    "inputs": [ids], "outputs": [ids]}
/// Spiders and wires are listed in ascending id order, so equal diagrams give
/// identical dumps.
nlohmann::json diagram_to_json(const ZxDiagram &d);

/// Rebuilds a diagram keeping the dumped spider ids. Throws ParseError.
ZxDiagram diagram_from_json(const nlohmann::json &dump);

/// Event log CSV with header "step,rule,distance,id_a,id_b".
void write_event_csv(std::ostream &out, const std::vector<RewriteEvent> &events);

}  // namespace mptzx
