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

#include "mptzx/zx_io.h"

#include <cstdio>
#include <map>
#include <tuple>
#include <ostream>

#include "mptzx/errors.h"

namespace mptzx {

using nlohmann::json;

namespace {

const char *boundary_name(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::kInput:
            return "input";
        case BoundaryKind::kOutput:
            return "output";
        default:
            return "none";
    }
}

const json &field(const json &obj, const char *key, const std::string &where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(where + "/" + key, "missing field");
    }
    return obj.at(key);
}

uint32_t id_value(const json &v, const std::string &where) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0x7fffffff) {
        throw ParseError(where, "expected a spider id");
    }
    return v.get<uint32_t>();
}

double number_value(const json &v, const std::string &where) {
    if (!v.is_number()) {
        throw ParseError(where, "expected a number");
    }
    return v.get<double>();
}

}  // namespace

json diagram_to_json(const ZxDiagram &d) {
    json spiders = json::array();
    for (SpiderId v : d.live_spiders()) {
        const Spider &s = d.spider(v);
        spiders.push_back(json{{"id", v},
                               {"color", s.color == SpiderColor::kZ ? "Z" : "X"},
                               {"phase", s.phase},
                               {"site", s.pos.site},
                               {"time", s.pos.time},
                               {"boundary", boundary_name(s.boundary)}});
    }
    json wires = json::array();
    for (const Wire &w : d.wires()) {
        wires.push_back(json::array({w.a, w.b, w.type == EdgeType::kPlain ? "plain" : "hadamard"}));
    }
    return json{{"spiders", std::move(spiders)},
                {"wires", std::move(wires)},
                {"inputs", d.inputs()},
                {"outputs", d.outputs()}};
}

ZxDiagram diagram_from_json(const json &dump) {
    if (!dump.is_object()) {
        throw ParseError("", "diagram dump must be a JSON object");
    }
    const json &spiders = field(dump, "spiders", "");
    const json &wires = field(dump, "wires", "");
    const json &inputs = field(dump, "inputs", "");
    const json &outputs = field(dump, "outputs", "");
    for (const char *key : {"spiders", "wires", "inputs", "outputs"}) {
        if (!dump.at(key).is_array()) {
            throw ParseError(std::string("/") + key, "expected an array");
        }
    }

    struct Entry {
        SpiderColor color;
        int phase;
        Position pos;
        BoundaryKind boundary;
    };
    std::map<SpiderId, Entry> entries;
    for (size_t i = 0; i < spiders.size(); i++) {
        std::string where = "/spiders/" + std::to_string(i);
        const json &s = spiders[i];
        SpiderId id = id_value(field(s, "id", where), where + "/id");
        std::string color = field(s, "color", where).is_string() ? s.at("color").get<std::string>() : "";
        if (color != "Z" && color != "X") {
            throw ParseError(where + "/color", "expected \"Z\" or \"X\"");
        }
        const json &phase = field(s, "phase", where);
        if (!phase.is_number_integer()) {
            throw ParseError(where + "/phase", "expected an integer number of quarter turns");
        }
        std::string boundary = field(s, "boundary", where).is_string() ? s.at("boundary").get<std::string>() : "";
        BoundaryKind kind;
        if (boundary == "none") {
            kind = BoundaryKind::kNone;
        } else if (boundary == "input") {
            kind = BoundaryKind::kInput;
        } else if (boundary == "output") {
            kind = BoundaryKind::kOutput;
        } else {
            throw ParseError(where + "/boundary", "expected \"none\", \"input\" or \"output\"");
        }
        Position pos{number_value(field(s, "site", where), where + "/site"),
                     number_value(field(s, "time", where), where + "/time")};
        if (!entries.emplace(id, Entry{color == "Z" ? SpiderColor::kZ : SpiderColor::kX, phase.get<int>(), pos, kind})
                 .second) {
            throw ParseError(where + "/id", "duplicate spider id " + std::to_string(id));
        }
    }

    // Boundary spiders are created in input/output order so their indices
    // match the lists; holes in the id range become dead placeholders.
    std::vector<SpiderId> order_in, order_out;
    for (auto [list, kind, name, order] : {std::tuple{&inputs, BoundaryKind::kInput, "inputs", &order_in},
                                           std::tuple{&outputs, BoundaryKind::kOutput, "outputs", &order_out}}) {
        for (size_t k = 0; k < list->size(); k++) {
            std::string where = std::string("/") + name + "/" + std::to_string(k);
            SpiderId id = id_value((*list)[k], where);
            auto it = entries.find(id);
            if (it == entries.end() || it->second.boundary != kind) {
                throw ParseError(where, "not a " + std::string(kind == BoundaryKind::kInput ? "input" : "output") +
                                            " boundary spider");
            }
            order->push_back(id);
        }
    }
    size_t n_boundary = 0;
    for (const auto &[id, e] : entries) {
        n_boundary += e.boundary != BoundaryKind::kNone;
    }
    if (n_boundary != order_in.size() + order_out.size()) {
        throw ParseError("/inputs", "boundary spiders missing from the input/output lists");
    }
    for (size_t k = 1; k < order_in.size(); k++) {
        if (order_in[k] <= order_in[k - 1]) {
            throw ParseError("/inputs", "boundary ids must increase along the list");
        }
    }
    for (size_t k = 1; k < order_out.size(); k++) {
        if (order_out[k] <= order_out[k - 1]) {
            throw ParseError("/outputs", "boundary ids must increase along the list");
        }
    }

    ZxDiagram d;
    std::vector<SpiderId> placeholders;
    for (const auto &[id, e] : entries) {
        while (d.id_bound() < id) {
            placeholders.push_back(d.add_spider(SpiderColor::kZ, 0, {}));
        }
        SpiderId got = e.boundary == BoundaryKind::kNone ? d.add_spider(e.color, e.phase, e.pos)
                                                         : d.add_boundary(e.boundary, e.pos);
        if (e.boundary != BoundaryKind::kNone && (e.phase != 0 || e.color != SpiderColor::kZ)) {
            throw ParseError("/spiders", "boundary spider " + std::to_string(id) + " must be a phase-0 Z spider");
        }
        (void)got;
    }
    for (SpiderId p : placeholders) {
        d.remove_spider(p);
    }
    for (size_t i = 0; i < wires.size(); i++) {
        std::string where = "/wires/" + std::to_string(i);
        const json &w = wires[i];
        if (!w.is_array() || w.size() != 3 || !w[2].is_string()) {
            throw ParseError(where, "expected [a, b, \"plain\"|\"hadamard\"]");
        }
        SpiderId a = id_value(w[0], where + "/0");
        SpiderId b = id_value(w[1], where + "/1");
        if (!d.alive(a) || !d.alive(b)) {
            throw ParseError(where, "wire references an unknown spider");
        }
        std::string type = w[2].get<std::string>();
        if (type != "plain" && type != "hadamard") {
            throw ParseError(where + "/2", "unknown wire type '" + type + "'");
        }
        d.add_wire(a, b, type == "plain" ? EdgeType::kPlain : EdgeType::kHadamard);
    }
    for (SpiderId b : order_in) {
        if (d.degree(b) != 1) {
            throw ParseError("/inputs", "boundary spider " + std::to_string(b) + " must have exactly one wire");
        }
    }
    for (SpiderId b : order_out) {
        if (d.degree(b) != 1) {
            throw ParseError("/outputs", "boundary spider " + std::to_string(b) + " must have exactly one wire");
        }
    }
    return d;
}

void write_event_csv(std::ostream &out, const std::vector<RewriteEvent> &events) {
    out << "step,rule,distance,id_a,id_b\n";
    char buf[64];
    for (const RewriteEvent &e : events) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.distance);
        out << e.step << ',' << to_string(e.rule) << ',' << buf << ',' << e.a << ',' << e.b << '\n';
    }
}

}  // namespace mptzx
