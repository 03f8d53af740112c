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

#include "mptzx/zx_simplify.h"

#include <algorithm>
#include <array>
#include <optional>

namespace mptzx {

namespace {

enum Pass : size_t { kIdentityPass = 0, kLcPass = 1, kPivotPass = 2, kNumPasses = 3 };

struct Match {
    size_t cost;
    SpiderId v;
};

class Simplifier {
   public:
    Simplifier(ZxDiagram &d, const SimplifyOptions &options) : d_(d), options_(options) {
    }

    SimplifyResult run() {
        SimplifyResult result;
        result.spiders_before = d_.num_spiders();
        log_.step = 0;
        to_graph_like(d_, log());
        for (SpiderId v : d_.live_spiders()) {
            touch(v);
        }

        size_t step = 0;
        while (true) {
            bool fired = false;
            for (size_t pass = 0; pass < kNumPasses; pass++) {
                // Identity and LC rounds repeat until exhausted; a single
                // pivot round runs between them so that spiders left with
                // +-pi/2 phases are complemented before further pivots.
                while (!dirty_[pass].empty()) {
                    log_.step = step + 1;
                    size_t applied = run_round(static_cast<Pass>(pass));
                    if (applied > 0) {
                        step++;
                        result.applications += applied;
                        fired = true;
                    }
                    if (pass == kPivotPass) {
                        break;
                    }
                }
            }
            bool pending = !dirty_[kIdentityPass].empty() || !dirty_[kLcPass].empty() || !dirty_[kPivotPass].empty();
            if (!fired && !pending) {
                break;
            }
        }
        result.rounds = step;
        result.events = std::move(log_.events);
        result.spiders_after = d_.num_spiders();
        return result;
    }

   private:
    RewriteLog *log() {
        return options_.telemetry ? &log_ : nullptr;
    }

    void grow() {
        size_t n = d_.id_bound();
        if (consumed_.size() < n) {
            consumed_.resize(n, 0);
            for (auto &f : flagged_) {
                f.resize(n, 0);
            }
        }
    }

    void touch(SpiderId v) {
        grow();
        for (size_t pass = 0; pass < kNumPasses; pass++) {
            flag(static_cast<Pass>(pass), v);
        }
    }

    void flag(Pass pass, SpiderId v) {
        if (!flagged_[pass][v]) {
            flagged_[pass][v] = 1;
            dirty_[pass].push_back(v);
        }
    }

    bool consumed(SpiderId v) const {
        return consumed_[v] == round_;
    }

    void notify(RewriteRule rule) {
        if (options_.after_rule) {
            options_.after_rule(d_, rule);
        }
    }

    /// Cost (number of neighbors to rewire) of the rewrite that `v` would
    /// trigger in this pass, or nullopt if there is none.
    std::optional<size_t> match_cost(Pass pass, SpiderId v) const {
        switch (pass) {
            case kIdentityPass:
                if (is_identity_candidate(d_, v)) {
                    return 0;
                }
                return std::nullopt;
            case kLcPass:
                if (is_lc_candidate(d_, v)) {
                    return d_.neighbors(v).size();
                }
                return std::nullopt;
            case kPivotPass: {
                SpiderId u = find_pivot_partner(d_, v);
                if (u != v) {
                    return d_.neighbors(v).size();
                }
                std::optional<SpiderId> target = find_boundary_lc_target(d_, v);
                if (target) {
                    return d_.neighbors(*target).size();
                }
                return std::nullopt;
            }
            default:
                return std::nullopt;
        }
    }

    /// Applies the rewrite matched at v, unless it would touch a spider
    /// consumed earlier in this round (then v is deferred). Returns whether a
    /// rewrite was applied; `affected` receives the spiders it changed.
    bool apply(Pass pass, SpiderId v, std::vector<SpiderId> &affected) {
        affected.clear();
        extra_touch_.clear();
        switch (pass) {
            case kIdentityPass: {
                if (!is_identity_candidate(d_, v)) {
                    return false;
                }
                for (const Neighbor &n : d_.neighbors(v)) {
                    affected.push_back(n.id);
                    // A fusion of the two neighbors rewires their own
                    // neighborhoods as well.
                    for (const Neighbor &m : d_.neighbors(n.id)) {
                        extra_touch_.push_back(m.id);
                    }
                }
                remove_identity(d_, v, log());
                notify(RewriteRule::kIdentity);
                return true;
            }
            case kLcPass: {
                if (!is_lc_candidate(d_, v)) {
                    return false;
                }
                for (const Neighbor &n : d_.neighbors(v)) {
                    affected.push_back(n.id);
                }
                local_complement(d_, v, log());
                notify(RewriteRule::kLocalComplement);
                return true;
            }
            case kPivotPass: {
                SpiderId u = find_pivot_partner(d_, v);
                SpiderId first_new = static_cast<SpiderId>(d_.id_bound());
                if (u != v) {
                    if (consumed(u)) {
                        flag(pass, v);
                        return false;
                    }
                    for (SpiderId s : {v, u}) {
                        for (const Neighbor &n : d_.neighbors(s)) {
                            affected.push_back(n.id);
                        }
                    }
                    pivot(d_, v, u, log());
                    notify(RewriteRule::kPivot);
                } else {
                    // A Pauli spider whose neighbors all carry +-pi/2 phases
                    // and touch a boundary.
                    std::optional<SpiderId> target = find_boundary_lc_target(d_, v);
                    if (!target) {
                        return false;
                    }
                    bool blocked = consumed(*target);
                    for (const Neighbor &n : d_.neighbors(*target)) {
                        blocked = blocked || consumed(n.id);
                        affected.push_back(n.id);
                    }
                    if (blocked) {
                        flag(pass, v);
                        return false;
                    }
                    affected.push_back(*target);
                    local_complement(d_, *target, log());
                    notify(RewriteRule::kLocalComplement);
                }
                for (SpiderId w = first_new; w < d_.id_bound(); w++) {
                    affected.push_back(w);
                }
                return true;
            }
            default:
                return false;
        }
    }

    size_t run_round(Pass pass) {
        std::vector<SpiderId> candidates;
        candidates.swap(dirty_[pass]);
        std::sort(candidates.begin(), candidates.end());
        for (SpiderId v : candidates) {
            flagged_[pass][v] = 0;
        }
        round_++;

        size_t applied = 0;
        std::vector<Match> matches;
        for (SpiderId v : candidates) {
            if (!d_.alive(v)) {
                continue;
            }
            if (pass == kIdentityPass && !d_.is_boundary(v) && d_.degree(v) == 0) {
                d_.remove_spider(v);  // disconnected scalar
                notify(RewriteRule::kIdentity);
                continue;
            }
            std::optional<size_t> cost = match_cost(pass, v);
            if (cost) {
                matches.push_back({*cost, v});
            }
        }
        if (matches.empty()) {
            return 0;
        }
        // Cheapest rewrites first; expensive ones wait for later rounds, by
        // which time neighboring eliminations have usually shrunk them.
        std::stable_sort(matches.begin(), matches.end(),
                         [](const Match &a, const Match &b) { return a.cost < b.cost; });
        size_t limit = 2 * matches.front().cost + 2;

        std::vector<SpiderId> affected;
        for (const Match &m : matches) {
            SpiderId v = m.v;
            if (!d_.alive(v)) {
                continue;
            }
            if (m.cost > limit) {
                flag(pass, v);
                continue;
            }
            if (consumed(v)) {
                continue;  // re-flagged by the rewrite that consumed it
            }
            if (!apply(pass, v, affected)) {
                continue;
            }
            applied++;
            grow();
            consumed_[v] = round_;
            for (SpiderId a : affected) {
                if (d_.alive(a)) {
                    consumed_[a] = round_;
                    touch(a);
                }
            }
            for (SpiderId a : extra_touch_) {
                if (d_.alive(a)) {
                    touch(a);
                }
            }
        }
        return applied;
    }

    ZxDiagram &d_;
    const SimplifyOptions &options_;
    RewriteLog log_;
    std::array<std::vector<SpiderId>, kNumPasses> dirty_;
    std::array<std::vector<uint8_t>, kNumPasses> flagged_;
    std::vector<uint64_t> consumed_;
    std::vector<SpiderId> extra_touch_;
    uint64_t round_ = 0;
};

}  // namespace

SimplifyResult clifford_simplify(ZxDiagram &d, const SimplifyOptions &options) {
    return Simplifier(d, options).run();
}

}  // namespace mptzx
