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

#include "mptzx/crossing.h"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "mptzx/errors.h"

namespace mptzx {

namespace {

struct Candidate {
    double x;
    double err;
    double slope;
};

std::optional<double> lookup(const std::vector<CurvePoint> &curve, double x, double *err) {
    for (const CurvePoint &pt : curve) {
        if (std::abs(pt.x - x) <= 1e-12 * std::max(1.0, std::abs(x))) {
            *err = pt.err;
            return pt.y;
        }
    }
    return std::nullopt;
}

PairCrossing cross_pair(size_t na, const std::vector<CurvePoint> &a, size_t nb, const std::vector<CurvePoint> &b) {
    std::string name = "N=" + std::to_string(na) + " and N=" + std::to_string(nb);
    std::vector<double> xs, diff, sigma;
    for (const CurvePoint &pt : a) {
        double eb = 0;
        std::optional<double> yb = lookup(b, pt.x, &eb);
        if (yb) {
            xs.push_back(pt.x);
            diff.push_back(*yb - pt.y);
            sigma.push_back(std::hypot(pt.err, eb));
        }
    }
    if (xs.size() < 2) {
        throw NoCrossingError("curves for " + name + " share fewer than two grid points");
    }
    bool all_zero = true;
    for (double dv : diff) {
        all_zero = all_zero && dv == 0;
    }
    if (all_zero) {
        throw NoCrossingError("curves for " + name + " coincide on the whole grid");
    }

    std::optional<Candidate> best;
    auto consider = [&](const Candidate &c) {
        if (!best || c.slope > best->slope) {
            best = c;
        }
    };
    for (size_t i = 0; i + 1 < xs.size(); i++) {
        double h = xs[i + 1] - xs[i];
        double d0 = diff[i], d1 = diff[i + 1];
        if (d0 * d1 < 0) {
            double denom = d0 - d1;
            double x = xs[i] + h * d0 / denom;
            double g0 = h * (-d1) / (denom * denom);
            double g1 = h * d0 / (denom * denom);
            double err = std::hypot(g0 * sigma[i], g1 * sigma[i + 1]);
            consider({x, err, std::abs(denom) / h});
        }
    }
    for (size_t i = 1; i + 1 < xs.size(); i++) {
        if (diff[i] == 0 && diff[i - 1] * diff[i + 1] < 0) {
            double slope = std::abs(diff[i + 1] - diff[i - 1]) / (xs[i + 1] - xs[i - 1]);
            double err = slope > 0 ? sigma[i] / slope : 0;
            consider({xs[i], err, slope});
        }
    }
    if (!best) {
        throw NoCrossingError("curves for " + name + " do not cross on their shared grid");
    }
    return PairCrossing{na, nb, best->x, best->err};
}

}  // namespace

CrossingEstimate find_crossing(const CurveSet &curves) {
    if (curves.size() < 2) {
        throw std::invalid_argument("find_crossing needs curves for at least two sizes");
    }
    CrossingEstimate est;
    auto prev = curves.begin();
    for (auto it = std::next(curves.begin()); it != curves.end(); ++it, ++prev) {
        est.pairs.push_back(cross_pair(prev->first, prev->second, it->first, it->second));
    }

    bool have_errors = true;
    for (const PairCrossing &pc : est.pairs) {
        have_errors = have_errors && pc.err > 0;
    }
    double sw = 0, swx = 0;
    for (const PairCrossing &pc : est.pairs) {
        double w = have_errors ? 1.0 / (pc.err * pc.err) : 1.0;
        sw += w;
        swx += w * pc.x;
    }
    est.x = swx / sw;
    double spread = 0;
    for (const PairCrossing &pc : est.pairs) {
        double w = have_errors ? 1.0 / (pc.err * pc.err) : 1.0;
        spread += w * (pc.x - est.x) * (pc.x - est.x);
    }
    spread = std::sqrt(spread / sw);
    double statistical = have_errors ? std::sqrt(1.0 / sw) : 0.0;
    est.err = std::max(statistical, spread);
    return est;
}

}  // namespace mptzx
