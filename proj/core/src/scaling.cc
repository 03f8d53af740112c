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

#include "mptzx/scaling.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "mptzx/errors.h"

namespace mptzx {

namespace {

constexpr double kGolden = 0.6180339887498949;

/// Minimizes f on [lo, hi] after a coarse scan, so that a few local minima
/// do not trap the search.
template <typename F>
double minimize_1d(F &&f, double lo, double hi, size_t scan = 40, double tol = 1e-12) {
    size_t best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k <= scan; k++) {
        double v = f(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(scan));
        if (v < best_val) {
            best_val = v;
            best = k;
        }
    }
    double step = (hi - lo) / static_cast<double>(scan);
    double a = std::max(lo, lo + step * (static_cast<double>(best) - 1));
    double b = std::min(hi, lo + step * (static_cast<double>(best) + 1));
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol * (1 + std::abs(a) + std::abs(b))) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

std::vector<double> floored_errors(const std::vector<CurvePoint> &samples) {
    double floor = std::numeric_limits<double>::infinity();
    for (const CurvePoint &s : samples) {
        if (s.err > 0) {
            floor = std::min(floor, s.err);
        }
    }
    if (!std::isfinite(floor)) {
        floor = 1;
    }
    std::vector<double> err;
    for (const CurvePoint &s : samples) {
        err.push_back(s.err > 0 ? s.err : floor);
    }
    return err;
}

}  // namespace

double fermionic(double p, double p_c, double temperature) {
    double z = (p - p_c) / temperature;
    if (z > 700) {
        return 0;
    }
    return 1 / (std::exp(z) + 1);
}

ThresholdFit fermionic_fit(size_t n, const std::vector<CurvePoint> &samples, double nu) {
    if (samples.size() < 5) {
        throw InsufficientDataError("fermionic fit needs at least 5 points, got " + std::to_string(samples.size()));
    }
    bool above = false;
    bool below = false;
    double p_lo = samples.front().x;
    double p_hi = samples.front().x;
    for (const CurvePoint &s : samples) {
        above = above || s.y > 0.5;
        below = below || s.y < 0.5;
        p_lo = std::min(p_lo, s.x);
        p_hi = std::max(p_hi, s.x);
    }
    if (!above || !below) {
        throw FitError("fermionic fit at N=" + std::to_string(n) + ": data does not bracket P = 1/2");
    }
    std::vector<double> err = floored_errors(samples);

    auto chi2 = [&](double p_c, double t) {
        double total = 0;
        for (size_t i = 0; i < samples.size(); i++) {
            double r = (samples[i].y - fermionic(samples[i].x, p_c, t)) / err[i];
            total += r * r;
        }
        return total;
    };
    double span = p_hi - p_lo;
    double log_t_lo = std::log(1e-5 * span);
    double log_t_hi = std::log(2 * span);
    auto best_log_t = [&](double p_c) {
        return minimize_1d([&](double lt) { return chi2(p_c, std::exp(lt)); }, log_t_lo, log_t_hi, 30);
    };
    auto profile = [&](double p_c) { return chi2(p_c, std::exp(best_log_t(p_c))); };
    double p_c = minimize_1d(profile, p_lo, p_hi, 40);
    double t = std::exp(best_log_t(p_c));

    // Covariance from the Gauss-Newton normal matrix in (p_c, T).
    double h00 = 0;
    double h01 = 0;
    double h11 = 0;
    for (size_t i = 0; i < samples.size(); i++) {
        double f = fermionic(samples[i].x, p_c, t);
        double g = f * (1 - f);  // df/dz with z = (p - p_c)/T, up to sign
        double d_pc = g / t;
        double d_t = g * (samples[i].x - p_c) / (t * t);
        double w = 1 / (err[i] * err[i]);
        h00 += w * d_pc * d_pc;
        h01 += w * d_pc * d_t;
        h11 += w * d_t * d_t;
    }
    double det = h00 * h11 - h01 * h01;
    double dof = static_cast<double>(samples.size() - 2);
    double chi2_dof = chi2(p_c, t) / dof;

    ThresholdFit fit;
    fit.n = n;
    fit.p_c = p_c;
    fit.p_c_err = det > 0 ? std::sqrt(h11 / det * std::max(1.0, chi2_dof)) : std::numeric_limits<double>::infinity();
    fit.temperature = t;
    fit.temperature_scale = t * std::pow(static_cast<double>(n), 1 / nu);
    fit.chi2_per_dof = chi2_dof;
    return fit;
}

LinearFit weighted_linear_fit(const std::vector<double> &x, const std::vector<double> &y,
                              const std::vector<double> &err) {
    if (x.size() != y.size() || x.size() != err.size()) {
        throw std::invalid_argument("weighted_linear_fit: mismatched lengths");
    }
    if (x.size() < 2) {
        throw InsufficientDataError("linear fit needs at least 2 points");
    }
    bool weighted = std::any_of(err.begin(), err.end(), [](double e) { return e > 0; });
    double s = 0;
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double w = 1;
        if (weighted) {
            if (!(err[i] > 0)) {
                throw std::invalid_argument("weighted_linear_fit: errors must all be positive or all zero");
            }
            w = 1 / (err[i] * err[i]);
        }
        s += w;
        sx += w * x[i];
        sy += w * y[i];
        sxx += w * x[i] * x[i];
        sxy += w * x[i] * y[i];
    }
    double det = s * sxx - sx * sx;
    if (!(std::abs(det) > 0)) {
        throw FitError("linear fit: abscissae are degenerate");
    }
    LinearFit fit;
    fit.slope = (s * sxy - sx * sy) / det;
    fit.intercept = (sxx * sy - sx * sxy) / det;
    fit.intercept_err = std::sqrt(sxx / det);
    fit.slope_err = std::sqrt(s / det);
    for (size_t i = 0; i < x.size(); i++) {
        double r = y[i] - fit.intercept - fit.slope * x[i];
        fit.chi2 += weighted ? r * r / (err[i] * err[i]) : r * r;
    }
    return fit;
}

FssEstimate extrapolate_threshold(const std::vector<ThresholdFit> &fits, double nu, double alpha) {
    std::vector<FssPoint> points;
    for (const ThresholdFit &f : fits) {
        points.push_back({f.n, f.p_c, f.p_c_err});
    }
    return extrapolate_threshold(points, nu, alpha);
}

FssEstimate extrapolate_threshold(const std::vector<FssPoint> &points, double nu, double alpha) {
    size_t n = points.size();
    if (n < 3) {
        throw InsufficientDataError("threshold extrapolation needs at least 3 sizes, got " + std::to_string(n));
    }
    if (!(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> err;
    for (const FssPoint &pt : points) {
        if (!(pt.err > 0)) {
            throw std::invalid_argument("threshold at N=" + std::to_string(pt.n) + " needs a positive error");
        }
        x.push_back(std::pow(static_cast<double>(pt.n), -1 / nu));
        y.push_back(pt.p_c);
        err.push_back(pt.err);
    }
    LinearFit lin = weighted_linear_fit(x, y, err);

    double sw2 = 0;
    double sw2x = 0;
    double sw2r2 = 0;
    for (size_t i = 0; i < n; i++) {
        double w = 1 / err[i];
        double r = y[i] - lin.intercept - lin.slope * x[i];
        sw2 += w * w;
        sw2x += w * w * x[i];
        sw2r2 += w * w * r * r;
    }
    double x_bar = sw2x / sw2;
    double sxx = 0;
    for (double xi : x) {
        sxx += (xi - x_bar) * (xi - x_bar);
    }
    double denom = sw2 - 2;
    if (!(denom > 0)) {
        throw FitError("threshold extrapolation: sum of squared weights must exceed 2");
    }
    double sigma2 = sw2r2 / denom;
    double nn = static_cast<double>(n);

    FssEstimate est;
    est.p_c_inf = lin.intercept;
    est.slope = lin.slope;
    est.intercept_err = lin.intercept_err;
    est.nu = nu;
    est.points = points;
    est.variance = sigma2 * (1 + 1 / nn + x_bar * x_bar / sxx);
    boost::math::students_t dist(nn - 2);
    double t = boost::math::quantile(boost::math::complement(dist, alpha / 2));
    est.half_width = t * std::sqrt(est.variance);
    return est;
}

CollapseResult collapse_check(const CurveSet &data, const std::map<size_t, double> &p_c_of_n, double nu) {
    if (data.empty()) {
        throw std::invalid_argument("collapse_check needs at least one curve");
    }
    CurveSet shifted;
    for (const auto &[n, curve] : data) {
        auto it = p_c_of_n.find(n);
        if (it == p_c_of_n.end()) {
            throw std::invalid_argument("collapse_check: no threshold for N=" + std::to_string(n));
        }
        for (CurvePoint pt : curve) {
            pt.x -= it->second;
            shifted[n].push_back(pt);
        }
    }
    return scaling_collapse(shifted, 0.0, nu, CollapseMode::kTransition);
}

BoundaryFit boundary_exponential_fit(const std::vector<std::pair<double, double>> &p_rc) {
    if (p_rc.size() < 3) {
        throw InsufficientDataError("boundary fit needs at least 3 points, got " + std::to_string(p_rc.size()));
    }
    std::vector<double> x;
    std::vector<double> y;
    for (const auto &[p, rc] : p_rc) {
        if (!(p > 0) || !(rc > 0)) {
            throw std::invalid_argument("boundary fit needs positive p and r_c");
        }
        x.push_back(1 / p);
        y.push_back(std::log(rc));
    }
    LinearFit lin = weighted_linear_fit(x, y, std::vector<double>(x.size(), 0.0));
    if (!(lin.slope < 0)) {
        throw FitError("boundary fit: ln r_c does not decrease with 1/p");
    }
    BoundaryFit fit;
    fit.a = -1 / lin.slope;
    fit.prefactor = std::exp(lin.intercept);
    double ss = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double r = y[i] - lin.intercept - lin.slope * x[i];
        fit.residuals.push_back(r);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / static_cast<double>(x.size()));
    return fit;
}

PeakEstimate quadratic_peak(const std::vector<CurvePoint> &curve) {
    PeakEstimate peak;
    if (curve.size() < 3) {
        return peak;
    }
    std::vector<CurvePoint> c = curve;
    std::sort(c.begin(), c.end(), [](const CurvePoint &a, const CurvePoint &b) { return a.x < b.x; });
    size_t k = 0;
    for (size_t i = 1; i < c.size(); i++) {
        if (c[i].y > c[k].y) {
            k = i;
        }
    }
    if (k == 0 || k + 1 == c.size()) {
        return peak;
    }
    double x0 = c[k - 1].x;
    double x1 = c[k].x;
    double x2 = c[k + 1].x;
    double y0 = c[k - 1].y;
    double y1 = c[k].y;
    double y2 = c[k + 1].y;
    // Divided differences of the interpolating parabola.
    double d01 = (y1 - y0) / (x1 - x0);
    double d12 = (y2 - y1) / (x2 - x1);
    double curv = (d12 - d01) / (x2 - x0);
    if (!(curv < 0)) {
        return peak;  // flat top
    }
    peak.defined = true;
    peak.x = 0.5 * (x0 + x1) - d01 / (2 * curv);
    peak.height = y0 + d01 * (peak.x - x0) + curv * (peak.x - x0) * (peak.x - x1);
    return peak;
}

LinearFit peak_scaling_fit(const std::vector<FssPoint> &peaks, double exponent) {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> err;
    for (const FssPoint &pt : peaks) {
        x.push_back(std::pow(static_cast<double>(pt.n), -exponent));
        y.push_back(pt.p_c);
        err.push_back(pt.err);
    }
    return weighted_linear_fit(x, y, err);
}

}  // namespace mptzx
