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

#include <map>
#include <vector>

#include "mptzx/collapse.h"
#include "mptzx/curves.h"

namespace mptzx {

/// 1 / (exp((p - p_c) / T) + 1).
double fermionic(double p, double p_c, double temperature);

struct ThresholdFit {
    size_t n = 0;
    double p_c = 0;
    double p_c_err = 0;
    /// T = temperature_scale * N^(-1/nu).
    double temperature_scale = 0;
    double temperature = 0;
    double chi2_per_dof = 0;
};

/// Weighted least-squares fit of P_path(p) at one system size to the
/// fermionic form. Point errors of zero (P = 0 or 1 exactly) are floored at
/// the smallest nonzero error in the data. Requires >= 5 points with values
/// on both sides of 1/2 (FitError otherwise).
ThresholdFit fermionic_fit(size_t n, const std::vector<CurvePoint> &samples, double nu = 4.0 / 3.0);

struct LinearFit {
    double intercept = 0;
    double slope = 0;
    double intercept_err = 0;  ///< propagated from the point errors alone
    double slope_err = 0;
    double chi2 = 0;
};

/// Minimizes sum_i ((y_i - a - b x_i) / err_i)^2. Errors of zero everywhere
/// give an unweighted fit.
LinearFit weighted_linear_fit(const std::vector<double> &x, const std::vector<double> &y,
                              const std::vector<double> &err);

struct FssPoint {
    size_t n;
    double p_c;
    double err;
};

struct FssEstimate {
    double p_c_inf = 0;
    /// sigma^2 (1 + 1/n + xbar^2 / Sxx), before the Student-t factor.
    double variance = 0;
    /// t_{n-2, alpha/2} * sqrt(variance).
    double half_width = 0;
    double intercept_err = 0;
    double slope = 0;
    double nu = 4.0 / 3.0;
    std::vector<FssPoint> points;
};

/// Weighted linear regression of p_c(N) against N^(-1/nu), extrapolated to
/// N -> infinity. Throws InsufficientDataError for fewer than three sizes.
FssEstimate extrapolate_threshold(const std::vector<ThresholdFit> &fits, double nu = 4.0 / 3.0, double alpha = 0.05);
FssEstimate extrapolate_threshold(const std::vector<FssPoint> &points, double nu = 4.0 / 3.0, double alpha = 0.05);

/// Collapse of P_path curves with a size-dependent center:
/// x' = (p - p_c(N)) N^(1/nu). Sizes missing from `p_c_of_n` are rejected.
CollapseResult collapse_check(const CurveSet &data, const std::map<size_t, double> &p_c_of_n, double nu);

struct BoundaryFit {
    double a = 0;          ///< r_c ~ prefactor * exp(-1 / (a p))
    double prefactor = 0;
    double rms_residual = 0;  ///< of ln r_c
    std::vector<double> residuals;
};

/// Linear fit of ln r_c against 1/p. Throws std::invalid_argument for
/// non-positive p or r_c and InsufficientDataError for fewer than 3 points.
BoundaryFit boundary_exponential_fit(const std::vector<std::pair<double, double>> &p_rc);

struct PeakEstimate {
    bool defined = false;
    double x = 0;
    double height = 0;
};

/// Peak location from a parabola through the discrete maximum and its two
/// neighbors. Undefined for flat curves and maxima on the grid edge.
PeakEstimate quadratic_peak(const std::vector<CurvePoint> &curve);

/// Fit of peak positions to p_peak(N) = p_c + C N^(-exponent).
LinearFit peak_scaling_fit(const std::vector<FssPoint> &peaks, double exponent = 0.75);

}  // namespace mptzx
