// Copyright 2026 The pqcrad Authors
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

#include "pqcrad/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "pqcrad/errors.hpp"

namespace pqcrad::analysis {

double student_t_two_sided_p(double t, double dof) {
    if (!(dof > 0.0)) {
        throw std::invalid_argument("student_t_two_sided_p: dof must be positive");
    }
    if (std::isnan(t)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (std::isinf(t)) {
        return 0.0;
    }
    // P(|T| >= |t|) = I_{dof / (dof + t^2)}(dof / 2, 1 / 2)
    const double x = dof / (dof + t * t);
    return std::clamp(boost::math::ibeta(0.5 * dof, 0.5, x), 0.0, 1.0);
}

RegressionResult linear_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("linear_fit: xs and ys differ in length");
    }
    const std::size_t n = xs.size();
    if (n < 3) {
        throw InsufficientData("linear_fit: need at least 3 points, got " + std::to_string(n));
    }
    const double nd = static_cast<double>(n);
    if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; }) &&
        std::any_of(xs.begin(), xs.end(), [&](double x) { return x != xs[0]; })) {
        // Flat data: report the exact line instead of rounding residue.
        RegressionResult flat;
        flat.n_points = n;
        flat.intercept = ys[0];
        flat.r_squared = 1.0;
        return flat;
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= nd;
    my /= nd;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) {
        throw InsufficientData("linear_fit: all x values are equal");
    }

    RegressionResult r;
    r.n_points = n;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (r.intercept + r.slope * xs[i]);
        sse += e * e;
    }
    const double dof = nd - 2.0;
    r.slope_stderr = std::sqrt(sse / dof / sxx);
    r.r_squared = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
    if (r.slope_stderr > 0.0) {
        r.t_statistic = r.slope / r.slope_stderr;
        r.p_value = student_t_two_sided_p(r.t_statistic, dof);
    } else if (r.slope == 0.0) {
        r.t_statistic = 0.0;
        r.p_value = 1.0;
    } else {
        // Exact fit with nonzero slope.
        r.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), r.slope);
        r.p_value = 0.0;
    }
    return r;
}

RegressionResult loglog_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("loglog_fit: xs and ys differ in length");
    }
    std::vector<double> lx(xs.size());
    std::vector<double> ly(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
            throw std::invalid_argument("loglog_fit: point " + std::to_string(i) +
                                        " is not positive (" + std::to_string(xs[i]) + ", " +
                                        std::to_string(ys[i]) + ")");
        }
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    return linear_fit(lx, ly);
}

Summary summarize(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw InsufficientData("summarize: need at least 2 values, got " + std::to_string(n));
    }
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    return {mean, sd / std::sqrt(static_cast<double>(n))};
}

double quantile(std::span<const double> values, double q) {
    if (values.empty()) {
        throw InsufficientData("quantile: no values");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("quantile: q must lie in [0, 1]");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BoxStats box_stats(std::span<const double> values) {
    if (values.empty()) {
        throw InsufficientData("box_stats: no values");
    }
    BoxStats b;
    b.minimum = *std::min_element(values.begin(), values.end());
    b.maximum = *std::max_element(values.begin(), values.end());
    b.q1 = quantile(values, 0.25);
    b.median = quantile(values, 0.5);
    b.q3 = quantile(values, 0.75);
    const double iqr = b.q3 - b.q1;
    const double lo_fence = b.q1 - 1.5 * iqr;
    const double hi_fence = b.q3 + 1.5 * iqr;
    b.whisker_low = b.maximum;
    b.whisker_high = b.minimum;
    for (double v : values) {
        if (v >= lo_fence) {
            b.whisker_low = std::min(b.whisker_low, v);
        }
        if (v <= hi_fence) {
            b.whisker_high = std::max(b.whisker_high, v);
        }
    }
    return b;
}

} // namespace pqcrad::analysis
