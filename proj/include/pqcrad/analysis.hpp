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

#pragma once

#include <cstddef>
#include <span>

namespace pqcrad::analysis {

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double t_statistic = 0.0;
    double p_value = 1.0; // two-sided, H0: slope = 0
    double r_squared = 0.0;
    std::size_t n_points = 0;
};

/// Ordinary least squares of ys on xs with a slope t-test on n - 2 degrees
/// of freedom.
[[nodiscard]] RegressionResult linear_fit(std::span<const double> xs, std::span<const double> ys);

/// linear_fit on (ln x, ln y); every value must be positive.
[[nodiscard]] RegressionResult loglog_fit(std::span<const double> xs, std::span<const double> ys);

/// P(|T| >= |t|) for Student's t with `dof` degrees of freedom.
[[nodiscard]] double student_t_two_sided_p(double t, double dof);

struct Summary {
    double mean = 0.0;
    double standard_error = 0.0; // sample standard deviation / sqrt(n)
};

[[nodiscard]] Summary summarize(std::span<const double> values);

/// Box-plot statistics; quartiles by linear interpolation between order
/// statistics (position (n - 1) q).
struct BoxStats {
    double minimum = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double maximum = 0.0;
    double whisker_low = 0.0;  // smallest value >= q1 - 1.5 IQR
    double whisker_high = 0.0; // largest value <= q3 + 1.5 IQR
};

[[nodiscard]] double quantile(std::span<const double> values, double q);
[[nodiscard]] BoxStats box_stats(std::span<const double> values);

} // namespace pqcrad::analysis
