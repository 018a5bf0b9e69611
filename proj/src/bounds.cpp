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

#include "pqcrad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pqcrad::bounds {

namespace {

constexpr double kPi = std::numbers::pi;

void check_counts(std::size_t num_params, std::size_t num_samples) {
    if (num_params < 1) {
        throw std::invalid_argument("bound: L must be >= 1");
    }
    if (num_samples < 1) {
        throw std::invalid_argument("bound: M must be >= 1");
    }
}

} // namespace

double lipschitz_bound(std::size_t num_params) {
    return 2.0 * std::sqrt(static_cast<double>(num_params));
}

double domain_diameter(std::size_t num_params, Domain domain) {
    const double l = static_cast<double>(num_params);
    return domain == Domain::kFull ? 2.0 * kPi * std::sqrt(l) : 2.0 * kPi;
}

RademacherBound rademacher_bound(const BoundInputs &in) {
    check_counts(in.num_params, in.num_samples);
    const double l = static_cast<double>(in.num_params);
    const double m = static_cast<double>(in.num_samples);
    RademacherBound b;
    b.lipschitz = lipschitz_bound(in.num_params);
    b.diameter = domain_diameter(in.num_params, in.domain);
    // 12/sqrt(M) * sqrt(L) * (3 sqrt(pi)/2) K R with the chaining offset taken to zero.
    b.raw = 18.0 * std::sqrt(kPi) * std::sqrt(l) * b.lipschitz * b.diameter / std::sqrt(m);
    const double l_power = in.domain == Domain::kFull ? std::pow(l, 1.5) : l;
    b.closed_form = 72.0 * std::pow(kPi, 1.5) * l_power / std::sqrt(m);
    b.clamped = std::min(1.0, b.raw);
    return b;
}

std::string_view to_string(LinearRegime r) noexcept {
    switch (r) {
    case LinearRegime::kConstant:
        return "1/sqrt(M)";
    case LinearRegime::kLinear:
        return "p/sqrt(M)";
    case LinearRegime::kQuadratic:
        return "p^2/sqrt(M)";
    }
    return "unknown";
}

LinearModelBound linear_model_bound(const LinearModelInputs &in) {
    if (!(in.input_norm > 0.0) || !(in.weight_norm > 0.0)) {
        throw std::invalid_argument("linear_model_bound: D and B must be positive");
    }
    if (in.num_samples < 1) {
        throw std::invalid_argument("linear_model_bound: M must be >= 1");
    }
    const double p = static_cast<double>(in.num_params);
    const auto grows = [p](double norm) { return p > 1.0 && norm >= p; };
    const int growing = static_cast<int>(grows(in.input_norm)) + static_cast<int>(grows(in.weight_norm));
    LinearModelBound out;
    out.value = in.input_norm * in.weight_norm / std::sqrt(static_cast<double>(in.num_samples));
    out.regime = growing == 0 ? LinearRegime::kConstant
                              : (growing == 1 ? LinearRegime::kLinear : LinearRegime::kQuadratic);
    return out;
}

double gap_bound(double rademacher, std::size_t num_samples, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("gap_bound: delta must lie in (0, 1), got " + std::to_string(delta));
    }
    if (!(rademacher >= 0.0)) {
        throw std::invalid_argument("gap_bound: Rademacher complexity must be >= 0");
    }
    if (num_samples < 1) {
        throw std::invalid_argument("gap_bound: M must be >= 1");
    }
    return 2.0 * rademacher +
           std::sqrt(std::log(1.0 / delta) / (2.0 * static_cast<double>(num_samples)));
}

} // namespace pqcrad::bounds
