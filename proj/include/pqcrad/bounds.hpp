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
#include <string_view>

namespace pqcrad::bounds {

/// Parameter domain of the circuit.
enum class Domain {
    /// theta in [0, 2 pi]^L, diameter 2 pi sqrt(L).
    kFull,
    /// theta in [0, 2 pi / sqrt(L)]^L, diameter 2 pi.
    kRestricted,
};

struct BoundInputs {
    std::size_t num_params = 1;  // L
    std::size_t num_samples = 1; // M
    Domain domain = Domain::kFull;
};

/// Every factor of the entropy-integral bound, kept separate so the table can
/// show how the final constant is assembled.
struct RademacherBound {
    double lipschitz = 0.0;     // K = 2 sqrt(L)
    double diameter = 0.0;      // R
    double raw = 0.0;           // 18 sqrt(pi) sqrt(L) K R / sqrt(M)
    double closed_form = 0.0;   // 72 pi^{3/2} L^{3/2} / sqrt(M) (full) or 72 pi^{3/2} L / sqrt(M)
    double clamped = 0.0;       // min(1, raw)
};

/// K = 2 sqrt(L).
[[nodiscard]] double lipschitz_bound(std::size_t num_params);

/// Diameter R of the parameter domain.
[[nodiscard]] double domain_diameter(std::size_t num_params, Domain domain);

[[nodiscard]] RademacherBound rademacher_bound(const BoundInputs &in);

enum class LinearRegime {
    kConstant,      // D, B = O(1): O(1/sqrt(M))
    kLinear,        // one of D, B = O(p): O(p/sqrt(M))
    kQuadratic,     // both = O(p): O(p^2/sqrt(M))
};

[[nodiscard]] std::string_view to_string(LinearRegime r) noexcept;

struct LinearModelInputs {
    double input_norm = 1.0;   // D
    double weight_norm = 1.0;  // B
    std::size_t num_samples = 1;
    std::size_t num_params = 1; // p
};

struct LinearModelBound {
    double value = 0.0;  // D B / sqrt(M)
    LinearRegime regime = LinearRegime::kConstant;
};

/// The regime is a label, not a computed asymptotic: a norm counts as
/// growing with p when p > 1 and the norm is at least p.
[[nodiscard]] LinearModelBound linear_model_bound(const LinearModelInputs &in);

/// 2 R + sqrt(ln(1/delta) / (2 M)), holding with probability >= 1 - delta.
[[nodiscard]] double gap_bound(double rademacher, std::size_t num_samples, double delta);

} // namespace pqcrad::bounds
