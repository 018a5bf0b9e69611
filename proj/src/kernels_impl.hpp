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

#include "pqcrad/kernels.hpp"

namespace pqcrad::kernels {

/// A phase in {1, i, -1, -i}.
struct GatePhase {
    bool imaginary;
    bool negative;
};

[[nodiscard]] inline GatePhase phase_from_exponent(unsigned e) noexcept {
    return {(e & 1U) != 0, (e & 2U) != 0};
}

/// Phase i^k with P|j> = i^k |j ^ x>.
[[nodiscard]] inline GatePhase observable_phase(std::size_t j, PauliMasks p) noexcept {
    const auto parity = static_cast<unsigned>(__builtin_popcountll(j & p.z) & 1);
    return phase_from_exponent((p.y_count + 2 * parity) & 3U);
}

/// Coefficient w_i of psi_j in exp(-i theta P): new_i = c psi_i + s w_i psi_j,
/// where w_i = -i * i^k(j).
[[nodiscard]] inline GatePhase exp_phase(std::size_t j, PauliMasks p) noexcept {
    const auto parity = static_cast<unsigned>(__builtin_popcountll(j & p.z) & 1);
    return phase_from_exponent((p.y_count + 2 * parity + 3) & 3U);
}

#if defined(PQCRAD_BUILD_AVX2)
const KernelTable &avx2_table_unchecked() noexcept;
#endif

} // namespace pqcrad::kernels
