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
#include <cstdint>
#include <string_view>

namespace pqcrad::kernels {

/// Batched state layout used by every kernel here.
///
/// A batch holds `stride` independent states of dimension `dim` in split
/// real/imaginary planes, amplitude-major: amplitude i of lane b lives at
/// re[i * stride + b]. `stride` is a multiple of kLaneMultiple so SIMD
/// variants never need a remainder loop; padding lanes are computed like any
/// other lane and ignored by callers.
inline constexpr std::size_t kLaneMultiple = 4;

[[nodiscard]] constexpr std::size_t padded_lanes(std::size_t lanes) noexcept {
    return (lanes + kLaneMultiple - 1) / kLaneMultiple * kLaneMultiple;
}

struct PauliMasks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    unsigned y_count = 0;
};

/// Every variant evaluates the same expressions in the same order per lane,
/// so scalar and SIMD results are bit-identical.
struct KernelTable {
    std::string_view name;

    /// In place: psi <- cos(theta) psi - i sin(theta) P psi, given c = cos,
    /// s = sin.
    void (*exp_pauli)(double *re, double *im, std::size_t dim, std::size_t stride,
                      PauliMasks p, double c, double s);

    /// out_re[b] + i out_im[b] = <psi_b|P|psi_b>, accumulated over amplitudes
    /// in increasing index order.
    void (*expect_pauli)(const double *re, const double *im, std::size_t dim,
                         std::size_t stride, PauliMasks p, double *out_re, double *out_im);

    /// out[u * stride + v] = Re <psi_u|P|psi_v> for u < rows and every lane v.
    void (*gram_pauli)(const double *re, const double *im, std::size_t dim, std::size_t stride,
                       std::size_t rows, PauliMasks p, double *out);
};

enum class Isa { kScalar, kAvx2 };

[[nodiscard]] const KernelTable &scalar_table() noexcept;

/// nullptr when the AVX2 variant was not built or the CPU lacks AVX2.
[[nodiscard]] const KernelTable *avx2_table() noexcept;

/// The table used by the simulator. Chosen once at first use: AVX2 when
/// available, unless PQCRAD_KERNEL=scalar is set in the environment.
[[nodiscard]] const KernelTable &active() noexcept;

/// Overrides the active table (tests, --kernel flag). Returns false and leaves
/// the selection unchanged if the requested variant is unavailable.
bool select(Isa isa) noexcept;

} // namespace pqcrad::kernels
