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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqcrad/rng.hpp"

namespace pqcrad {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// n-qubit Pauli string stored as two bit masks.
///
/// Qubit 0 is the leftmost tensor factor and maps to the most significant bit
/// of a basis index, i.e. qubit q lives at bit (n - 1 - q). A factor sets its
/// bit in x_mask when it flips (X, Y) and in z_mask when it carries a phase
/// (Z, Y); Y is i*X*Z.
class PauliString {
  public:
    static constexpr std::size_t kMaxQubits = 62;

    /// All-identity string on n qubits.
    explicit PauliString(std::size_t n_qubits);

    /// Parses "ZXIIY" (uppercase, qubit 0 first).
    static PauliString parse(std::string_view text);

    /// Single-qubit factor `p` on `qubit`, identity elsewhere.
    static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_mask_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_mask_; }
    [[nodiscard]] unsigned y_count() const noexcept;
    [[nodiscard]] bool is_identity() const noexcept { return (x_mask_ | z_mask_) == 0; }

    [[nodiscard]] Pauli factor(std::size_t qubit) const;
    void set_factor(std::size_t qubit, Pauli p);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    [[nodiscard]] std::uint64_t bit(std::size_t qubit) const noexcept {
        return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
    }

    std::size_t n_qubits_;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
};

/// Dense 2^n amplitude vector.
class StateVector {
  public:
    static constexpr std::size_t kMaxQubits = 30;

    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n_qubits);
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] Complex &operator[](std::size_t i) { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// Row-major complex matrix; only used as a verification oracle.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Complex> data;

    [[nodiscard]] const Complex &operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
    [[nodiscard]] Complex &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
};

/// Phase picked up by basis state |j> under P, as a power of i:
/// P|j> = i^k |j ^ x_mask>. Returns k in {0, 1, 2, 3}.
[[nodiscard]] inline unsigned pauli_phase_exponent(std::uint64_t j, std::uint64_t z_mask,
                                                   unsigned y_count) noexcept {
    const auto parity = static_cast<unsigned>(__builtin_popcountll(j & z_mask) & 1);
    return (y_count + 2 * parity) & 3U;
}

/// P|psi>.
[[nodiscard]] StateVector apply_pauli(const PauliString &p, const StateVector &s);

/// exp(-i theta P)|psi> = cos(theta)|psi> - i sin(theta) P|psi>.
[[nodiscard]] StateVector apply_exp_pauli(const PauliString &p, double theta, const StateVector &s);

/// In-place variants used on worker scratch buffers.
void apply_pauli_inplace(const PauliString &p, StateVector &s);
void apply_exp_pauli_inplace(const PauliString &p, double theta, StateVector &s);

/// <psi|P|psi>, complex so callers can check the imaginary part.
[[nodiscard]] Complex expectation(const PauliString &p, const StateVector &s);

/// Kronecker product of the single-qubit matrices, qubit 0 leftmost (n <= 6).
[[nodiscard]] DenseMatrix dense_matrix(const PauliString &p);

inline constexpr std::size_t kDenseOracleMaxQubits = 6;

/// Uniform over the 4^n - 1 non-identity strings (1 <= n <= 31).
[[nodiscard]] PauliString sample_pauli_string(std::size_t n_qubits, Stream &rng);

} // namespace pqcrad
