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

#include "pqcrad/pauli.hpp"

#include "pqcrad/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pqcrad {

namespace {

void check_qubits(std::size_t n, std::size_t limit, const char *what) {
    if (n < 1 || n > limit) {
        throw std::invalid_argument(std::string(what) + ": n_qubits must be in [1, " +
                                    std::to_string(limit) + "], got " + std::to_string(n));
    }
}

void check_match(const PauliString &p, const StateVector &s) {
    if (p.n_qubits() != s.n_qubits()) {
        throw std::invalid_argument("Pauli string acts on " + std::to_string(p.n_qubits()) +
                                    " qubits but state has " + std::to_string(s.n_qubits()));
    }
}

// i^k as a complex number.
constexpr Complex kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

} // namespace

PauliString::PauliString(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_qubits(n_qubits, kMaxQubits, "PauliString");
}

PauliString PauliString::parse(std::string_view text) {
    PauliString p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
        case 'I':
            break;
        case 'X':
            p.set_factor(q, Pauli::X);
            break;
        case 'Y':
            p.set_factor(q, Pauli::Y);
            break;
        case 'Z':
            p.set_factor(q, Pauli::Z);
            break;
        default:
            throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[q]) +
                                        "' in \"" + std::string(text) + "\"");
        }
    }
    return p;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Pauli p) {
    PauliString s(n_qubits);
    s.set_factor(qubit, p);
    return s;
}

unsigned PauliString::y_count() const noexcept {
    return static_cast<unsigned>(__builtin_popcountll(x_mask_ & z_mask_));
}

Pauli PauliString::factor(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    const bool x = (x_mask_ & bit(qubit)) != 0;
    const bool z = (z_mask_ & bit(qubit)) != 0;
    if (x && z) {
        return Pauli::Y;
    }
    if (x) {
        return Pauli::X;
    }
    return z ? Pauli::Z : Pauli::I;
}

void PauliString::set_factor(std::size_t qubit, Pauli p) {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    const std::uint64_t b = bit(qubit);
    x_mask_ &= ~b;
    z_mask_ &= ~b;
    if (p == Pauli::X || p == Pauli::Y) {
        x_mask_ |= b;
    }
    if (p == Pauli::Z || p == Pauli::Y) {
        z_mask_ |= b;
    }
}

std::string PauliString::to_string() const {
    std::string out(n_qubits_, 'I');
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        out[q] = "IXYZ"[static_cast<int>(factor(q))];
    }
    return out;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_qubits(n_qubits, kMaxQubits, "StateVector");
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubits(n_qubits, kMaxQubits, "StateVector");
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("StateVector: expected 2^n amplitudes");
    }
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const Complex &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void apply_pauli_inplace(const PauliString &p, StateVector &s) {
    check_match(p, s);
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const unsigned y = p.y_count();
    auto amps = s.amplitudes();
    // (P psi)[i] = i^k(i ^ x) psi[i ^ x], with k from the source index.
    if (x == 0) {
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] *= kIPow[pauli_phase_exponent(i, z, y)];
        }
        return;
    }
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t j = i ^ x;
        if (i < j) {
            const Complex ai = amps[i];
            const Complex aj = amps[j];
            amps[i] = kIPow[pauli_phase_exponent(j, z, y)] * aj;
            amps[j] = kIPow[pauli_phase_exponent(i, z, y)] * ai;
        }
    }
}

void apply_exp_pauli_inplace(const PauliString &p, double theta, StateVector &s) {
    check_match(p, s);
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const unsigned y = p.y_count();
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    const Complex minus_i_sin{0.0, -sn};
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t j = i ^ x;
        if (i < j) {
            const Complex ai = amps[i];
            const Complex aj = amps[j];
            amps[i] = c * ai + minus_i_sin * (kIPow[pauli_phase_exponent(j, z, y)] * aj);
            amps[j] = c * aj + minus_i_sin * (kIPow[pauli_phase_exponent(i, z, y)] * ai);
        } else if (i == j) {
            const Complex ai = amps[i];
            amps[i] = c * ai + minus_i_sin * (kIPow[pauli_phase_exponent(i, z, y)] * ai);
        }
    }
}

StateVector apply_pauli(const PauliString &p, const StateVector &s) {
    StateVector out = s;
    apply_pauli_inplace(p, out);
    return out;
}

StateVector apply_exp_pauli(const PauliString &p, double theta, const StateVector &s) {
    StateVector out = s;
    apply_exp_pauli_inplace(p, theta, out);
    return out;
}

Complex expectation(const PauliString &p, const StateVector &s) {
    check_match(p, s);
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const unsigned y = p.y_count();
    auto amps = s.amplitudes();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t j = i ^ x;
        acc += std::conj(amps[i]) * (kIPow[pauli_phase_exponent(j, z, y)] * amps[j]);
    }
    return acc;
}

DenseMatrix dense_matrix(const PauliString &p) {
    if (p.n_qubits() > kDenseOracleMaxQubits) {
        throw OracleSizeError("dense_matrix: oracle limited to " +
                                std::to_string(kDenseOracleMaxQubits) + " qubits, got " +
                                std::to_string(p.n_qubits()));
    }
    static const Complex kFactors[4][2][2] = {
        {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}},   // I
        {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}},   // X
        {{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}},  // Y
        {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}},  // Z
    };
    DenseMatrix m{1, {Complex{1.0, 0.0}}};
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        const auto &f = kFactors[static_cast<int>(p.factor(q))];
        DenseMatrix next{m.dim * 2, std::vector<Complex>(m.dim * m.dim * 4)};
        for (std::size_t r = 0; r < m.dim; ++r) {
            for (std::size_t c = 0; c < m.dim; ++c) {
                for (std::size_t a = 0; a < 2; ++a) {
                    for (std::size_t b = 0; b < 2; ++b) {
                        next(2 * r + a, 2 * c + b) = m(r, c) * f[a][b];
                    }
                }
            }
        }
        m = std::move(next);
    }
    return m;
}

PauliString sample_pauli_string(std::size_t n_qubits, Stream &rng) {
    if (n_qubits < 1 || n_qubits > 31) {
        throw std::invalid_argument("sample_pauli_string: n must be in [1, 31], got " +
                                    std::to_string(n_qubits));
    }
    const std::uint64_t count = std::uint64_t{1} << (2 * n_qubits);
    std::uint64_t code = 1 + rng.below(count - 1);
    PauliString p(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        p.set_factor(q, static_cast<Pauli>(code & 3U));
        code >>= 2;
    }
    return p;
}

} // namespace pqcrad
