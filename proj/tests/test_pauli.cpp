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

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pqcrad/errors.hpp"
#include "pqcrad/pauli.hpp"
#include "pqcrad/rng.hpp"

using namespace pqcrad;

namespace {

StateVector random_state(std::size_t n, Stream &rng) {
    std::vector<Complex> a(std::size_t{1} << n);
    for (auto &v : a) {
        v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    return StateVector(n, std::move(a));
}

oracle::Vec to_eigen(const StateVector &s) {
    oracle::Vec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

double max_diff(const oracle::Vec &a, const StateVector &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        d = std::max(d, std::abs(a(static_cast<Eigen::Index>(i)) - b[i]));
    }
    return d;
}

} // namespace

TEST(PauliString, ParseRoundTrip) {
    for (const char *s : {"I", "X", "Y", "Z", "XYZI", "IIIIZ", "YYYYYY"}) {
        EXPECT_EQ(PauliString::parse(s).to_string(), s);
    }
}

TEST(PauliString, MasksFollowMsbConvention) {
    const auto p = PauliString::parse("XIZY");
    // qubit 0 -> bit 3
    EXPECT_EQ(p.x_mask(), 0b1001U);
    EXPECT_EQ(p.z_mask(), 0b0011U);
    EXPECT_EQ(p.y_count(), 1U);
    EXPECT_EQ(p.factor(0), Pauli::X);
    EXPECT_EQ(p.factor(3), Pauli::Y);
}

TEST(PauliString, RejectsBadText) {
    EXPECT_THROW((void)PauliString::parse(""), std::invalid_argument);
    EXPECT_THROW((void)PauliString::parse("XQ"), std::invalid_argument);
    EXPECT_THROW((void)PauliString::parse("xz"), std::invalid_argument);
}

TEST(PauliString, SingleFactor) {
    EXPECT_EQ(PauliString::single(4, 2, Pauli::Y).to_string(), "IIYI");
}

TEST(ApplyPauli, MatchesKroneckerOracle) {
    Stream rng(11);
    for (int inst = 0; inst < 200; ++inst) {
        const std::size_t n = 1 + rng.below(5);
        const auto p = sample_pauli_string(n, rng);
        const auto s = random_state(n, rng);
        const oracle::Vec expect = oracle::pauli(p.to_string()) * to_eigen(s);
        EXPECT_LE(max_diff(expect, apply_pauli(p, s)), 1e-14) << p.to_string();
    }
}

TEST(ApplyPauli, SquaresToIdentity) {
    Stream rng(12);
    for (int inst = 0; inst < 50; ++inst) {
        const std::size_t n = 1 + rng.below(6);
        const auto p = sample_pauli_string(n, rng);
        const auto s = random_state(n, rng);
        EXPECT_LE(max_diff(to_eigen(s), apply_pauli(p, apply_pauli(p, s))), 1e-15);
    }
}

TEST(ApplyExpPauli, MatchesMatrixExponential) {
    Stream rng(13);
    for (int inst = 0; inst < 100; ++inst) {
        const std::size_t n = 1 + rng.below(4);
        const auto p = sample_pauli_string(n, rng);
        const double theta = rng.uniform(-7.0, 7.0);
        const auto s = random_state(n, rng);
        const oracle::Vec expect = oracle::exp_minus_i(oracle::pauli(p.to_string()), theta) * to_eigen(s);
        EXPECT_LE(max_diff(expect, apply_exp_pauli(p, theta, s)), 1e-12);
    }
}

TEST(ApplyExpPauli, PreservesNorm) {
    Stream rng(14);
    auto s = random_state(5, rng);
    const double before = s.norm_squared();
    for (int k = 0; k < 100; ++k) {
        apply_exp_pauli_inplace(sample_pauli_string(5, rng), rng.uniform(0.0, 6.3), s);
    }
    EXPECT_NEAR(s.norm_squared(), before, 1e-12 * before);
}

TEST(ApplyExpPauli, QuarterTurnIsMinusIP) {
    const auto p = PauliString::parse("YX");
    Stream rng(15);
    const auto s = random_state(2, rng);
    const auto a = apply_exp_pauli(p, std::numbers::pi / 2, s);
    const auto b = apply_pauli(p, s);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LE(std::abs(a[i] - Complex(0, -1) * b[i]), 1e-15);
    }
}

TEST(Expectation, MatchesOracleAndIsReal) {
    Stream rng(16);
    for (int inst = 0; inst < 100; ++inst) {
        const std::size_t n = 1 + rng.below(4);
        const auto p = sample_pauli_string(n, rng);
        const auto s = random_state(n, rng);
        const oracle::Vec v = to_eigen(s);
        const Complex expect = (v.adjoint() * oracle::pauli(p.to_string()) * v)(0, 0);
        const Complex got = expectation(p, s);
        EXPECT_LE(std::abs(got - expect), 1e-13);
        EXPECT_LE(std::abs(got.imag()), 1e-13);
    }
}

TEST(Expectation, ZOnBasisStates) {
    StateVector s(3);
    EXPECT_DOUBLE_EQ(expectation(PauliString::parse("ZII"), s).real(), 1.0);
    s[0] = 0.0;
    s[0b100] = 1.0; // qubit 0 flipped
    EXPECT_DOUBLE_EQ(expectation(PauliString::parse("ZII"), s).real(), -1.0);
    EXPECT_DOUBLE_EQ(expectation(PauliString::parse("IIZ"), s).real(), 1.0);
}

TEST(Pauli, SizeMismatchThrows) {
    StateVector s(3);
    EXPECT_THROW((void)apply_pauli(PauliString::parse("XX"), s), std::invalid_argument);
    EXPECT_THROW((void)expectation(PauliString::parse("XXXX"), s), std::invalid_argument);
}

TEST(DenseMatrix, MatchesOracleAndRefusesLargeN) {
    for (const char *s : {"XY", "ZIY", "YYZX"}) {
        const auto m = dense_matrix(PauliString::parse(s));
        const auto o = oracle::pauli(s);
        for (std::size_t r = 0; r < m.dim; ++r) {
            for (std::size_t c = 0; c < m.dim; ++c) {
                EXPECT_EQ(m(r, c), o(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
            }
        }
    }
    EXPECT_THROW((void)dense_matrix(PauliString(7)), OracleSizeError);
}

TEST(SamplePauliString, NeverIdentityAndCoversAllStrings) {
    Stream rng(17);
    std::set<std::string> seen;
    for (int k = 0; k < 5000; ++k) {
        const auto p = sample_pauli_string(2, rng);
        ASSERT_FALSE(p.is_identity());
        seen.insert(p.to_string());
    }
    EXPECT_EQ(seen.size(), 15U);
}

TEST(SamplePauliString, FactorFrequenciesAreBalanced) {
    // Uniform over 4^n - 1 strings: each factor of qubit 0 appears with
    // probability 4^{n-1}/(4^n - 1), except I which loses the identity.
    Stream rng(18);
    constexpr int kDraws = 200000;
    std::array<int, 4> counts{};
    for (int k = 0; k < kDraws; ++k) {
        ++counts[static_cast<int>(sample_pauli_string(3, rng).factor(0))];
    }
    const double p_xyz = 16.0 / 63.0;
    const double p_i = 15.0 / 63.0;
    const double sd = std::sqrt(kDraws * p_xyz * (1 - p_xyz));
    EXPECT_NEAR(counts[0], kDraws * p_i, 5 * sd);
    for (int f = 1; f < 4; ++f) {
        EXPECT_NEAR(counts[f], kDraws * p_xyz, 5 * sd);
    }
}
