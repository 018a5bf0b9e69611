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
#include <vector>

#include <gtest/gtest.h>

#include "pqcrad/kernels.hpp"
#include "pqcrad/pauli.hpp"
#include "pqcrad/rng.hpp"

using namespace pqcrad;

namespace {

struct Batch {
    std::size_t n, dim, lanes, stride;
    std::vector<double> re, im;
};

Batch random_batch(std::size_t n, std::size_t lanes, Stream &rng) {
    Batch b{n, std::size_t{1} << n, lanes, kernels::padded_lanes(lanes), {}, {}};
    b.re.resize(b.dim * b.stride);
    b.im.resize(b.dim * b.stride);
    for (std::size_t i = 0; i < b.re.size(); ++i) {
        b.re[i] = rng.uniform(-1.0, 1.0);
        b.im[i] = rng.uniform(-1.0, 1.0);
    }
    return b;
}

StateVector lane(const Batch &b, std::size_t l) {
    std::vector<Complex> a(b.dim);
    for (std::size_t i = 0; i < b.dim; ++i) {
        a[i] = {b.re[i * b.stride + l], b.im[i * b.stride + l]};
    }
    return StateVector(b.n, std::move(a));
}

kernels::PauliMasks masks(const PauliString &p) { return {p.x_mask(), p.z_mask(), p.y_count()}; }

std::vector<const kernels::KernelTable *> tables() {
    std::vector<const kernels::KernelTable *> t{&kernels::scalar_table()};
    if (const auto *a = kernels::avx2_table()) {
        t.push_back(a);
    }
    return t;
}

} // namespace

TEST(Kernels, PaddedLanes) {
    EXPECT_EQ(kernels::padded_lanes(1), 4U);
    EXPECT_EQ(kernels::padded_lanes(4), 4U);
    EXPECT_EQ(kernels::padded_lanes(5), 8U);
}

TEST(Kernels, ExpPauliMatchesStateVectorPath) {
    Stream rng(21);
    for (const auto *t : tables()) {
        for (int inst = 0; inst < 40; ++inst) {
            auto b = random_batch(1 + rng.below(6), 1 + rng.below(10), rng);
            const auto p = sample_pauli_string(b.n, rng);
            const double theta = rng.uniform(-4.0, 4.0);
            const auto before = b;
            t->exp_pauli(b.re.data(), b.im.data(), b.dim, b.stride, masks(p), std::cos(theta), std::sin(theta));
            for (std::size_t l = 0; l < b.lanes; ++l) {
                const auto ref = apply_exp_pauli(p, theta, lane(before, l));
                const auto got = lane(b, l);
                for (std::size_t i = 0; i < b.dim; ++i) {
                    ASSERT_LE(std::abs(ref[i] - got[i]), 1e-14) << t->name;
                }
            }
        }
    }
}

TEST(Kernels, ExpectAndGramMatchStateVectorPath) {
    Stream rng(22);
    for (const auto *t : tables()) {
        for (int inst = 0; inst < 40; ++inst) {
            const auto b = random_batch(1 + rng.below(6), 1 + rng.below(10), rng);
            const auto p = sample_pauli_string(b.n, rng);
            std::vector<double> ore(b.stride), oim(b.stride);
            t->expect_pauli(b.re.data(), b.im.data(), b.dim, b.stride, masks(p), ore.data(), oim.data());
            const std::size_t rows = std::min<std::size_t>(b.lanes, 3);
            std::vector<double> gram(rows * b.stride);
            t->gram_pauli(b.re.data(), b.im.data(), b.dim, b.stride, rows, masks(p), gram.data());
            for (std::size_t l = 0; l < b.lanes; ++l) {
                const auto s = lane(b, l);
                const Complex e = expectation(p, s);
                EXPECT_NEAR(ore[l], e.real(), 1e-13);
                EXPECT_NEAR(oim[l], e.imag(), 1e-13);
                const auto ps = apply_pauli(p, s);
                for (std::size_t u = 0; u < rows; ++u) {
                    const auto su = lane(b, u);
                    Complex acc{0, 0};
                    for (std::size_t i = 0; i < b.dim; ++i) {
                        acc += std::conj(su[i]) * ps[i];
                    }
                    EXPECT_NEAR(gram[u * b.stride + l], acc.real(), 1e-13);
                }
            }
        }
    }
}

TEST(Kernels, Avx2IsBitIdenticalToScalar) {
    const auto *simd = kernels::avx2_table();
    if (simd == nullptr) {
        GTEST_SKIP() << "AVX2 not available";
    }
    const auto &ref = kernels::scalar_table();
    Stream rng(23);
    for (int inst = 0; inst < 200; ++inst) {
        auto a = random_batch(1 + rng.below(7), 1 + rng.below(17), rng);
        auto b = a;
        const auto p = sample_pauli_string(a.n, rng);
        const double theta = rng.uniform(-4.0, 4.0);
        ref.exp_pauli(a.re.data(), a.im.data(), a.dim, a.stride, masks(p), std::cos(theta), std::sin(theta));
        simd->exp_pauli(b.re.data(), b.im.data(), b.dim, b.stride, masks(p), std::cos(theta), std::sin(theta));
        ASSERT_EQ(a.re, b.re);
        ASSERT_EQ(a.im, b.im);

        std::vector<double> r1(a.stride), i1(a.stride), r2(a.stride), i2(a.stride);
        ref.expect_pauli(a.re.data(), a.im.data(), a.dim, a.stride, masks(p), r1.data(), i1.data());
        simd->expect_pauli(a.re.data(), a.im.data(), a.dim, a.stride, masks(p), r2.data(), i2.data());
        ASSERT_EQ(r1, r2);
        ASSERT_EQ(i1, i2);

        const std::size_t rows = 1 + rng.below(a.lanes);
        std::vector<double> g1(rows * a.stride), g2(rows * a.stride);
        ref.gram_pauli(a.re.data(), a.im.data(), a.dim, a.stride, rows, masks(p), g1.data());
        simd->gram_pauli(a.re.data(), a.im.data(), a.dim, a.stride, rows, masks(p), g2.data());
        ASSERT_EQ(g1, g2);
    }
}

TEST(Kernels, SelectSwitchesActiveTable) {
    const auto &orig = kernels::active();
    ASSERT_TRUE(kernels::select(kernels::Isa::kScalar));
    EXPECT_EQ(&kernels::active(), &kernels::scalar_table());
    if (kernels::avx2_table() != nullptr) {
        ASSERT_TRUE(kernels::select(kernels::Isa::kAvx2));
        EXPECT_EQ(&kernels::active(), kernels::avx2_table());
    } else {
        EXPECT_FALSE(kernels::select(kernels::Isa::kAvx2));
    }
    kernels::select(&orig == &kernels::scalar_table() ? kernels::Isa::kScalar : kernels::Isa::kAvx2);
}
