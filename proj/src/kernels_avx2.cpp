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

// Built with -mavx2 only (no FMA) so every lane rounds like the scalar path.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace pqcrad::kernels {

namespace {

void exp_pauli_avx2(double *re, double *im, std::size_t dim, std::size_t stride, PauliMasks p,
                    double c, double s) {
    const __m256d vc = _mm256_set1_pd(c);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ p.x;
        if (j < i) {
            continue;
        }
        if (j == i) {
            const GatePhase w = exp_phase(i, p);
            const __m256d va = _mm256_set1_pd(w.negative ? -s : s);
            double *ri = re + i * stride;
            double *ii = im + i * stride;
            for (std::size_t b = 0; b < stride; b += 4) {
                const __m256d r0 = _mm256_loadu_pd(ri + b);
                const __m256d i0 = _mm256_loadu_pd(ii + b);
                if (w.imaginary) {
                    _mm256_storeu_pd(ri + b, _mm256_sub_pd(_mm256_mul_pd(vc, r0), _mm256_mul_pd(va, i0)));
                    _mm256_storeu_pd(ii + b, _mm256_add_pd(_mm256_mul_pd(vc, i0), _mm256_mul_pd(va, r0)));
                } else {
                    _mm256_storeu_pd(ri + b, _mm256_add_pd(_mm256_mul_pd(vc, r0), _mm256_mul_pd(va, r0)));
                    _mm256_storeu_pd(ii + b, _mm256_add_pd(_mm256_mul_pd(vc, i0), _mm256_mul_pd(va, i0)));
                }
            }
            continue;
        }
        const GatePhase wi = exp_phase(j, p);
        const GatePhase wj = exp_phase(i, p);
        const __m256d ai = _mm256_set1_pd(wi.negative ? -s : s);
        const __m256d aj = _mm256_set1_pd(wj.negative ? -s : s);
        double *ri = re + i * stride;
        double *ii = im + i * stride;
        double *rj = re + j * stride;
        double *ij = im + j * stride;
        for (std::size_t b = 0; b < stride; b += 4) {
            const __m256d r0 = _mm256_loadu_pd(ri + b);
            const __m256d i0 = _mm256_loadu_pd(ii + b);
            const __m256d r1 = _mm256_loadu_pd(rj + b);
            const __m256d i1 = _mm256_loadu_pd(ij + b);
            if (wi.imaginary) {
                _mm256_storeu_pd(ri + b, _mm256_sub_pd(_mm256_mul_pd(vc, r0), _mm256_mul_pd(ai, i1)));
                _mm256_storeu_pd(ii + b, _mm256_add_pd(_mm256_mul_pd(vc, i0), _mm256_mul_pd(ai, r1)));
            } else {
                _mm256_storeu_pd(ri + b, _mm256_add_pd(_mm256_mul_pd(vc, r0), _mm256_mul_pd(ai, r1)));
                _mm256_storeu_pd(ii + b, _mm256_add_pd(_mm256_mul_pd(vc, i0), _mm256_mul_pd(ai, i1)));
            }
            if (wj.imaginary) {
                _mm256_storeu_pd(rj + b, _mm256_sub_pd(_mm256_mul_pd(vc, r1), _mm256_mul_pd(aj, i0)));
                _mm256_storeu_pd(ij + b, _mm256_add_pd(_mm256_mul_pd(vc, i1), _mm256_mul_pd(aj, r0)));
            } else {
                _mm256_storeu_pd(rj + b, _mm256_add_pd(_mm256_mul_pd(vc, r1), _mm256_mul_pd(aj, r0)));
                _mm256_storeu_pd(ij + b, _mm256_add_pd(_mm256_mul_pd(vc, i1), _mm256_mul_pd(aj, i0)));
            }
        }
    }
}

void expect_pauli_avx2(const double *re, const double *im, std::size_t dim, std::size_t stride,
                       PauliMasks p, double *out_re, double *out_im) {
    for (std::size_t b = 0; b < stride; b += 4) {
        _mm256_storeu_pd(out_re + b, _mm256_setzero_pd());
        _mm256_storeu_pd(out_im + b, _mm256_setzero_pd());
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ p.x;
        const GatePhase ph = observable_phase(j, p);
        const double *ri = re + i * stride;
        const double *ii = im + i * stride;
        const double *rj = re + j * stride;
        const double *ij = im + j * stride;
        for (std::size_t b = 0; b < stride; b += 4) {
            const __m256d vri = _mm256_loadu_pd(ri + b);
            const __m256d vii = _mm256_loadu_pd(ii + b);
            const __m256d vrj = _mm256_loadu_pd(rj + b);
            const __m256d vij = _mm256_loadu_pd(ij + b);
            const __m256d pr = _mm256_add_pd(_mm256_mul_pd(vri, vrj), _mm256_mul_pd(vii, vij));
            const __m256d pq = _mm256_sub_pd(_mm256_mul_pd(vri, vij), _mm256_mul_pd(vii, vrj));
            __m256d acc_re = _mm256_loadu_pd(out_re + b);
            __m256d acc_im = _mm256_loadu_pd(out_im + b);
            if (ph.imaginary) {
                acc_re = ph.negative ? _mm256_add_pd(acc_re, pq) : _mm256_sub_pd(acc_re, pq);
                acc_im = ph.negative ? _mm256_sub_pd(acc_im, pr) : _mm256_add_pd(acc_im, pr);
            } else {
                acc_re = ph.negative ? _mm256_sub_pd(acc_re, pr) : _mm256_add_pd(acc_re, pr);
                acc_im = ph.negative ? _mm256_sub_pd(acc_im, pq) : _mm256_add_pd(acc_im, pq);
            }
            _mm256_storeu_pd(out_re + b, acc_re);
            _mm256_storeu_pd(out_im + b, acc_im);
        }
    }
}

void gram_pauli_avx2(const double *re, const double *im, std::size_t dim, std::size_t stride,
                     std::size_t rows, PauliMasks p, double *out) {
    for (std::size_t k = 0; k < rows * stride; k += 4) {
        _mm256_storeu_pd(out + k, _mm256_setzero_pd());
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ p.x;
        const GatePhase ph = observable_phase(j, p);
        const double *ri = re + i * stride;
        const double *ii = im + i * stride;
        const double *rj = re + j * stride;
        const double *ij = im + j * stride;
        for (std::size_t u = 0; u < rows; ++u) {
            const __m256d ur = _mm256_set1_pd(ri[u]);
            const __m256d ui = _mm256_set1_pd(ii[u]);
            double *o = out + u * stride;
            for (std::size_t b = 0; b < stride; b += 4) {
                const __m256d vr = _mm256_loadu_pd(rj + b);
                const __m256d vi = _mm256_loadu_pd(ij + b);
                __m256d acc = _mm256_loadu_pd(o + b);
                if (ph.imaginary) {
                    const __m256d t = _mm256_sub_pd(_mm256_mul_pd(ur, vi), _mm256_mul_pd(ui, vr));
                    acc = ph.negative ? _mm256_add_pd(acc, t) : _mm256_sub_pd(acc, t);
                } else {
                    const __m256d t = _mm256_add_pd(_mm256_mul_pd(ur, vr), _mm256_mul_pd(ui, vi));
                    acc = ph.negative ? _mm256_sub_pd(acc, t) : _mm256_add_pd(acc, t);
                }
                _mm256_storeu_pd(o + b, acc);
            }
        }
    }
}

} // namespace

const KernelTable &avx2_table_unchecked() noexcept {
    static const KernelTable table{"avx2", &exp_pauli_avx2, &expect_pauli_avx2, &gram_pauli_avx2};
    return table;
}

} // namespace pqcrad::kernels
