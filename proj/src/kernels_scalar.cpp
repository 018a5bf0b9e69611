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

#include "kernels_impl.hpp"

namespace pqcrad::kernels {

namespace {

// Lane loops below are the reference semantics. The AVX2 file repeats each
// expression with 4-wide vectors; keep the two in step.

void exp_pauli_scalar(double *re, double *im, std::size_t dim, std::size_t stride, PauliMasks p,
                      double c, double s) {
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ p.x;
        if (j < i) {
            continue;
        }
        if (j == i) {
            const GatePhase w = exp_phase(i, p);
            const double a = w.negative ? -s : s;
            double *ri = re + i * stride;
            double *ii = im + i * stride;
            for (std::size_t b = 0; b < stride; ++b) {
                const double r0 = ri[b];
                const double i0 = ii[b];
                if (w.imaginary) {
                    ri[b] = c * r0 - a * i0;
                    ii[b] = c * i0 + a * r0;
                } else {
                    ri[b] = c * r0 + a * r0;
                    ii[b] = c * i0 + a * i0;
                }
            }
            continue;
        }
        const GatePhase wi = exp_phase(j, p);
        const GatePhase wj = exp_phase(i, p);
        const double ai = wi.negative ? -s : s;
        const double aj = wj.negative ? -s : s;
        double *ri = re + i * stride;
        double *ii = im + i * stride;
        double *rj = re + j * stride;
        double *ij = im + j * stride;
        for (std::size_t b = 0; b < stride; ++b) {
            const double r0 = ri[b];
            const double i0 = ii[b];
            const double r1 = rj[b];
            const double i1 = ij[b];
            if (wi.imaginary) {
                ri[b] = c * r0 - ai * i1;
                ii[b] = c * i0 + ai * r1;
            } else {
                ri[b] = c * r0 + ai * r1;
                ii[b] = c * i0 + ai * i1;
            }
            if (wj.imaginary) {
                rj[b] = c * r1 - aj * i0;
                ij[b] = c * i1 + aj * r0;
            } else {
                rj[b] = c * r1 + aj * r0;
                ij[b] = c * i1 + aj * i0;
            }
        }
    }
}

void expect_pauli_scalar(const double *re, const double *im, std::size_t dim, std::size_t stride,
                         PauliMasks p, double *out_re, double *out_im) {
    for (std::size_t b = 0; b < stride; ++b) {
        out_re[b] = 0.0;
        out_im[b] = 0.0;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ p.x;
        const GatePhase ph = observable_phase(j, p);
        const double *ri = re + i * stride;
        const double *ii = im + i * stride;
        const double *rj = re + j * stride;
        const double *ij = im + j * stride;
        for (std::size_t b = 0; b < stride; ++b) {
            // conj(psi_i) psi_j = pr + i pq
            const double pr = ri[b] * rj[b] + ii[b] * ij[b];
            const double pq = ri[b] * ij[b] - ii[b] * rj[b];
            if (ph.imaginary) {
                out_re[b] = ph.negative ? out_re[b] + pq : out_re[b] - pq;
                out_im[b] = ph.negative ? out_im[b] - pr : out_im[b] + pr;
            } else {
                out_re[b] = ph.negative ? out_re[b] - pr : out_re[b] + pr;
                out_im[b] = ph.negative ? out_im[b] - pq : out_im[b] + pq;
            }
        }
    }
}

void gram_pauli_scalar(const double *re, const double *im, std::size_t dim, std::size_t stride,
                       std::size_t rows, PauliMasks p, double *out) {
    for (std::size_t k = 0; k < rows * stride; ++k) {
        out[k] = 0.0;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ p.x;
        const GatePhase ph = observable_phase(j, p);
        const double *ri = re + i * stride;
        const double *ii = im + i * stride;
        const double *rj = re + j * stride;
        const double *ij = im + j * stride;
        for (std::size_t u = 0; u < rows; ++u) {
            const double ur = ri[u];
            const double ui = ii[u];
            double *o = out + u * stride;
            for (std::size_t b = 0; b < stride; ++b) {
                if (ph.imaginary) {
                    const double t = ur * ij[b] - ui * rj[b];
                    o[b] = ph.negative ? o[b] + t : o[b] - t;
                } else {
                    const double t = ur * rj[b] + ui * ij[b];
                    o[b] = ph.negative ? o[b] - t : o[b] + t;
                }
            }
        }
    }
}

} // namespace

const KernelTable &scalar_table() noexcept {
    static const KernelTable table{"scalar", &exp_pauli_scalar, &expect_pauli_scalar,
                                   &gram_pauli_scalar};
    return table;
}

} // namespace pqcrad::kernels
