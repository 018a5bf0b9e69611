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

#include "pqcrad/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "pqcrad/kernels.hpp"

namespace pqcrad {

namespace {

kernels::PauliMasks masks_of(const PauliString &p) noexcept {
    return {p.x_mask(), p.z_mask(), p.y_count()};
}

void check_theta(const CircuitModel &model, std::span<const double> theta) {
    if (theta.size() != model.num_params()) {
        throw std::invalid_argument("theta has length " + std::to_string(theta.size()) +
                                    " but the model has " + std::to_string(model.num_params()) +
                                    " parameters");
    }
}

double checked_expectation(double re, double im) {
    if (!(std::abs(im) <= kExpectationSlack) || !(std::abs(re) <= 1.0 + kExpectationSlack)) {
        throw std::logic_error("expectation value (" + std::to_string(re) + ", " +
                               std::to_string(im) +
                               ") is not a real number in [-1, 1]; simulator kernel fault");
    }
    return re;
}

// Powers c^k and s^k for k <= 2n, then out[m] = c^(top - m) s^m.
void half_angle_powers(std::size_t top, double x, std::span<double> out) {
    const double c = std::cos(0.5 * x);
    const double s = std::sin(0.5 * x);
    double cp[2 * StateVector::kMaxQubits + 1];
    double sp[2 * StateVector::kMaxQubits + 1];
    cp[0] = 1.0;
    sp[0] = 1.0;
    for (std::size_t k = 1; k <= top; ++k) {
        cp[k] = cp[k - 1] * c;
        sp[k] = sp[k - 1] * s;
    }
    for (std::size_t m = 0; m <= top; ++m) {
        out[m] = cp[top - m] * sp[m];
    }
}

} // namespace

std::string_view to_string(Encoding e) noexcept {
    switch (e) {
    case Encoding::kRyProduct:
        return "ry-product";
    }
    return "unknown";
}

Encoding parse_encoding(std::string_view text) {
    if (text == "ry-product") {
        return Encoding::kRyProduct;
    }
    throw std::invalid_argument("unknown encoding \"" + std::string(text) + "\"");
}

CircuitModel::CircuitModel(std::size_t n_qubits, std::vector<PauliString> generators,
                           PauliString observable, Encoding encoding)
    : n_qubits_(n_qubits), generators_(std::move(generators)), observable_(std::move(observable)),
      encoding_(encoding) {
    if (n_qubits_ < 1 || n_qubits_ > StateVector::kMaxQubits) {
        throw std::invalid_argument("CircuitModel: n_qubits out of range");
    }
    if (observable_.n_qubits() != n_qubits_) {
        throw std::invalid_argument("CircuitModel: observable " + observable_.to_string() +
                                    " does not act on " + std::to_string(n_qubits_) + " qubits");
    }
    for (std::size_t j = 0; j < generators_.size(); ++j) {
        const PauliString &g = generators_[j];
        if (g.n_qubits() != n_qubits_) {
            throw std::invalid_argument("CircuitModel: generator " + std::to_string(j) + " (" +
                                        g.to_string() + ") does not act on " +
                                        std::to_string(n_qubits_) + " qubits");
        }
        if (g.is_identity()) {
            throw std::invalid_argument("CircuitModel: generator " + std::to_string(j) +
                                        " is the all-identity string");
        }
    }
}

CircuitModel CircuitModel::sample(std::size_t n_qubits, std::size_t num_params, Stream &rng) {
    std::vector<PauliString> gens;
    gens.reserve(num_params);
    for (std::size_t j = 0; j < num_params; ++j) {
        gens.push_back(sample_pauli_string(n_qubits, rng));
    }
    return CircuitModel(n_qubits, std::move(gens), PauliString::single(n_qubits, 0, Pauli::Z));
}

StateVector encode_input(const CircuitModel &model, double x) {
    const std::size_t n = model.n_qubits();
    std::vector<double> mono(n + 1);
    half_angle_powers(n, x, mono);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = mono[static_cast<std::size_t>(__builtin_popcountll(i))];
    }
    return StateVector(n, std::move(amps));
}

Evaluator::Evaluator(const CircuitModel &model)
    : model_(model), phi_(model.n_qubits()), shifted_(model.num_params()) {}

double Evaluator::evaluate(double x, std::span<const double> theta) {
    check_theta(model_, theta);
    const std::size_t n = model_.n_qubits();
    double mono[StateVector::kMaxQubits + 1];
    half_angle_powers(n, x, std::span<double>(mono, n + 1));
    auto amps = phi_.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = mono[static_cast<std::size_t>(__builtin_popcountll(i))];
    }
    const auto &gens = model_.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        apply_exp_pauli_inplace(gens[j], theta[j], phi_);
    }
    const Complex e = expectation(model_.observable(), phi_);
    return checked_expectation(e.real(), e.imag());
}

void Evaluator::gradient(double x, std::span<const double> theta, std::span<double> out) {
    check_theta(model_, theta);
    if (out.size() != theta.size()) {
        throw std::invalid_argument("gradient output has the wrong length");
    }
    constexpr double kShift = std::numbers::pi / 4.0;
    std::copy(theta.begin(), theta.end(), shifted_.begin());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        shifted_[j] = theta[j] + kShift;
        const double plus = evaluate(x, shifted_);
        shifted_[j] = theta[j] - kShift;
        const double minus = evaluate(x, shifted_);
        shifted_[j] = theta[j];
        out[j] = plus - minus;
    }
}

std::vector<double> Evaluator::gradient(double x, std::span<const double> theta) {
    std::vector<double> out(theta.size());
    gradient(x, theta, out);
    return out;
}

double evaluate(const CircuitModel &model, double x, std::span<const double> theta) {
    Evaluator ev(model);
    return ev.evaluate(x, theta);
}

std::vector<double> gradient(const CircuitModel &model, double x, std::span<const double> theta) {
    Evaluator ev(model);
    return ev.gradient(x, theta);
}

LipschitzCertificate lipschitz_certificate(const CircuitModel &model, std::size_t n_samples,
                                           Stream &rng) {
    if (n_samples < 1) {
        throw std::invalid_argument("lipschitz_certificate: n_samples must be >= 1");
    }
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    Evaluator ev(model);
    std::vector<double> theta(model.num_params());
    std::vector<double> grad(model.num_params());
    LipschitzCertificate cert;
    cert.samples = n_samples;
    for (std::size_t s = 0; s < n_samples; ++s) {
        const double x = rng.uniform(0.0, kTwoPi);
        for (double &t : theta) {
            t = rng.uniform(0.0, kTwoPi);
        }
        ev.gradient(x, theta, grad);
        double sq = 0.0;
        for (double g : grad) {
            sq += g * g;
            cert.max_abs_partial = std::max(cert.max_abs_partial, std::abs(g));
        }
        cert.max_gradient_norm = std::max(cert.max_gradient_norm, std::sqrt(sq));
    }
    return cert;
}

BatchEvaluator::BatchEvaluator(const CircuitModel &model) : model_(model) {
    const std::size_t dim = std::size_t{1} << model_.n_qubits();
    re_.resize(dim * kChunk);
    im_.resize(dim * kChunk);
    out_re_.resize(kChunk);
    out_im_.resize(kChunk);
}

void BatchEvaluator::evaluate(std::span<const double> xs, std::span<const double> theta,
                              std::span<double> out) {
    check_theta(model_, theta);
    if (out.size() != xs.size()) {
        throw std::invalid_argument("BatchEvaluator: output length differs from input length");
    }
    const kernels::KernelTable &k = kernels::active();
    const std::size_t n = model_.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    const auto &gens = model_.generators();
    std::vector<double> cos_t(gens.size());
    std::vector<double> sin_t(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        cos_t[j] = std::cos(theta[j]);
        sin_t[j] = std::sin(theta[j]);
    }
    double mono[StateVector::kMaxQubits + 1];

    for (std::size_t base = 0; base < xs.size(); base += kChunk) {
        const std::size_t lanes = std::min(kChunk, xs.size() - base);
        const std::size_t stride = kernels::padded_lanes(lanes);
        for (std::size_t b = 0; b < stride; ++b) {
            // Padding lanes replay the last input.
            const double x = xs[base + std::min(b, lanes - 1)];
            half_angle_powers(n, x, std::span<double>(mono, n + 1));
            for (std::size_t i = 0; i < dim; ++i) {
                re_[i * stride + b] = mono[static_cast<std::size_t>(__builtin_popcountll(i))];
                im_[i * stride + b] = 0.0;
            }
        }
        for (std::size_t j = 0; j < gens.size(); ++j) {
            k.exp_pauli(re_.data(), im_.data(), dim, stride, masks_of(gens[j]), cos_t[j], sin_t[j]);
        }
        k.expect_pauli(re_.data(), im_.data(), dim, stride, masks_of(model_.observable()),
                       out_re_.data(), out_im_.data());
        for (std::size_t b = 0; b < lanes; ++b) {
            out[base + b] = checked_expectation(out_re_[b], out_im_[b]);
        }
    }
}

MomentEvaluator::MomentEvaluator(const CircuitModel &model)
    : n_(model.n_qubits()), model_(model), stride_(kernels::padded_lanes(n_ + 1)) {
    const std::size_t dim = std::size_t{1} << n_;
    init_re_.assign(dim * stride_, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        init_re_[i * stride_ + static_cast<std::size_t>(__builtin_popcountll(i))] = 1.0;
    }
    re_.resize(dim * stride_);
    im_.resize(dim * stride_);
    gram_.resize((n_ + 1) * stride_);
    coeffs_.resize(2 * n_ + 1);
    mono_.resize(2 * n_ + 1);
}

std::span<const double> MomentEvaluator::coefficients(std::span<const double> theta) {
    check_theta(model_, theta);
    const kernels::KernelTable &k = kernels::active();
    const std::size_t dim = std::size_t{1} << n_;
    std::copy(init_re_.begin(), init_re_.end(), re_.begin());
    std::fill(im_.begin(), im_.end(), 0.0);
    const auto &gens = model_.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        k.exp_pauli(re_.data(), im_.data(), dim, stride_, masks_of(gens[j]), std::cos(theta[j]),
                    std::sin(theta[j]));
    }
    k.gram_pauli(re_.data(), im_.data(), dim, stride_, n_ + 1, masks_of(model_.observable()),
                 gram_.data());
    for (std::size_t m = 0; m <= 2 * n_; ++m) {
        double acc = 0.0;
        const std::size_t u_lo = m > n_ ? m - n_ : 0;
        const std::size_t u_hi = std::min(m, n_);
        for (std::size_t u = u_lo; u <= u_hi; ++u) {
            acc += gram_[u * stride_ + (m - u)];
        }
        coeffs_[m] = acc;
    }
    return coeffs_;
}

void MomentEvaluator::monomials(std::size_t n_qubits, double x, std::span<double> out) {
    if (out.size() != 2 * n_qubits + 1) {
        throw std::invalid_argument("monomials: output must have 2n + 1 entries");
    }
    half_angle_powers(2 * n_qubits, x, out);
}

double MomentEvaluator::evaluate(double x, std::span<const double> theta) {
    const auto b = coefficients(theta);
    monomials(n_, x, mono_);
    double acc = 0.0;
    for (std::size_t m = 0; m < b.size(); ++m) {
        acc += b[m] * mono_[m];
    }
    return acc;
}

} // namespace pqcrad
