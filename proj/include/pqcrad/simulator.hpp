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
#include <span>
#include <string_view>
#include <vector>

#include "pqcrad/pauli.hpp"
#include "pqcrad/rng.hpp"

namespace pqcrad {

enum class Encoding {
    /// |psi(x)> = RY(x)^{(x)n} |0...0>, RY(x) = exp(-i x Y / 2).
    kRyProduct,
};

[[nodiscard]] std::string_view to_string(Encoding e) noexcept;
[[nodiscard]] Encoding parse_encoding(std::string_view text);

/// f(x; theta) = <psi(x)| U(theta)^dag O U(theta) |psi(x)> with
/// U(theta) = exp(-i theta_L G_L) ... exp(-i theta_1 G_1), i.e. gate 1 acts
/// first on the input state.
class CircuitModel {
  public:
    CircuitModel(std::size_t n_qubits, std::vector<PauliString> generators, PauliString observable,
                 Encoding encoding = Encoding::kRyProduct);

    /// Generators drawn with sample_pauli_string, observable Z on qubit 0.
    static CircuitModel sample(std::size_t n_qubits, std::size_t num_params, Stream &rng);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t num_params() const noexcept { return generators_.size(); }
    [[nodiscard]] const std::vector<PauliString> &generators() const noexcept { return generators_; }
    [[nodiscard]] const PauliString &observable() const noexcept { return observable_; }
    [[nodiscard]] Encoding encoding() const noexcept { return encoding_; }

  private:
    std::size_t n_qubits_;
    std::vector<PauliString> generators_;
    PauliString observable_;
    Encoding encoding_;
};

/// Absolute tolerance on the imaginary part of <phi|O|phi> and on |f| - 1.
inline constexpr double kExpectationSlack = 1e-10;

[[nodiscard]] StateVector encode_input(const CircuitModel &model, double x);

/// Single-input evaluation through the reference state-vector path. Owns two
/// scratch states, so one Evaluator per worker.
class Evaluator {
  public:
    explicit Evaluator(const CircuitModel &model);

    [[nodiscard]] double evaluate(double x, std::span<const double> theta);

    /// Exact gradient from the shift rule
    /// df/dtheta_j = f(theta + pi/4 e_j) - f(theta - pi/4 e_j), valid because
    /// every generator squares to the identity.
    void gradient(double x, std::span<const double> theta, std::span<double> out);
    [[nodiscard]] std::vector<double> gradient(double x, std::span<const double> theta);

    [[nodiscard]] const CircuitModel &model() const noexcept { return model_; }

  private:
    CircuitModel model_;
    StateVector phi_;
    std::vector<double> shifted_;
};

[[nodiscard]] double evaluate(const CircuitModel &model, double x, std::span<const double> theta);
[[nodiscard]] std::vector<double> gradient(const CircuitModel &model, double x,
                                           std::span<const double> theta);

struct LipschitzCertificate {
    double max_gradient_norm = 0.0;
    double max_abs_partial = 0.0;
    std::size_t samples = 0;
};

/// Largest ||grad_theta f||_2 over n_samples draws of x ~ U(0, 2 pi) and
/// theta ~ U(0, 2 pi)^L.
[[nodiscard]] LipschitzCertificate lipschitz_certificate(const CircuitModel &model,
                                                         std::size_t n_samples, Stream &rng);

/// Evaluates f at many inputs for one theta, one input per SIMD lane.
class BatchEvaluator {
  public:
    explicit BatchEvaluator(const CircuitModel &model);

    void evaluate(std::span<const double> xs, std::span<const double> theta, std::span<double> out);

    [[nodiscard]] const CircuitModel &model() const noexcept { return model_; }

  private:
    static constexpr std::size_t kChunk = 64;

    CircuitModel model_;
    std::vector<double> re_;
    std::vector<double> im_;
    std::vector<double> out_re_;
    std::vector<double> out_im_;
};

/// Polynomial form of f in the half-angle monomials of the input.
///
/// Amplitude i of the RY-product state is cos(x/2)^{n-w} sin(x/2)^w with
/// w = popcount(i), so
///   f(x; theta) = sum_{m=0}^{2n} B_m(theta) cos(x/2)^{2n-m} sin(x/2)^m,
///   B_m = sum_{u+v=m} Re <D_u| U^dag O U |D_v>,
/// where |D_w> is the unnormalized sum of basis states of Hamming weight w.
/// Getting B costs n+1 state evolutions per theta, independent of how many
/// inputs are later scored against it.
class MomentEvaluator {
  public:
    explicit MomentEvaluator(const CircuitModel &model);

    [[nodiscard]] std::size_t num_coefficients() const noexcept { return 2 * n_ + 1; }

    /// B(theta); the span is valid until the next call.
    [[nodiscard]] std::span<const double> coefficients(std::span<const double> theta);

    /// out[m] = cos(x/2)^{2n-m} sin(x/2)^m, out.size() == 2n + 1.
    static void monomials(std::size_t n_qubits, double x, std::span<double> out);

    [[nodiscard]] double evaluate(double x, std::span<const double> theta);

  private:
    std::size_t n_;
    CircuitModel model_;
    std::size_t stride_;
    std::vector<double> init_re_;
    std::vector<double> re_;
    std::vector<double> im_;
    std::vector<double> gram_;
    std::vector<double> coeffs_;
    std::vector<double> mono_;
};

} // namespace pqcrad
