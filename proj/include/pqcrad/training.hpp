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
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pqcrad/analysis.hpp"
#include "pqcrad/executor.hpp"
#include "pqcrad/simulator.hpp"

namespace pqcrad {

/// Inputs labeled by a teacher circuit.
struct Dataset {
    std::vector<double> inputs;
    std::vector<double> targets;
    CircuitModel target_model;
    std::vector<double> target_theta;
};

inline constexpr double kTeacherThetaHalfWidth = 0.01;

/// targets[j] = f_teacher(inputs[j]; teacher_theta).
[[nodiscard]] Dataset label_inputs(const CircuitModel &teacher, std::vector<double> teacher_theta,
                                   std::vector<double> inputs);

/// Teacher with random non-identity generators and observable Z(0),
/// theta* ~ U(-0.01, 0.01)^L, then M inputs x ~ U(0, 2 pi). Draw order:
/// generators, theta*, inputs.
[[nodiscard]] Dataset generate_dataset(std::size_t n_qubits, std::size_t num_params,
                                       std::size_t num_samples, Stream &rng);

/// Same, with theta* forced to the given vector.
[[nodiscard]] Dataset generate_dataset(std::size_t n_qubits, std::size_t num_params,
                                       std::size_t num_samples, Stream &rng,
                                       std::span<const double> forced_theta);

struct SpsaConfig {
    double learning_rate = 0.01;
    double momentum = 0.5;
    std::size_t max_epochs = 5000;
    double rmse_stop = 1e-4;
    double perturbation = 0.01; // c
    std::uint64_t seed = 0;

    void validate() const;
};

enum class LossKind { kMse, kRmse };

[[nodiscard]] std::string_view to_string(LossKind k) noexcept;
[[nodiscard]] LossKind parse_loss_kind(std::string_view text);

struct SpsaTrace {
    std::vector<double> theta;
    std::size_t epochs_used = 0;
    bool converged = false;
    std::vector<double> loss_trace; // objective at the start of each epoch
};

/// First-order SPSA with velocity momentum and fixed perturbation size:
/// each epoch checks objective(theta) < stop_below, then draws
/// Delta in {-1, +1}^L from `rng`, forms
/// g = (objective(theta + c Delta) - objective(theta - c Delta)) / (2c) * Delta,
/// and updates v <- momentum v + g, theta <- theta - lr v.
[[nodiscard]] SpsaTrace spsa_minimize(const std::function<double(std::span<const double>)> &objective,
                                      std::vector<double> theta, const SpsaConfig &cfg,
                                      Stream &rng, double stop_below);

struct TrainingRun {
    std::vector<double> initial_theta;
    std::vector<double> final_theta;
    double train_rmse = 0.0;
    double test_rmse = 0.0;
    LossKind loss = LossKind::kRmse;
    double train_loss = 0.0;
    double test_loss = 0.0;
    double gap = 0.0; // test_loss - train_loss
    std::size_t epochs_used = 0;
    std::vector<double> loss_trace; // train RMSE per epoch
};

/// Initial parameters spsa_fit will use: U(-1, 1)^L from
/// substream(seed, "student").
[[nodiscard]] std::vector<double> spsa_initial_theta(const SpsaConfig &cfg, std::size_t num_params);

/// Mean squared error of the model at theta over the dataset.
[[nodiscard]] double mean_squared_error(BatchEvaluator &eval, const Dataset &data,
                                        std::span<const double> theta,
                                        std::vector<double> &scratch);

/// Fits `student` to `train` by minimizing the MSE with SPSA, stopping once
/// the training RMSE drops below cfg.rmse_stop. Without a test set the test
/// fields stay zero.
[[nodiscard]] TrainingRun spsa_fit(const CircuitModel &student, const Dataset &train,
                                   const SpsaConfig &cfg, const Dataset *test = nullptr,
                                   LossKind loss = LossKind::kRmse);

struct GapSettings {
    std::size_t n_qubits = 5;
    std::vector<std::size_t> num_params_values{4, 5, 8};
    std::vector<std::size_t> num_samples_values{25, 100};
    std::size_t repeats = 20;
    std::size_t test_size = 1000;
    SpsaConfig spsa; // seed is replaced per cell
    LossKind loss = LossKind::kRmse;
    std::uint64_t seed = 0;
};

struct GapRow {
    std::size_t num_params = 0;
    std::size_t num_samples = 0;
    std::size_t repeat = 0;
    double train_loss = 0.0;
    double test_loss = 0.0;
    double gap = 0.0;
    std::size_t epochs_used = 0;
};

struct GapCell {
    std::size_t num_params = 0;
    std::size_t num_samples = 0;
    analysis::BoxStats gaps;
};

struct GapTable {
    std::vector<GapRow> rows; // ordered by (L, M, repeat) as given
    std::vector<GapCell> cells;
};

/// Each (L, M, repeat) cell draws from substream(seed, "data", L, M, repeat):
/// a teacher dataset of size M, a test set of test_size inputs labeled by the
/// same teacher, an independently sampled student with the same n and L, and
/// the SPSA seed. Cells run in parallel and are independent.
[[nodiscard]] GapTable gap_experiment(const GapSettings &settings, const Executor &exec);

} // namespace pqcrad
