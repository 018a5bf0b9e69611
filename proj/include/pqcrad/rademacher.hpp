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
#include <span>
#include <string_view>
#include <vector>

#include "pqcrad/executor.hpp"
#include "pqcrad/simulator.hpp"

namespace pqcrad {

enum class ModelSource {
    /// One model for the whole run (drawn from the seed unless supplied).
    kFixed,
    /// New generators for every trial; only n_qubits and the observable of the
    /// supplied model are used.
    kResampledPerTrial,
};

enum class EstimatorRoute {
    /// Polynomial-coefficient evaluation (MomentEvaluator); cost per theta is
    /// independent of n_data.
    kMoments,
    /// One state evolution per (x_j, theta) on the batched SIMD kernels.
    kDirect,
};

[[nodiscard]] std::string_view to_string(ModelSource s) noexcept;
[[nodiscard]] std::string_view to_string(EstimatorRoute r) noexcept;

inline constexpr double kDefaultEvalBudget = 1e10;

/// Largest n_data the exact sign enumeration accepts.
inline constexpr std::size_t kMaxExactSigmaData = 20;

/// Inputs of the random-search estimator.
struct EstimatorConfig {
    std::size_t n_trials = 100;
    std::size_t n_data = 200;   // plays the role of M
    std::size_t n_theta = 1000; // candidates per trial
    std::size_t num_params = 5; // L
    double scale = 1.0;         // theta_j ~ U(0, 2 pi scale)
    std::size_t n_qubits = 5;
    std::uint64_t seed = 0;
    ModelSource model_source = ModelSource::kFixed;
    /// Replace the sampled sign vector of each trial by the exact average over
    /// all 2^n_data sign patterns.
    bool exact_sigma = false;
    EstimatorRoute route = EstimatorRoute::kMoments;
    double eval_budget = kDefaultEvalBudget;

    /// n_trials * n_theta * n_data.
    [[nodiscard]] double evaluation_count() const noexcept;

    /// Throws std::invalid_argument on bad counts or scale and
    /// BudgetExceeded when evaluation_count() > eval_budget.
    void validate() const;
};

struct RademacherEstimate {
    double g_ave = 0.0;
    double g_err = 0.0;
    std::vector<double> per_trial_values;
    EstimatorConfig config;
};

/// Scale realizing the restricted box: theta_j ~ U(0, 1/sqrt(L)).
[[nodiscard]] double restricted_scale(std::size_t num_params);

/// The fixed model a run uses when none is supplied: generators drawn from
/// substream(seed, "model", L), observable Z on qubit 0.
[[nodiscard]] CircuitModel sample_fixed_model(const EstimatorConfig &cfg);

/// Random-search lower approximation of the dataset-averaged empirical
/// Rademacher complexity.
///
/// Trial t draws x_j ~ U(0, 2 pi) and then sigma_j from substream(seed,
/// "trial", t); candidate k draws theta from substream(seed, "theta", t, k).
/// The trial value is max_k (1/n_data) sum_j sigma_j f(x_j; theta_k). Work is
/// split over trials and blocks of candidates; since a maximum does not
/// depend on evaluation order, per_trial_values are bit-identical for every
/// worker count.
[[nodiscard]] RademacherEstimate estimate(const EstimatorConfig &cfg, const CircuitModel &model,
                                          const Executor &exec);

/// Same, with sample_fixed_model(cfg).
[[nodiscard]] RademacherEstimate estimate(const EstimatorConfig &cfg, const Executor &exec);

using ThetaSet = std::vector<std::vector<double>>;

/// table[k][j] = f(x_j; theta_k).
[[nodiscard]] std::vector<std::vector<double>>
function_table(const CircuitModel &model, const ThetaSet &theta_set, std::span<const double> x_set);

/// Exact E_sigma[max_k (1/N) sum_j sigma_j table[k][j]] over all 2^N sign
/// patterns (N <= 20). Patterns are summed in +/- pairs, so a single-row
/// table gives exactly zero.
[[nodiscard]] double enumerate_sigma(const std::vector<std::vector<double>> &table);

[[nodiscard]] double enumerate_sigma(const CircuitModel &model, const ThetaSet &theta_set,
                                     std::span<const double> x_set);

/// Monte Carlo over sign vectors only, with x and theta held fixed. Trial t
/// draws sigma from substream(seed, "sigma", t).
[[nodiscard]] RademacherEstimate estimate_sigma_only(const CircuitModel &model,
                                                     const ThetaSet &theta_set,
                                                     std::span<const double> x_set,
                                                     std::size_t n_trials, std::uint64_t seed);

enum class SweepKind {
    /// value = n_data.
    kSamples,
    /// value = L, n_theta = base.n_theta * L, scale = base.scale.
    kParams,
    /// value = L, n_theta = base.n_theta * L, scale = restricted_scale(L).
    kParamsRestricted,
};

/// Configuration of one sweep point after the coupling rules are applied.
[[nodiscard]] EstimatorConfig sweep_point(const EstimatorConfig &base, SweepKind kind,
                                          std::size_t value);

/// One estimate per sweep value; each point uses sample_fixed_model of its own
/// configuration, so points sharing L share the model.
[[nodiscard]] std::vector<RademacherEstimate>
estimate_scaling_sweep(const EstimatorConfig &base, SweepKind kind,
                       std::span<const std::size_t> values, const Executor &exec);

} // namespace pqcrad
