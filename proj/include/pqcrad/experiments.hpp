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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pqcrad/analysis.hpp"
#include "pqcrad/csv.hpp"
#include "pqcrad/executor.hpp"
#include "pqcrad/rademacher.hpp"
#include "pqcrad/training.hpp"

namespace pqcrad::experiments {

/// `paper` is the full-size configuration; `desk` keeps the protocol but
/// cuts candidate and trial counts so a run finishes in minutes on one core.
enum class Preset { kPaper, kDesk };

[[nodiscard]] Preset parse_preset(std::string_view text);
[[nodiscard]] std::string_view to_string(Preset p) noexcept;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

[[nodiscard]] nlohmann::json to_json(const EstimatorConfig &cfg);
[[nodiscard]] nlohmann::json to_json(const SpsaConfig &cfg);
[[nodiscard]] nlohmann::json to_json(const GapSettings &s);
[[nodiscard]] nlohmann::json to_json(const analysis::RegressionResult &r);

/// Applies the keys present in `j` on top of `cfg` (same names as to_json).
void apply_json(const nlohmann::json &j, EstimatorConfig &cfg);
void apply_json(const nlohmann::json &j, GapSettings &s);

// ---------------------------------------------------------------------------
// Complexity versus sample size at fixed L.

struct ScalingMSpec {
    EstimatorConfig base;
    std::vector<std::size_t> sample_sizes;
};

[[nodiscard]] ScalingMSpec scaling_m_preset(Preset p);

struct ScalingMResult {
    ScalingMSpec spec;
    std::vector<RademacherEstimate> estimates;
    analysis::RegressionResult fit; // ln g_ave against ln M
};

[[nodiscard]] ScalingMResult run_scaling_m(const ScalingMSpec &spec, const Executor &exec);

// ---------------------------------------------------------------------------
// Complexity versus L on the full and restricted parameter boxes.

struct ScalingLSpec {
    /// n_theta is the per-parameter base: candidate count is n_theta * L.
    EstimatorConfig base;
    std::vector<std::size_t> param_counts;
};

[[nodiscard]] ScalingLSpec scaling_l_preset(Preset p);

struct ScalingLResult {
    ScalingLSpec spec;
    std::vector<RademacherEstimate> full;
    std::vector<RademacherEstimate> restricted;
    analysis::RegressionResult fit_full;
    analysis::RegressionResult fit_restricted;
};

[[nodiscard]] ScalingLResult run_scaling_l(const ScalingLSpec &spec, const Executor &exec);

// ---------------------------------------------------------------------------
// Running mean of the per-trial maxima as trials accumulate.

struct ConvergenceSpec {
    EstimatorConfig base; // n_theta is the per-parameter base
    std::vector<std::size_t> param_counts;
};

[[nodiscard]] ConvergenceSpec convergence_preset(Preset p);

struct ConvergenceResult {
    ConvergenceSpec spec;
    std::vector<RademacherEstimate> estimates;
    /// prefix_means[i][n - 1] = mean of the first n trial values for L_i.
    std::vector<std::vector<double>> prefix_means;
};

[[nodiscard]] ConvergenceResult run_convergence(const ConvergenceSpec &spec, const Executor &exec);

/// prefix[n - 1] = mean(values[0..n)).
[[nodiscard]] std::vector<double> prefix_means(std::span<const double> values);

// ---------------------------------------------------------------------------
// Generalization gap after SPSA training.

[[nodiscard]] GapSettings gap_preset(Preset p);

struct GapResult {
    GapSettings settings;
    GapTable table;
};

[[nodiscard]] GapResult run_gap(const GapSettings &settings, const Executor &exec);

// ---------------------------------------------------------------------------
// Output. Each writer returns the CSV tables it produced (name -> table) so
// callers and tests can compare contents without touching the disk.

struct Output {
    std::string name; // file stem, e.g. "scaling_m"
    csv::Table table;
};

[[nodiscard]] std::vector<Output> tables(const ScalingMResult &r);
[[nodiscard]] std::vector<Output> tables(const ScalingLResult &r);
[[nodiscard]] std::vector<Output> tables(const ConvergenceResult &r);
[[nodiscard]] std::vector<Output> tables(const GapResult &r);

/// Writes <dir>/<name>.csv for every table and <dir>/<kind>.manifest.json
/// holding the configuration, seed, version, thread count and wall time.
void write_outputs(const std::filesystem::path &dir, std::string_view kind,
                   const std::vector<Output> &outputs, const nlohmann::json &config,
                   std::size_t threads, double wall_seconds);

[[nodiscard]] std::string_view version() noexcept;

} // namespace pqcrad::experiments
