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

#include "pqcrad/experiments.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "pqcrad/errors.hpp"

namespace pqcrad::experiments {

namespace {

nlohmann::json sweep_json(const std::vector<std::size_t> &v) { return nlohmann::json(v); }

analysis::RegressionResult fit_with_context(std::string_view what, std::span<const double> xs,
                                            std::span<const double> ys) {
    try {
        return analysis::loglog_fit(xs, ys);
    } catch (const InsufficientData &e) {
        throw InsufficientData(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

std::vector<double> g_aves(const std::vector<RademacherEstimate> &es) {
    std::vector<double> out;
    out.reserve(es.size());
    for (const auto &e : es) {
        out.push_back(e.g_ave);
    }
    return out;
}

std::vector<double> as_doubles(const std::vector<std::size_t> &v) {
    return std::vector<double>(v.begin(), v.end());
}

void add_fit_comment(csv::Table &t, std::string_view label, const analysis::RegressionResult &r) {
    t.add_comment(std::string(label) + ": " + to_json(r).dump());
}

ModelSource parse_model_source(const std::string &s) {
    if (s == "fixed") {
        return ModelSource::kFixed;
    }
    if (s == "resampled-per-trial") {
        return ModelSource::kResampledPerTrial;
    }
    throw std::invalid_argument("unknown model_source \"" + s + "\"");
}

EstimatorRoute parse_route(const std::string &s) {
    if (s == "moments") {
        return EstimatorRoute::kMoments;
    }
    if (s == "direct") {
        return EstimatorRoute::kDirect;
    }
    throw std::invalid_argument("unknown route \"" + s + "\"");
}

} // namespace

std::string_view version() noexcept { return PQCRAD_VERSION; }

Preset parse_preset(std::string_view text) {
    if (text == "paper") {
        return Preset::kPaper;
    }
    if (text == "desk") {
        return Preset::kDesk;
    }
    throw std::invalid_argument("unknown preset \"" + std::string(text) + "\" (expected paper or desk)");
}

std::string_view to_string(Preset p) noexcept { return p == Preset::kPaper ? "paper" : "desk"; }

nlohmann::json to_json(const EstimatorConfig &c) {
    return {{"n_trials", c.n_trials},
            {"n_data", c.n_data},
            {"n_theta", c.n_theta},
            {"L", c.num_params},
            {"scale", c.scale},
            {"n_qubits", c.n_qubits},
            {"seed", c.seed},
            {"model_source", std::string(to_string(c.model_source))},
            {"exact_sigma", c.exact_sigma},
            {"route", std::string(to_string(c.route))},
            {"eval_budget", c.eval_budget}};
}

nlohmann::json to_json(const SpsaConfig &c) {
    return {{"learning_rate", c.learning_rate}, {"momentum", c.momentum},
            {"max_epochs", c.max_epochs},       {"rmse_stop", c.rmse_stop},
            {"perturbation", c.perturbation}};
}

nlohmann::json to_json(const GapSettings &s) {
    return {{"n_qubits", s.n_qubits},
            {"L_values", sweep_json(s.num_params_values)},
            {"M_values", sweep_json(s.num_samples_values)},
            {"repeats", s.repeats},
            {"test_size", s.test_size},
            {"spsa", to_json(s.spsa)},
            {"loss", std::string(to_string(s.loss))},
            {"seed", s.seed}};
}

nlohmann::json to_json(const analysis::RegressionResult &r) {
    return {{"slope", r.slope},         {"intercept", r.intercept}, {"slope_stderr", r.slope_stderr},
            {"t_statistic", r.t_statistic}, {"p_value", r.p_value}, {"r_squared", r.r_squared},
            {"n_points", r.n_points}};
}

void apply_json(const nlohmann::json &j, EstimatorConfig &c) {
    if (j.contains("n_trials")) c.n_trials = j.at("n_trials").get<std::size_t>();
    if (j.contains("n_data")) c.n_data = j.at("n_data").get<std::size_t>();
    if (j.contains("n_theta")) c.n_theta = j.at("n_theta").get<std::size_t>();
    if (j.contains("L")) c.num_params = j.at("L").get<std::size_t>();
    if (j.contains("scale")) c.scale = j.at("scale").get<double>();
    if (j.contains("n_qubits")) c.n_qubits = j.at("n_qubits").get<std::size_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("model_source")) c.model_source = parse_model_source(j.at("model_source").get<std::string>());
    if (j.contains("exact_sigma")) c.exact_sigma = j.at("exact_sigma").get<bool>();
    if (j.contains("route")) c.route = parse_route(j.at("route").get<std::string>());
    if (j.contains("eval_budget")) c.eval_budget = j.at("eval_budget").get<double>();
}

void apply_json(const nlohmann::json &j, GapSettings &s) {
    if (j.contains("n_qubits")) s.n_qubits = j.at("n_qubits").get<std::size_t>();
    if (j.contains("L_values")) s.num_params_values = j.at("L_values").get<std::vector<std::size_t>>();
    if (j.contains("M_values")) s.num_samples_values = j.at("M_values").get<std::vector<std::size_t>>();
    if (j.contains("repeats")) s.repeats = j.at("repeats").get<std::size_t>();
    if (j.contains("test_size")) s.test_size = j.at("test_size").get<std::size_t>();
    if (j.contains("loss")) s.loss = parse_loss_kind(j.at("loss").get<std::string>());
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("spsa")) {
        const auto &p = j.at("spsa");
        if (p.contains("learning_rate")) s.spsa.learning_rate = p.at("learning_rate").get<double>();
        if (p.contains("momentum")) s.spsa.momentum = p.at("momentum").get<double>();
        if (p.contains("max_epochs")) s.spsa.max_epochs = p.at("max_epochs").get<std::size_t>();
        if (p.contains("rmse_stop")) s.spsa.rmse_stop = p.at("rmse_stop").get<double>();
        if (p.contains("perturbation")) s.spsa.perturbation = p.at("perturbation").get<double>();
    }
}

// ---------------------------------------------------------------------------

ScalingMSpec scaling_m_preset(Preset p) {
    ScalingMSpec s;
    s.base.n_qubits = 5;
    s.base.num_params = 5;
    s.base.scale = 1.0;
    s.base.seed = kDefaultSeed;
    s.base.model_source = ModelSource::kResampledPerTrial;
    s.sample_sizes = {10, 100, 200, 400, 800};
    if (p == Preset::kPaper) {
        s.base.n_trials = 500;
        s.base.n_theta = 100000;
        s.base.eval_budget = 1e11;
    } else {
        s.base.n_trials = 100;
        s.base.n_theta = 2000;
    }
    return s;
}

ScalingMResult run_scaling_m(const ScalingMSpec &spec, const Executor &exec) {
    ScalingMResult r;
    r.spec = spec;
    r.estimates = estimate_scaling_sweep(spec.base, SweepKind::kSamples, spec.sample_sizes, exec);
    r.fit = fit_with_context("scaling-m fit", as_doubles(spec.sample_sizes), g_aves(r.estimates));
    return r;
}

ScalingLSpec scaling_l_preset(Preset p) {
    ScalingLSpec s;
    s.base.n_qubits = 5;
    s.base.n_data = 200;
    s.base.scale = 1.0;
    s.base.seed = kDefaultSeed;
    s.base.model_source = ModelSource::kResampledPerTrial;
    if (p == Preset::kPaper) {
        s.base.n_trials = 500;
        s.base.n_theta = 50000;
        s.base.eval_budget = 1e13;
        s.param_counts = {4, 8, 12, 16, 20};
    } else {
        s.base.n_trials = 100;
        s.base.n_theta = 1000;
        s.param_counts = {4, 8, 12, 16};
    }
    return s;
}

ScalingLResult run_scaling_l(const ScalingLSpec &spec, const Executor &exec) {
    ScalingLResult r;
    r.spec = spec;
    r.full = estimate_scaling_sweep(spec.base, SweepKind::kParams, spec.param_counts, exec);
    r.restricted = estimate_scaling_sweep(spec.base, SweepKind::kParamsRestricted, spec.param_counts, exec);
    const auto ls = as_doubles(spec.param_counts);
    r.fit_full = fit_with_context("scaling-l fit (full domain)", ls, g_aves(r.full));
    r.fit_restricted = fit_with_context("scaling-l fit (restricted domain)", ls, g_aves(r.restricted));
    return r;
}

ConvergenceSpec convergence_preset(Preset p) {
    ConvergenceSpec s;
    s.base.n_qubits = 5;
    s.base.n_data = 200;
    s.base.scale = 1.0;
    s.base.seed = kDefaultSeed;
    s.base.model_source = ModelSource::kResampledPerTrial;
    s.param_counts = {4, 8, 12, 16, 20};
    if (p == Preset::kPaper) {
        s.base.n_trials = 500;
        s.base.n_theta = 50000;
        s.base.eval_budget = 1e13;
    } else {
        s.base.n_trials = 200;
        s.base.n_theta = 1000;
    }
    return s;
}

std::vector<double> prefix_means(std::span<const double> values) {
    std::vector<double> out(values.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc += values[i];
        out[i] = acc / static_cast<double>(i + 1);
    }
    return out;
}

ConvergenceResult run_convergence(const ConvergenceSpec &spec, const Executor &exec) {
    ConvergenceResult r;
    r.spec = spec;
    r.estimates = estimate_scaling_sweep(spec.base, SweepKind::kParams, spec.param_counts, exec);
    for (const auto &e : r.estimates) {
        r.prefix_means.push_back(prefix_means(e.per_trial_values));
    }
    return r;
}

GapSettings gap_preset(Preset p) {
    GapSettings s;
    s.n_qubits = 5;
    s.num_samples_values = {25, 100};
    s.test_size = 1000;
    s.seed = kDefaultSeed;
    s.spsa.learning_rate = 0.01;
    s.spsa.momentum = 0.5;
    s.spsa.rmse_stop = 1e-4;
    s.spsa.perturbation = 0.01;
    if (p == Preset::kPaper) {
        s.num_params_values = {4, 5, 8};
        s.repeats = 20;
        s.spsa.max_epochs = 5000;
    } else {
        s.num_params_values = {5};
        s.repeats = 10;
        s.spsa.max_epochs = 1500;
    }
    return s;
}

GapResult run_gap(const GapSettings &settings, const Executor &exec) {
    return GapResult{settings, gap_experiment(settings, exec)};
}

// ---------------------------------------------------------------------------

std::vector<Output> tables(const ScalingMResult &r) {
    csv::Table t({"M", "g_ave", "g_err", "n_trials", "n_theta", "L", "scale"});
    t.add_comment("pqcrad " + std::string(version()) + " scaling-m");
    t.add_config({{"base", to_json(r.spec.base)}, {"M_values", sweep_json(r.spec.sample_sizes)}});
    add_fit_comment(t, "loglog fit of g_ave on M", r.fit);
    for (const auto &e : r.estimates) {
        t.add_row(e.config.n_data, e.g_ave, e.g_err, e.config.n_trials, e.config.n_theta,
                  e.config.num_params, e.config.scale);
    }
    return {{"scaling_m", std::move(t)}};
}

std::vector<Output> tables(const ScalingLResult &r) {
    csv::Table t({"L", "domain", "scale", "n_theta", "g_ave", "g_err", "n_trials", "n_data"});
    t.add_comment("pqcrad " + std::string(version()) + " scaling-l");
    t.add_config({{"base", to_json(r.spec.base)}, {"L_values", sweep_json(r.spec.param_counts)}});
    add_fit_comment(t, "loglog fit of g_ave on L (full)", r.fit_full);
    add_fit_comment(t, "loglog fit of g_ave on L (restricted)", r.fit_restricted);
    for (std::size_t i = 0; i < r.full.size(); ++i) {
        for (const auto *e : {&r.full[i], &r.restricted[i]}) {
            t.add_row(e->config.num_params, e == &r.full[i] ? "full" : "restricted", e->config.scale,
                      e->config.n_theta, e->g_ave, e->g_err, e->config.n_trials, e->config.n_data);
        }
    }
    return {{"scaling_l", std::move(t)}};
}

std::vector<Output> tables(const ConvergenceResult &r) {
    csv::Table t({"L", "trials", "prefix_mean", "trial_max"});
    t.add_comment("pqcrad " + std::string(version()) + " convergence");
    t.add_config({{"base", to_json(r.spec.base)}, {"L_values", sweep_json(r.spec.param_counts)}});
    for (std::size_t i = 0; i < r.estimates.size(); ++i) {
        const auto &vals = r.estimates[i].per_trial_values;
        for (std::size_t n = 0; n < vals.size(); ++n) {
            t.add_row(r.spec.param_counts[i], n + 1, r.prefix_means[i][n], vals[n]);
        }
    }
    return {{"convergence", std::move(t)}};
}

std::vector<Output> tables(const GapResult &r) {
    const nlohmann::json cfg = to_json(r.settings);
    csv::Table rows({"L", "M", "repeat", "train_loss", "test_loss", "gap", "epochs_used"});
    rows.add_comment("pqcrad " + std::string(version()) + " gap");
    rows.add_config(cfg);
    for (const auto &g : r.table.rows) {
        rows.add_row(g.num_params, g.num_samples, g.repeat, g.train_loss, g.test_loss, g.gap, g.epochs_used);
    }
    csv::Table cells({"L", "M", "min", "whisker_low", "q1", "median", "q3", "whisker_high", "max"});
    cells.add_comment("pqcrad " + std::string(version()) + " gap box statistics");
    cells.add_config(cfg);
    for (const auto &c : r.table.cells) {
        cells.add_row(c.num_params, c.num_samples, c.gaps.minimum, c.gaps.whisker_low, c.gaps.q1,
                      c.gaps.median, c.gaps.q3, c.gaps.whisker_high, c.gaps.maximum);
    }
    return {{"gap", std::move(rows)}, {"gap_summary", std::move(cells)}};
}

void write_outputs(const std::filesystem::path &dir, std::string_view kind,
                   const std::vector<Output> &outputs, const nlohmann::json &config,
                   std::size_t threads, double wall_seconds) {
    std::filesystem::create_directories(dir);
    nlohmann::json files = nlohmann::json::array();
    for (const auto &o : outputs) {
        o.table.write(dir / (o.name + ".csv"));
        files.push_back(o.name + ".csv");
    }
    const nlohmann::json manifest = {{"tool", "pqcrad"},
                                     {"version", std::string(version())},
                                     {"experiment", std::string(kind)},
                                     {"config", config},
                                     {"threads", threads},
                                     {"wall_seconds", wall_seconds},
                                     {"files", files}};
    const auto path = dir / (std::string(kind) + ".manifest.json");
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << manifest.dump(2) << '\n';
}

} // namespace pqcrad::experiments
