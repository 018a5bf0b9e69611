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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqcrad/analysis.hpp"
#include "pqcrad/bounds.hpp"
#include "pqcrad/csv.hpp"
#include "pqcrad/errors.hpp"
#include "pqcrad/executor.hpp"
#include "pqcrad/experiments.hpp"
#include "pqcrad/kernels.hpp"
#include "pqcrad/model_io.hpp"
#include "pqcrad/rademacher.hpp"
#include "pqcrad/selftest.hpp"
#include "pqcrad/training.hpp"

namespace fs = std::filesystem;
using namespace pqcrad;
namespace ex = pqcrad::experiments;

namespace {

struct Global {
    std::uint64_t seed = ex::kDefaultSeed;
    std::size_t threads = 0;
    std::optional<double> eval_budget;
    std::string kernel = "auto";
};

nlohmann::json read_json_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open config file " + path);
    }
    try {
        return nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error("config file " + path + ": " + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_fit(std::ostream &os, std::string_view label, const analysis::RegressionResult &r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: slope %.5f +- %.5f, intercept %.5f, r^2 %.4f, t %.3f, p %.3g (n=%zu)\n",
                  std::string(label).c_str(), r.slope, r.slope_stderr, r.intercept, r.r_squared,
                  r.t_statistic, r.p_value, r.n_points);
    os << buf;
}

// ---------------------------------------------------------------------------

struct BoundArgs {
    std::vector<std::size_t> L{5};
    std::vector<std::size_t> M{100};
    double delta = 0.05;
    bool csv = false;
};

int run_bound(const BoundArgs &a) {
    csv::Table t({"L", "M", "K", "R", "raw", "closed_form", "clamped", "restricted_raw", "restricted_clamped",
                  "gap_at_delta"});
    t.add_config({{"L", a.L}, {"M", a.M}, {"delta", a.delta}});
    for (std::size_t L : a.L) {
        for (std::size_t M : a.M) {
            const auto full = bounds::rademacher_bound({L, M, bounds::Domain::kFull});
            const auto res = bounds::rademacher_bound({L, M, bounds::Domain::kRestricted});
            t.add_row(L, M, full.lipschitz, full.diameter, full.raw, full.closed_form, full.clamped, res.raw,
                      res.clamped, bounds::gap_bound(full.clamped, M, a.delta));
        }
    }
    if (a.csv) {
        std::cout << t.str();
        return 0;
    }
    std::printf("%4s %6s %9s %9s %12s %12s %8s %12s %8s %10s\n", "L", "M", "K", "R", "raw", "closed_form",
                "clamped", "restr_raw", "restr_cl", "gap@delta");
    for (std::size_t L : a.L) {
        for (std::size_t M : a.M) {
            const auto full = bounds::rademacher_bound({L, M, bounds::Domain::kFull});
            const auto res = bounds::rademacher_bound({L, M, bounds::Domain::kRestricted});
            std::printf("%4zu %6zu %9.4f %9.4f %12.4f %12.4f %8.4f %12.4f %8.4f %10.4f\n", L, M, full.lipschitz,
                        full.diameter, full.raw, full.closed_form, full.clamped, res.raw, res.clamped,
                        bounds::gap_bound(full.clamped, M, a.delta));
        }
    }
    std::printf("delta = %g\n", a.delta);
    return 0;
}

// ---------------------------------------------------------------------------

struct EstimateArgs {
    EstimatorConfig cfg;
    std::string model_file;
    std::string model_source = "fixed";
    std::string route = "moments";
    std::string out;
};

int run_estimate(EstimateArgs a, const Global &g) {
    a.cfg.seed = g.seed;
    if (g.eval_budget) {
        a.cfg.eval_budget = *g.eval_budget;
    }
    a.cfg.model_source = a.model_source == "fixed" ? ModelSource::kFixed : ModelSource::kResampledPerTrial;
    a.cfg.route = a.route == "moments" ? EstimatorRoute::kMoments : EstimatorRoute::kDirect;
    const Executor exec(g.threads);
    const auto t0 = std::chrono::steady_clock::now();
    RademacherEstimate est;
    if (!a.model_file.empty()) {
        const CircuitModel model = load_model(a.model_file);
        a.cfg.n_qubits = model.n_qubits();
        if (a.cfg.model_source == ModelSource::kFixed) {
            a.cfg.num_params = model.num_params();
        }
        est = estimate(a.cfg, model, exec);
    } else {
        est = estimate(a.cfg, exec);
    }
    const double wall = seconds_since(t0);

    std::printf("g_ave %.10g\ng_err %.10g\ntrials %zu, candidates %zu, n_data %zu, L %zu, scale %g, seed %llu\n",
                est.g_ave, est.g_err, a.cfg.n_trials, a.cfg.n_theta, a.cfg.n_data, a.cfg.num_params,
                a.cfg.scale, static_cast<unsigned long long>(a.cfg.seed));
    if (!a.out.empty()) {
        csv::Table t({"trial_index", "trial_max", "g_ave", "g_err"});
        nlohmann::json cfg = ex::to_json(a.cfg);
        if (!a.model_file.empty()) {
            cfg["model_file"] = a.model_file;
        }
        t.add_config(cfg);
        for (std::size_t i = 0; i < est.per_trial_values.size(); ++i) {
            t.add_row(i, est.per_trial_values[i], "", "");
        }
        t.add_row("summary", "", est.g_ave, est.g_err);
        t.write(a.out);
        std::fprintf(stderr, "wrote %s (%.2f s)\n", a.out.c_str(), wall);
    }
    return 0;
}

// ---------------------------------------------------------------------------

int run_fit(const std::string &path) {
    const auto [xs, ys] = csv::read_two_columns(path);
    const auto r = analysis::loglog_fit(xs, ys);
    print_fit(std::cout, "log-log fit", r);
    std::cout << ex::to_json(r).dump() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string preset = "desk";
    std::string config;
    std::string out;
    std::vector<std::size_t> values;
    std::optional<std::size_t> n_trials, n_theta, n_data, num_params, n_qubits;
    std::optional<double> scale;
};

void apply_overrides(const SweepArgs &a, const Global &g, EstimatorConfig &c,
                     std::vector<std::size_t> &values, std::string_view values_key) {
    if (!a.config.empty()) {
        const auto j = read_json_file(a.config);
        if (j.contains("base")) {
            ex::apply_json(j.at("base"), c);
        }
        if (j.contains(values_key)) {
            values = j.at(values_key).get<std::vector<std::size_t>>();
        }
    }
    if (!a.values.empty()) values = a.values;
    if (a.n_trials) c.n_trials = *a.n_trials;
    if (a.n_theta) c.n_theta = *a.n_theta;
    if (a.n_data) c.n_data = *a.n_data;
    if (a.num_params) c.num_params = *a.num_params;
    if (a.n_qubits) c.n_qubits = *a.n_qubits;
    if (a.scale) c.scale = *a.scale;
    if (g.eval_budget) c.eval_budget = *g.eval_budget;
    c.seed = g.seed;
}

void finish(const std::string &out, std::string_view kind, const std::vector<ex::Output> &outputs,
            const nlohmann::json &config, const Global &g, double wall) {
    const fs::path dir = out.empty() ? fs::path("results") / std::string(kind) : fs::path(out);
    ex::write_outputs(dir, kind, outputs, config, Executor(g.threads).threads(), wall);
    std::fprintf(stderr, "wrote %s (%.2f s)\n", dir.string().c_str(), wall);
}

int run_scaling_m(const SweepArgs &a, const Global &g) {
    auto spec = ex::scaling_m_preset(ex::parse_preset(a.preset));
    apply_overrides(a, g, spec.base, spec.sample_sizes, "M_values");
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = ex::run_scaling_m(spec, Executor(g.threads));
    const double wall = seconds_since(t0);
    for (const auto &e : r.estimates) {
        std::printf("M %5zu  g_ave %.6f  g_err %.6f\n", e.config.n_data, e.g_ave, e.g_err);
    }
    print_fit(std::cout, "ln g_ave vs ln M", r.fit);
    finish(a.out, "scaling_m",  ex::tables(r),
           {{"preset", a.preset}, {"base", ex::to_json(spec.base)}, {"M_values", spec.sample_sizes}}, g, wall);
    return 0;
}

int run_scaling_l(const SweepArgs &a, const Global &g) {
    auto spec = ex::scaling_l_preset(ex::parse_preset(a.preset));
    apply_overrides(a, g, spec.base, spec.param_counts, "L_values");
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = ex::run_scaling_l(spec, Executor(g.threads));
    const double wall = seconds_since(t0);
    for (std::size_t i = 0; i < r.full.size(); ++i) {
        std::printf("L %3zu  full %.6f +- %.6f  restricted %.6f +- %.6f\n", spec.param_counts[i],
                    r.full[i].g_ave, r.full[i].g_err, r.restricted[i].g_ave, r.restricted[i].g_err);
    }
    print_fit(std::cout, "full domain, ln g_ave vs ln L", r.fit_full);
    print_fit(std::cout, "restricted domain, ln g_ave vs ln L", r.fit_restricted);
    finish(a.out, "scaling_l", ex::tables(r),
           {{"preset", a.preset}, {"base", ex::to_json(spec.base)}, {"L_values", spec.param_counts}}, g, wall);
    return 0;
}

int run_convergence(const SweepArgs &a, const Global &g) {
    auto spec = ex::convergence_preset(ex::parse_preset(a.preset));
    apply_overrides(a, g, spec.base, spec.param_counts, "L_values");
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = ex::run_convergence(spec, Executor(g.threads));
    const double wall = seconds_since(t0);
    for (std::size_t i = 0; i < r.estimates.size(); ++i) {
        std::printf("L %3zu  g_ave %.6f +- %.6f after %zu trials\n", spec.param_counts[i], r.estimates[i].g_ave,
                    r.estimates[i].g_err, r.estimates[i].per_trial_values.size());
    }
    finish(a.out, "convergence", ex::tables(r),
           {{"preset", a.preset}, {"base", ex::to_json(spec.base)}, {"L_values", spec.param_counts}}, g, wall);
    return 0;
}

// ---------------------------------------------------------------------------

struct GapArgs {
    std::string preset = "desk";
    std::string config;
    std::string out;
    std::vector<std::size_t> L_list, M_list;
    std::optional<std::size_t> repeats, epochs, n_qubits, test_size;
    std::optional<double> lr, momentum, c;
    std::optional<std::string> loss;
};

int run_gap(const GapArgs &a, const Global &g) {
    auto s = ex::gap_preset(ex::parse_preset(a.preset));
    if (!a.config.empty()) {
        ex::apply_json(read_json_file(a.config), s);
    }
    if (!a.L_list.empty()) s.num_params_values = a.L_list;
    if (!a.M_list.empty()) s.num_samples_values = a.M_list;
    if (a.repeats) s.repeats = *a.repeats;
    if (a.epochs) s.spsa.max_epochs = *a.epochs;
    if (a.n_qubits) s.n_qubits = *a.n_qubits;
    if (a.test_size) s.test_size = *a.test_size;
    if (a.lr) s.spsa.learning_rate = *a.lr;
    if (a.momentum) s.spsa.momentum = *a.momentum;
    if (a.c) s.spsa.perturbation = *a.c;
    if (a.loss) s.loss = parse_loss_kind(*a.loss);
    s.seed = g.seed;

    const auto t0 = std::chrono::steady_clock::now();
    const auto r = ex::run_gap(s, Executor(g.threads));
    const double wall = seconds_since(t0);
    for (const auto &cell : r.table.cells) {
        std::printf("L %2zu  M %4zu  median gap %.6f  IQR [%.6f, %.6f]\n", cell.num_params, cell.num_samples,
                    cell.gaps.median, cell.gaps.q1, cell.gaps.q3);
    }
    nlohmann::json cfg = ex::to_json(s);
    cfg["preset"] = a.preset;
    finish(a.out, "gap", ex::tables(r), cfg, g, wall);
    return 0;
}

int run_selftest_cmd(const Global &g) {
    const auto report = run_selftest(g.seed);
    std::cout << report.str();
    std::cout << (report.passed() ? "selftest passed\n" : "selftest FAILED\n");
    return report.passed() ? 0 : 1;
}

void add_sweep_options(CLI::App *sub, SweepArgs &a, const std::string &values_flag, const std::string &values_help) {
    sub->add_option("--preset", a.preset, "paper or desk")->check(CLI::IsMember({"paper", "desk"}));
    sub->add_option("--config", a.config, "JSON file: {\"base\": {...}, \"" +
                                              std::string(values_flag == "--M-list" ? "M_values" : "L_values") +
                                              "\": [...]}")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", a.out, "output directory (default results/<experiment>)");
    sub->add_option(values_flag, a.values, values_help)->delimiter(',');
    sub->add_option("--n-trials", a.n_trials, "trials per point");
    sub->add_option("--n-theta", a.n_theta, "candidates per trial (per parameter for L sweeps)");
    sub->add_option("--n-data", a.n_data, "inputs per trial");
    sub->add_option("--n-qubits", a.n_qubits, "qubits");
    sub->add_option("--scale", a.scale, "theta_j ~ U(0, 2 pi scale)");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"pqcrad: Rademacher complexity of parameterized quantum circuits"};
    app.name("pqcrad");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("pqcrad ") + std::string(ex::version()));

    Global g;
    app.add_option("--seed", g.seed, "experiment seed")->envname("PQCRAD_SEED")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads, 0 = all cores")->envname("PQCRAD_THREADS");
    app.add_option("--eval-budget", g.eval_budget, "largest allowed n_trials * n_theta * n_data");
    app.add_option("--kernel", g.kernel, "auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    BoundArgs bound_args;
    auto *bound = app.add_subcommand("bound", "print the analytic bounds");
    bound->add_option("--L", bound_args.L, "parameter counts")->delimiter(',');
    bound->add_option("--M", bound_args.M, "sample sizes")->delimiter(',');
    bound->add_option("--delta", bound_args.delta, "confidence parameter of the gap bound")
        ->check(CLI::Range(0.0, 1.0));
    bound->add_flag("--csv", bound_args.csv, "CSV instead of a text table");

    EstimateArgs est_args;
    auto *est = app.add_subcommand("estimate", "random-search Rademacher estimate\n"
                                               "CSV columns: trial_index, trial_max, g_ave, g_err (last row)");
    est->add_option("--n-qubits", est_args.cfg.n_qubits, "qubits")->capture_default_str();
    est->add_option("--L", est_args.cfg.num_params, "parameters")->capture_default_str();
    est->add_option("--n-data", est_args.cfg.n_data, "inputs per trial")->capture_default_str();
    est->add_option("--n-theta", est_args.cfg.n_theta, "candidates per trial")->capture_default_str();
    est->add_option("--n-trials", est_args.cfg.n_trials, "trials")->capture_default_str();
    est->add_option("--scale", est_args.cfg.scale, "theta_j ~ U(0, 2 pi scale)")->capture_default_str();
    est->add_option("--seed", g.seed, "experiment seed");
    est->add_option("--model-file", est_args.model_file, "fixed model in key = value form")
        ->check(CLI::ExistingFile);
    est->add_option("--model-source", est_args.model_source, "fixed or resampled")
        ->check(CLI::IsMember({"fixed", "resampled"}));
    est->add_option("--route", est_args.route, "moments or direct")->check(CLI::IsMember({"moments", "direct"}));
    est->add_flag("--exact-sigma", est_args.cfg.exact_sigma, "average over all sign patterns (n_data <= 20)");
    est->add_option("--out", est_args.out, "CSV file");

    std::string fit_path;
    auto *fit = app.add_subcommand("fit", "log-log least squares on a two-column CSV");
    fit->add_option("csv", fit_path, "CSV with x, y columns")->required()->check(CLI::ExistingFile);

    GapArgs gap_args;
    auto *gap = app.add_subcommand("gap", "generalization gap after SPSA training\n"
                                          "gap.csv: L, M, repeat, train_loss, test_loss, gap, epochs_used\n"
                                          "gap_summary.csv: L, M, min, whisker_low, q1, median, q3, "
                                          "whisker_high, max");
    gap->add_option("--preset", gap_args.preset, "paper or desk")->check(CLI::IsMember({"paper", "desk"}));
    gap->add_option("--config", gap_args.config, "JSON settings file")->check(CLI::ExistingFile);
    gap->add_option("--out", gap_args.out, "output directory (default results/gap)");
    gap->add_option("--L-list", gap_args.L_list, "parameter counts")->delimiter(',');
    gap->add_option("--M-list", gap_args.M_list, "training set sizes")->delimiter(',');
    gap->add_option("--repeats", gap_args.repeats, "repeats per cell");
    gap->add_option("--epochs", gap_args.epochs, "SPSA epoch limit");
    gap->add_option("--lr", gap_args.lr, "learning rate");
    gap->add_option("--momentum", gap_args.momentum, "momentum");
    gap->add_option("--c", gap_args.c, "SPSA perturbation size");
    gap->add_option("--loss", gap_args.loss, "mse or rmse")->check(CLI::IsMember({"mse", "rmse"}));
    gap->add_option("--n-qubits", gap_args.n_qubits, "qubits");
    gap->add_option("--test-size", gap_args.test_size, "test inputs per cell");
    gap->add_option("--seed", g.seed, "experiment seed");

    SweepArgs m_args;
    auto *sm = app.add_subcommand("scaling-m", "complexity versus sample size\n"
                                               "scaling_m.csv: M, g_ave, g_err, n_trials, n_theta, L, scale");
    add_sweep_options(sm, m_args, "--M-list", "sample sizes");
    sm->add_option("--L", m_args.num_params, "parameters");
    sm->add_option("--seed", g.seed, "experiment seed");

    SweepArgs l_args;
    auto *sl = app.add_subcommand("scaling-l", "complexity versus L, full and restricted domain\n"
                                               "scaling_l.csv: L, domain, scale, n_theta, g_ave, g_err, "
                                               "n_trials, n_data");
    add_sweep_options(sl, l_args, "--L-list", "parameter counts");
    sl->add_option("--seed", g.seed, "experiment seed");

    SweepArgs c_args;
    auto *conv = app.add_subcommand("convergence", "running mean of trial maxima\n"
                                                   "convergence.csv: L, trials, prefix_mean, trial_max");
    add_sweep_options(conv, c_args, "--L-list", "parameter counts");
    conv->add_option("--seed", g.seed, "experiment seed");

    auto *self = app.add_subcommand("selftest", "run the built-in oracle suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
        }
        std::cerr << "pqcrad: error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (g.kernel == "scalar") {
            kernels::select(kernels::Isa::kScalar);
        } else if (g.kernel == "avx2" && !kernels::select(kernels::Isa::kAvx2)) {
            throw std::runtime_error("--kernel avx2: not available on this machine");
        }
        if (bound->parsed()) return run_bound(bound_args);
        if (est->parsed()) return run_estimate(est_args, g);
        if (fit->parsed()) return run_fit(fit_path);
        if (gap->parsed()) return run_gap(gap_args, g);
        if (sm->parsed()) return run_scaling_m(m_args, g);
        if (sl->parsed()) return run_scaling_l(l_args, g);
        if (conv->parsed()) return run_convergence(c_args, g);
        if (self->parsed()) return run_selftest_cmd(g);
    } catch (const BudgetExceeded &e) {
        std::cerr << "pqcrad: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "pqcrad: error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
