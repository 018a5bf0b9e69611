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

#include "pqcrad/rademacher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "pqcrad/analysis.hpp"
#include "pqcrad/errors.hpp"

namespace pqcrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Candidates per task. Fixed, so the task split never depends on threads.
constexpr std::size_t kThetaBlock = 512;

struct TrialData {
    std::vector<double> xs;
    std::vector<double> sigma;
};

TrialData draw_trial(std::uint64_t seed, std::size_t trial, std::size_t n_data) {
    Stream rng = Stream(seed).substream({stream_tag::kTrial, trial});
    TrialData d;
    d.xs.resize(n_data);
    d.sigma.resize(n_data);
    for (double &x : d.xs) {
        x = rng.uniform(0.0, kTwoPi);
    }
    for (double &s : d.sigma) {
        s = rng.sign();
    }
    return d;
}

void draw_theta(std::uint64_t seed, std::size_t trial, std::size_t k, double upper,
                std::span<double> theta) {
    Stream rng = Stream(seed).substream({stream_tag::kTheta, trial, k});
    for (double &t : theta) {
        t = upper * rng.uniform();
    }
}

CircuitModel trial_model(const EstimatorConfig &cfg, const CircuitModel &base, std::size_t trial) {
    if (cfg.model_source == ModelSource::kFixed) {
        return base;
    }
    Stream rng = Stream(cfg.seed).substream({stream_tag::kModel, stream_tag::kTrial, trial});
    std::vector<PauliString> gens;
    gens.reserve(cfg.num_params);
    for (std::size_t j = 0; j < cfg.num_params; ++j) {
        gens.push_back(sample_pauli_string(base.n_qubits(), rng));
    }
    return CircuitModel(base.n_qubits(), std::move(gens), base.observable(), base.encoding());
}

// W_m = sum_j sigma_j cos(x_j/2)^{2n-m} sin(x_j/2)^m, accumulated in j order.
std::vector<double> signed_moments(std::size_t n_qubits, const TrialData &d) {
    std::vector<double> w(2 * n_qubits + 1, 0.0);
    std::vector<double> mono(w.size());
    for (std::size_t j = 0; j < d.xs.size(); ++j) {
        MomentEvaluator::monomials(n_qubits, d.xs[j], mono);
        for (std::size_t m = 0; m < w.size(); ++m) {
            w[m] += d.sigma[j] * mono[m];
        }
    }
    return w;
}

// Candidate scorer for one trial. Owns its evaluator scratch.
class TrialScorer {
  public:
    TrialScorer(const CircuitModel &model, EstimatorRoute route, const TrialData &data)
        : route_(route), data_(data), fvals_(data.xs.size()) {
        if (route_ == EstimatorRoute::kMoments) {
            moments_.emplace(model);
            weights_ = signed_moments(model.n_qubits(), data);
        } else {
            batch_.emplace(model);
        }
    }

    /// (1/N) sum_j sigma_j f(x_j; theta)
    double score(std::span<const double> theta) {
        const double n = static_cast<double>(data_.xs.size());
        double acc = 0.0;
        if (route_ == EstimatorRoute::kMoments) {
            const auto b = moments_->coefficients(theta);
            for (std::size_t m = 0; m < b.size(); ++m) {
                acc += b[m] * weights_[m];
            }
        } else {
            batch_->evaluate(data_.xs, theta, fvals_);
            for (std::size_t j = 0; j < fvals_.size(); ++j) {
                acc += data_.sigma[j] * fvals_[j];
            }
        }
        return acc / n;
    }

    /// f(x_j; theta) for every input of the trial.
    void values(std::span<const double> theta, std::span<double> out) {
        if (route_ == EstimatorRoute::kMoments) {
            const auto b = moments_->coefficients(theta);
            std::vector<double> mono(b.size());
            for (std::size_t j = 0; j < data_.xs.size(); ++j) {
                MomentEvaluator::monomials((b.size() - 1) / 2, data_.xs[j], mono);
                double acc = 0.0;
                for (std::size_t m = 0; m < b.size(); ++m) {
                    acc += b[m] * mono[m];
                }
                out[j] = acc;
            }
        } else {
            batch_->evaluate(data_.xs, theta, out);
        }
    }

  private:
    EstimatorRoute route_;
    const TrialData &data_;
    std::optional<MomentEvaluator> moments_;
    std::optional<BatchEvaluator> batch_;
    std::vector<double> weights_;
    std::vector<double> fvals_;
};

RademacherEstimate finish(const EstimatorConfig &cfg, std::vector<double> values) {
    RademacherEstimate out;
    out.config = cfg;
    if (values.size() >= 2) {
        const analysis::Summary s = analysis::summarize(values);
        out.g_ave = s.mean;
        out.g_err = s.standard_error;
    } else if (values.size() == 1) {
        out.g_ave = values[0];
    }
    out.per_trial_values = std::move(values);
    return out;
}

} // namespace

std::string_view to_string(ModelSource s) noexcept {
    return s == ModelSource::kFixed ? "fixed" : "resampled-per-trial";
}

std::string_view to_string(EstimatorRoute r) noexcept {
    return r == EstimatorRoute::kMoments ? "moments" : "direct";
}

double EstimatorConfig::evaluation_count() const noexcept {
    return static_cast<double>(n_trials) * static_cast<double>(n_theta) *
           static_cast<double>(n_data);
}

void EstimatorConfig::validate() const {
    if (n_trials < 1 || n_data < 1 || n_theta < 1) {
        throw std::invalid_argument("estimator: n_trials, n_data and n_theta must all be >= 1");
    }
    if (n_qubits < 1) {
        throw std::invalid_argument("estimator: n_qubits must be >= 1");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("estimator: scale must be a positive finite number");
    }
    if (exact_sigma && n_data > kMaxExactSigmaData) {
        throw OracleSizeError("estimator: exact sigma enumeration needs n_data <= " +
                              std::to_string(kMaxExactSigmaData) + ", got " +
                              std::to_string(n_data));
    }
    if (evaluation_count() > eval_budget) {
        throw BudgetExceeded(evaluation_count(), eval_budget);
    }
}

double restricted_scale(std::size_t num_params) {
    if (num_params < 1) {
        throw std::invalid_argument("restricted_scale: L must be >= 1");
    }
    return 1.0 / (kTwoPi * std::sqrt(static_cast<double>(num_params)));
}

CircuitModel sample_fixed_model(const EstimatorConfig &cfg) {
    Stream rng = Stream(cfg.seed).substream({stream_tag::kModel, cfg.num_params});
    return CircuitModel::sample(cfg.n_qubits, cfg.num_params, rng);
}

RademacherEstimate estimate(const EstimatorConfig &cfg, const CircuitModel &model,
                            const Executor &exec) {
    cfg.validate();
    if (model.num_params() != cfg.num_params) {
        throw std::invalid_argument("estimate: model has " + std::to_string(model.num_params()) +
                                    " generators but the configuration asks for L = " +
                                    std::to_string(cfg.num_params));
    }
    if (model.n_qubits() != cfg.n_qubits) {
        throw std::invalid_argument("estimate: model qubit count differs from configuration");
    }
    const double upper = kTwoPi * cfg.scale;
    const std::size_t L = cfg.num_params;

    if (cfg.exact_sigma) {
        std::vector<double> values(cfg.n_trials);
        exec.parallel_for(cfg.n_trials, [&](std::size_t t, std::size_t) {
            const TrialData data = draw_trial(cfg.seed, t, cfg.n_data);
            const CircuitModel m = trial_model(cfg, model, t);
            TrialScorer scorer(m, cfg.route, data);
            std::vector<std::vector<double>> table(cfg.n_theta, std::vector<double>(cfg.n_data));
            std::vector<double> theta(L);
            for (std::size_t k = 0; k < cfg.n_theta; ++k) {
                draw_theta(cfg.seed, t, k, upper, theta);
                scorer.values(theta, table[k]);
            }
            values[t] = enumerate_sigma(table);
        });
        return finish(cfg, std::move(values));
    }

    const std::size_t blocks = (cfg.n_theta + kThetaBlock - 1) / kThetaBlock;
    std::vector<double> block_max(cfg.n_trials * blocks, -std::numeric_limits<double>::infinity());
    exec.parallel_for(cfg.n_trials * blocks, [&](std::size_t task, std::size_t) {
        const std::size_t t = task / blocks;
        const std::size_t blk = task % blocks;
        const TrialData data = draw_trial(cfg.seed, t, cfg.n_data);
        const CircuitModel m = trial_model(cfg, model, t);
        TrialScorer scorer(m, cfg.route, data);
        std::vector<double> theta(L);
        double best = -std::numeric_limits<double>::infinity();
        const std::size_t k_end = std::min(cfg.n_theta, (blk + 1) * kThetaBlock);
        for (std::size_t k = blk * kThetaBlock; k < k_end; ++k) {
            draw_theta(cfg.seed, t, k, upper, theta);
            best = std::max(best, scorer.score(theta));
        }
        block_max[task] = best;
    });

    std::vector<double> values(cfg.n_trials);
    for (std::size_t t = 0; t < cfg.n_trials; ++t) {
        values[t] = *std::max_element(block_max.begin() + static_cast<std::ptrdiff_t>(t * blocks),
                                      block_max.begin() + static_cast<std::ptrdiff_t>((t + 1) * blocks));
    }
    return finish(cfg, std::move(values));
}

RademacherEstimate estimate(const EstimatorConfig &cfg, const Executor &exec) {
    cfg.validate();
    return estimate(cfg, sample_fixed_model(cfg), exec);
}

std::vector<std::vector<double>> function_table(const CircuitModel &model, const ThetaSet &theta_set,
                                                std::span<const double> x_set) {
    Evaluator ev(model);
    std::vector<std::vector<double>> table(theta_set.size(), std::vector<double>(x_set.size()));
    for (std::size_t k = 0; k < theta_set.size(); ++k) {
        for (std::size_t j = 0; j < x_set.size(); ++j) {
            table[k][j] = ev.evaluate(x_set[j], theta_set[k]);
        }
    }
    return table;
}

double enumerate_sigma(const std::vector<std::vector<double>> &table) {
    if (table.empty()) {
        throw std::invalid_argument("enumerate_sigma: empty theta set");
    }
    const std::size_t n = table.front().size();
    if (n == 0) {
        throw std::invalid_argument("enumerate_sigma: empty input set");
    }
    if (n > kMaxExactSigmaData) {
        throw OracleSizeError("enumerate_sigma: 2^" + std::to_string(n) +
                              " sign patterns exceed the limit of n_data <= " +
                              std::to_string(kMaxExactSigmaData));
    }
    for (const auto &row : table) {
        if (row.size() != n) {
            throw std::invalid_argument("enumerate_sigma: ragged function table");
        }
    }
    const double nd = static_cast<double>(n);
    // sigma_0 = +1 for the enumerated half; the other half is the negation,
    // whose per-row sums are exact negatives, so its max is -min.
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    double total = 0.0;
    for (std::uint64_t pattern = 0; pattern < half; ++pattern) {
        double hi = -std::numeric_limits<double>::infinity();
        double lo = std::numeric_limits<double>::infinity();
        for (const auto &row : table) {
            double s = row[0];
            for (std::size_t j = 1; j < n; ++j) {
                s += ((pattern >> (j - 1)) & 1U) != 0 ? -row[j] : row[j];
            }
            hi = std::max(hi, s);
            lo = std::min(lo, s);
        }
        total += (hi - lo) / nd;
    }
    return total / static_cast<double>(2 * half);
}

double enumerate_sigma(const CircuitModel &model, const ThetaSet &theta_set,
                       std::span<const double> x_set) {
    return enumerate_sigma(function_table(model, theta_set, x_set));
}

RademacherEstimate estimate_sigma_only(const CircuitModel &model, const ThetaSet &theta_set,
                                       std::span<const double> x_set, std::size_t n_trials,
                                       std::uint64_t seed) {
    if (n_trials < 1 || theta_set.empty() || x_set.empty()) {
        throw std::invalid_argument("estimate_sigma_only: need n_trials, theta_set and x_set nonempty");
    }
    const auto table = function_table(model, theta_set, x_set);
    const std::size_t n = x_set.size();
    std::vector<double> sigma(n);
    std::vector<double> values(n_trials);
    for (std::size_t t = 0; t < n_trials; ++t) {
        Stream rng = Stream(seed).substream({stream_tag::kSigma, t});
        for (double &s : sigma) {
            s = rng.sign();
        }
        double best = -std::numeric_limits<double>::infinity();
        for (const auto &row : table) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += sigma[j] * row[j];
            }
            best = std::max(best, acc / static_cast<double>(n));
        }
        values[t] = best;
    }
    EstimatorConfig echo;
    echo.n_trials = n_trials;
    echo.n_data = n;
    echo.n_theta = theta_set.size();
    echo.num_params = model.num_params();
    echo.n_qubits = model.n_qubits();
    echo.seed = seed;
    return finish(echo, std::move(values));
}

EstimatorConfig sweep_point(const EstimatorConfig &base, SweepKind kind, std::size_t value) {
    EstimatorConfig cfg = base;
    switch (kind) {
    case SweepKind::kSamples:
        cfg.n_data = value;
        break;
    case SweepKind::kParams:
        cfg.num_params = value;
        cfg.n_theta = base.n_theta * value;
        break;
    case SweepKind::kParamsRestricted:
        cfg.num_params = value;
        cfg.n_theta = base.n_theta * value;
        cfg.scale = restricted_scale(value);
        break;
    }
    return cfg;
}

std::vector<RademacherEstimate> estimate_scaling_sweep(const EstimatorConfig &base, SweepKind kind,
                                                       std::span<const std::size_t> values,
                                                       const Executor &exec) {
    if (values.empty()) {
        throw std::invalid_argument("estimate_scaling_sweep: empty sweep");
    }
    std::vector<EstimatorConfig> points;
    points.reserve(values.size());
    for (std::size_t v : values) {
        points.push_back(sweep_point(base, kind, v));
        points.back().validate();
    }
    std::vector<RademacherEstimate> out;
    out.reserve(points.size());
    for (const EstimatorConfig &cfg : points) {
        out.push_back(estimate(cfg, exec));
    }
    return out;
}

} // namespace pqcrad
