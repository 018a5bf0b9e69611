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

#include "pqcrad/training.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pqcrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double to_loss(double mse, LossKind kind) { return kind == LossKind::kMse ? mse : std::sqrt(mse); }

} // namespace

Dataset label_inputs(const CircuitModel &teacher, std::vector<double> teacher_theta,
                     std::vector<double> inputs) {
    BatchEvaluator eval(teacher);
    std::vector<double> targets(inputs.size());
    eval.evaluate(inputs, teacher_theta, targets);
    return Dataset{std::move(inputs), std::move(targets), teacher, std::move(teacher_theta)};
}

Dataset generate_dataset(std::size_t n_qubits, std::size_t num_params, std::size_t num_samples,
                         Stream &rng, std::span<const double> forced_theta) {
    if (n_qubits < 1 || num_params < 1 || num_samples < 1) {
        throw std::invalid_argument("generate_dataset: n_qubits, L and M must all be >= 1");
    }
    CircuitModel teacher = CircuitModel::sample(n_qubits, num_params, rng);
    std::vector<double> theta(num_params);
    for (double &t : theta) {
        t = rng.uniform(-kTeacherThetaHalfWidth, kTeacherThetaHalfWidth);
    }
    if (!forced_theta.empty()) {
        if (forced_theta.size() != num_params) {
            throw std::invalid_argument("generate_dataset: forced theta has the wrong length");
        }
        theta.assign(forced_theta.begin(), forced_theta.end());
    }
    std::vector<double> xs(num_samples);
    for (double &x : xs) {
        x = rng.uniform(0.0, kTwoPi);
    }
    return label_inputs(teacher, std::move(theta), std::move(xs));
}

Dataset generate_dataset(std::size_t n_qubits, std::size_t num_params, std::size_t num_samples,
                         Stream &rng) {
    return generate_dataset(n_qubits, num_params, num_samples, rng, {});
}

void SpsaConfig::validate() const {
    if (!(learning_rate > 0.0) || !(perturbation > 0.0) || !(rmse_stop > 0.0)) {
        throw std::invalid_argument("SPSA: learning rate, perturbation and RMSE threshold must be positive");
    }
    if (!(momentum >= 0.0 && momentum < 1.0)) {
        throw std::invalid_argument("SPSA: momentum must lie in [0, 1)");
    }
    if (max_epochs < 1) {
        throw std::invalid_argument("SPSA: max_epochs must be >= 1");
    }
}

std::string_view to_string(LossKind k) noexcept { return k == LossKind::kMse ? "mse" : "rmse"; }

LossKind parse_loss_kind(std::string_view text) {
    if (text == "mse") {
        return LossKind::kMse;
    }
    if (text == "rmse") {
        return LossKind::kRmse;
    }
    throw std::invalid_argument("unknown loss \"" + std::string(text) + "\" (expected mse or rmse)");
}

SpsaTrace spsa_minimize(const std::function<double(std::span<const double>)> &objective,
                        std::vector<double> theta, const SpsaConfig &cfg, Stream &rng,
                        double stop_below) {
    cfg.validate();
    const std::size_t L = theta.size();
    const double c = cfg.perturbation;
    std::vector<double> velocity(L, 0.0);
    std::vector<double> delta(L);
    std::vector<double> probe(L);

    SpsaTrace out;
    out.loss_trace.reserve(cfg.max_epochs);
    for (std::size_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        const double current = objective(theta);
        out.loss_trace.push_back(current);
        if (current < stop_below) {
            out.epochs_used = epoch;
            out.converged = true;
            out.theta = std::move(theta);
            return out;
        }
        for (double &d : delta) {
            d = rng.sign();
        }
        for (std::size_t i = 0; i < L; ++i) {
            probe[i] = theta[i] + c * delta[i];
        }
        const double plus = objective(probe);
        for (std::size_t i = 0; i < L; ++i) {
            probe[i] = theta[i] - c * delta[i];
        }
        const double minus = objective(probe);
        const double slope = (plus - minus) / (2.0 * c);
        for (std::size_t i = 0; i < L; ++i) {
            velocity[i] = cfg.momentum * velocity[i] + slope * delta[i];
            theta[i] -= cfg.learning_rate * velocity[i];
        }
    }
    out.epochs_used = cfg.max_epochs;
    out.theta = std::move(theta);
    return out;
}

std::vector<double> spsa_initial_theta(const SpsaConfig &cfg, std::size_t num_params) {
    Stream rng = Stream(cfg.seed).substream(stream_tag::kStudent);
    std::vector<double> theta(num_params);
    for (double &t : theta) {
        t = rng.uniform(-1.0, 1.0);
    }
    return theta;
}

double mean_squared_error(BatchEvaluator &eval, const Dataset &data, std::span<const double> theta,
                          std::vector<double> &scratch) {
    scratch.resize(data.inputs.size());
    eval.evaluate(data.inputs, theta, scratch);
    double acc = 0.0;
    for (std::size_t j = 0; j < scratch.size(); ++j) {
        const double r = scratch[j] - data.targets[j];
        acc += r * r;
    }
    return acc / static_cast<double>(scratch.size());
}

TrainingRun spsa_fit(const CircuitModel &student, const Dataset &train, const SpsaConfig &cfg,
                     const Dataset *test, LossKind loss) {
    cfg.validate();
    if (train.inputs.empty() || train.inputs.size() != train.targets.size()) {
        throw std::invalid_argument("spsa_fit: training set is empty or inconsistent");
    }
    if (student.n_qubits() != train.target_model.n_qubits()) {
        throw std::invalid_argument("spsa_fit: student and dataset differ in qubit count");
    }
    BatchEvaluator eval(student);
    std::vector<double> scratch;
    const auto objective = [&](std::span<const double> theta) {
        return mean_squared_error(eval, train, theta, scratch);
    };

    TrainingRun run;
    run.loss = loss;
    run.initial_theta = spsa_initial_theta(cfg, student.num_params());
    Stream perturb = Stream(cfg.seed).substream(stream_tag::kSpsa);
    SpsaTrace trace =
        spsa_minimize(objective, run.initial_theta, cfg, perturb, cfg.rmse_stop * cfg.rmse_stop);

    run.final_theta = std::move(trace.theta);
    run.epochs_used = trace.epochs_used;
    run.loss_trace.reserve(trace.loss_trace.size());
    for (double mse : trace.loss_trace) {
        run.loss_trace.push_back(std::sqrt(mse));
    }
    const double train_mse = objective(run.final_theta);
    run.train_rmse = std::sqrt(train_mse);
    run.train_loss = to_loss(train_mse, loss);
    if (test != nullptr) {
        const double test_mse = mean_squared_error(eval, *test, run.final_theta, scratch);
        run.test_rmse = std::sqrt(test_mse);
        run.test_loss = to_loss(test_mse, loss);
        run.gap = run.test_loss - run.train_loss;
    }
    return run;
}

GapTable gap_experiment(const GapSettings &settings, const Executor &exec) {
    if (settings.num_params_values.empty() || settings.num_samples_values.empty() ||
        settings.repeats < 1 || settings.test_size < 1) {
        throw std::invalid_argument("gap_experiment: sweeps, repeats and test size must be nonempty");
    }
    settings.spsa.validate();
    const std::size_t n_l = settings.num_params_values.size();
    const std::size_t n_m = settings.num_samples_values.size();
    const std::size_t reps = settings.repeats;

    GapTable table;
    table.rows.resize(n_l * n_m * reps);
    exec.parallel_for(table.rows.size(), [&](std::size_t task, std::size_t) {
        const std::size_t li = task / (n_m * reps);
        const std::size_t mi = (task / reps) % n_m;
        const std::size_t r = task % reps;
        const std::size_t L = settings.num_params_values[li];
        const std::size_t M = settings.num_samples_values[mi];

        const Stream cell = Stream(settings.seed).substream({stream_tag::kData, L, M, r});
        Stream teacher_rng = cell.substream(stream_tag::kTeacher);
        const Dataset train = generate_dataset(settings.n_qubits, L, M, teacher_rng);
        Stream test_rng = cell.substream(stream_tag::kTest);
        std::vector<double> test_xs(settings.test_size);
        for (double &x : test_xs) {
            x = test_rng.uniform(0.0, kTwoPi);
        }
        const Dataset test = label_inputs(train.target_model, train.target_theta, std::move(test_xs));
        Stream student_rng = cell.substream(stream_tag::kStudent);
        const CircuitModel student = CircuitModel::sample(settings.n_qubits, L, student_rng);
        SpsaConfig spsa = settings.spsa;
        spsa.seed = cell.substream(stream_tag::kSpsa).next();

        const TrainingRun run = spsa_fit(student, train, spsa, &test, settings.loss);
        table.rows[task] = GapRow{L, M, r, run.train_loss, run.test_loss, run.gap, run.epochs_used};
    });

    for (std::size_t li = 0; li < n_l; ++li) {
        for (std::size_t mi = 0; mi < n_m; ++mi) {
            std::vector<double> gaps;
            gaps.reserve(reps);
            for (std::size_t r = 0; r < reps; ++r) {
                gaps.push_back(table.rows[(li * n_m + mi) * reps + r].gap);
            }
            table.cells.push_back(GapCell{settings.num_params_values[li],
                                          settings.num_samples_values[mi], analysis::box_stats(gaps)});
        }
    }
    return table;
}

} // namespace pqcrad
