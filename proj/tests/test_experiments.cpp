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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "pqcrad/errors.hpp"
#include "pqcrad/experiments.hpp"

using namespace pqcrad;
namespace ex = pqcrad::experiments;

namespace {

ex::ScalingMSpec tiny_m() {
    auto s = ex::scaling_m_preset(ex::Preset::kDesk);
    s.base.n_trials = 8;
    s.base.n_theta = 60;
    s.base.n_qubits = 3;
    s.base.num_params = 3;
    s.sample_sizes = {10, 20, 40};
    return s;
}

std::string all_csv(const std::vector<ex::Output> &outs) {
    std::string s;
    for (const auto &o : outs) s += o.name + "\n" + o.table.str();
    return s;
}

} // namespace

TEST(Presets, DeskAndPaperValues) {
    const auto dm = ex::scaling_m_preset(ex::Preset::kDesk);
    EXPECT_EQ(dm.base.n_trials, 100U);
    EXPECT_EQ(dm.base.n_theta, 2000U);
    EXPECT_EQ(dm.base.num_params, 5U);
    EXPECT_EQ(dm.sample_sizes, (std::vector<std::size_t>{10, 100, 200, 400, 800}));
    const auto pm = ex::scaling_m_preset(ex::Preset::kPaper);
    EXPECT_EQ(pm.base.n_trials, 500U);
    EXPECT_EQ(pm.base.n_theta, 100000U);
    const auto pl = ex::scaling_l_preset(ex::Preset::kPaper);
    EXPECT_EQ(pl.base.n_theta, 50000U);
    EXPECT_EQ(pl.base.n_data, 200U);
    const auto dl = ex::scaling_l_preset(ex::Preset::kDesk);
    EXPECT_EQ(dl.param_counts, (std::vector<std::size_t>{4, 8, 12, 16}));
    const auto g = ex::gap_preset(ex::Preset::kPaper);
    EXPECT_EQ(g.repeats, 20U);
    EXPECT_EQ(g.spsa.max_epochs, 5000U);
    EXPECT_EQ(g.test_size, 1000U);
    EXPECT_EQ(ex::parse_preset("desk"), ex::Preset::kDesk);
    EXPECT_THROW((void)ex::parse_preset("huge"), std::invalid_argument);
}

TEST(ScalingM, DegenerateSweepReportsInsufficientData) {
    auto s = tiny_m();
    s.sample_sizes = {20, 20};
    try {
        (void)ex::run_scaling_m(s, Executor(1));
        FAIL();
    } catch (const InsufficientData &e) {
        EXPECT_NE(std::string(e.what()).find("scaling-m"), std::string::npos);
    }
}

TEST(ScalingM, RowsAndDeterminism) {
    const auto s = tiny_m();
    const auto a = ex::run_scaling_m(s, Executor(1));
    const auto b = ex::run_scaling_m(s, Executor(4));
    EXPECT_EQ(a.estimates.size(), 3U);
    EXPECT_EQ(all_csv(ex::tables(a)), all_csv(ex::tables(b)));
    EXPECT_EQ(ex::tables(a).front().table.rows().size(), 3U);
}

TEST(ScalingL, CouplingsAndCurves) {
    auto s = ex::scaling_l_preset(ex::Preset::kDesk);
    s.base.n_trials = 4;
    s.base.n_theta = 10;
    s.base.n_qubits = 3;
    s.base.n_data = 20;
    s.param_counts = {2, 3, 4};
    const auto r = ex::run_scaling_l(s, Executor(2));
    ASSERT_EQ(r.full.size(), 3U);
    ASSERT_EQ(r.restricted.size(), 3U);
    for (std::size_t i = 0; i < 3; ++i) {
        const double L = double(s.param_counts[i]);
        EXPECT_EQ(r.full[i].config.n_theta, 10 * s.param_counts[i]);
        EXPECT_EQ(r.full[i].config.scale, 1.0);
        EXPECT_NEAR(r.restricted[i].config.scale * 2 * std::numbers::pi * std::sqrt(L), 1.0, 1e-15);
    }
    EXPECT_EQ(ex::tables(r).front().table.rows().size(), 6U);
}

TEST(Convergence, PrefixMeans) {
    auto s = ex::convergence_preset(ex::Preset::kDesk);
    s.base.n_trials = 16;
    s.base.n_theta = 5;
    s.base.n_qubits = 2;
    s.base.n_data = 10;
    s.param_counts = {2, 3};
    const auto r = ex::run_convergence(s, Executor(1));
    for (std::size_t i = 0; i < 2; ++i) {
        const auto &v = r.estimates[i].per_trial_values;
        const auto &p = r.prefix_means[i];
        ASSERT_EQ(p.size(), 16U);
        EXPECT_NEAR(p.back(), r.estimates[i].g_ave, 1e-15);
        double acc = 0.0;
        for (std::size_t n = 0; n < v.size(); ++n) {
            acc += v[n];
            EXPECT_NEAR(p[n], acc / double(n + 1), 1e-15);
        }
    }
    EXPECT_EQ(ex::prefix_means(std::vector<double>{2, 4, 9}), (std::vector<double>{2, 3, 5}));
}

TEST(Gap, SummaryTableHasOneRowPerCell) {
    auto s = ex::gap_preset(ex::Preset::kDesk);
    s.n_qubits = 2;
    s.num_params_values = {2};
    s.num_samples_values = {5, 10};
    s.repeats = 4;
    s.test_size = 20;
    s.spsa.max_epochs = 5;
    const auto outs = ex::tables(ex::run_gap(s, Executor(1)));
    ASSERT_EQ(outs.size(), 2U);
    EXPECT_EQ(outs[0].table.rows().size(), 8U);
    EXPECT_EQ(outs[1].table.rows().size(), 2U);
}

TEST(Json, RoundTrip) {
    EstimatorConfig c;
    c.n_trials = 7;
    c.scale = 0.25;
    c.model_source = ModelSource::kResampledPerTrial;
    c.route = EstimatorRoute::kDirect;
    c.seed = 123456789012345ULL;
    EstimatorConfig d;
    ex::apply_json(ex::to_json(c), d);
    EXPECT_EQ(ex::to_json(c), ex::to_json(d));

    auto g = ex::gap_preset(ex::Preset::kPaper);
    g.loss = LossKind::kMse;
    g.spsa.perturbation = 0.05;
    GapSettings h;
    ex::apply_json(ex::to_json(g), h);
    EXPECT_EQ(ex::to_json(g), ex::to_json(h));
    EXPECT_THROW(ex::apply_json(nlohmann::json{{"route", "bogus"}}, d), std::invalid_argument);
}

TEST(Output, FilesCarryConfigAndManifestCarriesRunInfo) {
    const auto r = ex::run_scaling_m(tiny_m(), Executor(1));
    const auto dir = std::filesystem::temp_directory_path() / "pqcrad_test_out";
    std::filesystem::remove_all(dir);
    ex::write_outputs(dir, "scaling_m", ex::tables(r), {{"seed", r.spec.base.seed}}, 3, 1.5);
    std::ifstream csv(dir / "scaling_m.csv");
    std::string first, second;
    std::getline(csv, first);
    std::getline(csv, second);
    EXPECT_EQ(first.rfind("# pqcrad", 0), 0U);
    EXPECT_EQ(second.rfind("# config: ", 0), 0U);
    EXPECT_NE(second.find("\"seed\""), std::string::npos);
    const auto m = nlohmann::json::parse(std::ifstream(dir / "scaling_m.manifest.json"));
    EXPECT_EQ(m.at("threads"), 3);
    EXPECT_EQ(m.at("version"), std::string(ex::version()));
    EXPECT_EQ(m.at("files").size(), 1U);
    std::filesystem::remove_all(dir);
}
