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

#include "pqcrad/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "pqcrad/analysis.hpp"
#include "pqcrad/kernels.hpp"
#include "pqcrad/pauli.hpp"
#include "pqcrad/rademacher.hpp"
#include "pqcrad/rng.hpp"
#include "pqcrad/simulator.hpp"

namespace pqcrad {

namespace {

using Vec = std::vector<Complex>;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Vec matvec(const DenseMatrix &m, const Vec &v) {
    Vec out(m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < m.dim; ++c) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

// cos(t) I - i sin(t) P, valid because P^2 = I.
DenseMatrix dense_exp(const PauliString &p, double theta) {
    DenseMatrix m = dense_matrix(p);
    const Complex a{0.0, -std::sin(theta)};
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            m(r, c) *= a;
        }
        m(r, r) += std::cos(theta);
    }
    return m;
}

Vec product_state(std::size_t n, double x) {
    Vec v{Complex{1.0, 0.0}};
    const double c = std::cos(x / 2);
    const double s = std::sin(x / 2);
    for (std::size_t q = 0; q < n; ++q) {
        Vec next(v.size() * 2);
        for (std::size_t i = 0; i < v.size(); ++i) {
            next[2 * i] = v[i] * c;
            next[2 * i + 1] = v[i] * s;
        }
        v = std::move(next);
    }
    return v;
}

double dense_f(const CircuitModel &m, double x, const std::vector<double> &theta) {
    Vec psi = product_state(m.n_qubits(), x);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        psi = matvec(dense_exp(m.generators()[j], theta[j]), psi);
    }
    const Vec o = matvec(dense_matrix(m.observable()), psi);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        acc += std::conj(psi[i]) * o[i];
    }
    return acc.real();
}

double max_diff(const Vec &a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

StateVector random_state(std::size_t n, Stream &rng) {
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    return StateVector(n, std::move(amps));
}

std::vector<double> random_theta(std::size_t L, Stream &rng) {
    std::vector<double> t(L);
    for (auto &v : t) {
        v = rng.uniform(0.0, 2 * std::numbers::pi);
    }
    return t;
}

class Recorder {
  public:
    explicit Recorder(SelftestReport &r) : report_(r) {}
    void check(std::string suite, std::string name, bool ok, std::string detail) {
        report_.checks.push_back({std::move(suite), std::move(name), ok, std::move(detail)});
    }

  private:
    SelftestReport &report_;
};

void dense_suite(Recorder &rec, Stream rng) {
    constexpr double kTol = 1e-10;
    double worst_pauli = 0.0;
    double worst_exp = 0.0;
    double worst_f = 0.0;
    for (int inst = 0; inst < 40; ++inst) {
        const std::size_t n = 1 + rng.below(3);
        const std::size_t L = rng.below(7);
        const PauliString p = sample_pauli_string(n, rng);
        const StateVector s = random_state(n, rng);
        const Vec v(s.amplitudes().begin(), s.amplitudes().end());
        worst_pauli = std::max(worst_pauli, max_diff(matvec(dense_matrix(p), v), apply_pauli(p, s).amplitudes()));
        const double t = rng.uniform(-4.0, 4.0);
        worst_exp = std::max(worst_exp, max_diff(matvec(dense_exp(p, t), v), apply_exp_pauli(p, t, s).amplitudes()));

        const CircuitModel m = CircuitModel::sample(n, L, rng);
        const double x = rng.uniform(0.0, 2 * std::numbers::pi);
        const auto theta = random_theta(L, rng);
        worst_f = std::max(worst_f, std::abs(evaluate(m, x, theta) - dense_f(m, x, theta)));
    }
    rec.check("dense", "apply_pauli", worst_pauli <= kTol, "max |diff| " + sci(worst_pauli));
    rec.check("dense", "apply_exp_pauli", worst_exp <= kTol, "max |diff| " + sci(worst_exp));
    rec.check("dense", "evaluate", worst_f <= kTol, "max |diff| " + sci(worst_f));
}

void gradient_suite(Recorder &rec, Stream rng) {
    constexpr double kStep = 1e-5;
    constexpr double kTol = 1e-6;
    double worst = 0.0;
    double worst_partial = 0.0;
    for (int inst = 0; inst < 20; ++inst) {
        const std::size_t n = 1 + rng.below(4);
        const std::size_t L = 1 + rng.below(6);
        const CircuitModel m = CircuitModel::sample(n, L, rng);
        const double x = rng.uniform(0.0, 2 * std::numbers::pi);
        auto theta = random_theta(L, rng);
        Evaluator ev(m);
        const auto g = ev.gradient(x, theta);
        for (std::size_t j = 0; j < L; ++j) {
            const double t0 = theta[j];
            theta[j] = t0 + kStep;
            const double up = ev.evaluate(x, theta);
            theta[j] = t0 - kStep;
            const double down = ev.evaluate(x, theta);
            theta[j] = t0;
            worst = std::max(worst, std::abs(g[j] - (up - down) / (2 * kStep)));
            worst_partial = std::max(worst_partial, std::abs(g[j]));
        }
    }
    rec.check("gradient", "shift rule vs central difference", worst <= kTol, "max |diff| " + sci(worst));
    rec.check("gradient", "partials bounded by 2", worst_partial <= 2.0 + 1e-8,
              "max |partial| " + sci(worst_partial));
}

void sigma_suite(Recorder &rec, Stream rng) {
    // n = 1, G = X, O = Z, x = 0: f = cos(2 theta), so theta in {0, pi/2}
    // gives rows (1, 1) and (-1, -1) and the exact value 0.5.
    const CircuitModel m(1, {PauliString::parse("X")}, PauliString::parse("Z"));
    const double xs2[] = {0.0, 0.0};
    const double exact = enumerate_sigma(m, {{0.0}, {std::numbers::pi / 2}}, xs2);
    rec.check("exact-sigma", "two-point example", std::abs(exact - 0.5) <= 1e-12, "value " + sci(exact));

    const double single = enumerate_sigma(m, {{0.3}}, xs2);
    rec.check("exact-sigma", "single candidate is zero", single == 0.0, "value " + sci(single));

    const CircuitModel m3 = CircuitModel::sample(3, 4, rng);
    ThetaSet thetas;
    for (int k = 0; k < 8; ++k) {
        thetas.push_back(random_theta(4, rng));
    }
    std::vector<double> xs(8);
    for (auto &x : xs) {
        x = rng.uniform(0.0, 2 * std::numbers::pi);
    }
    const double truth = enumerate_sigma(m3, thetas, xs);
    const auto mc = estimate_sigma_only(m3, thetas, xs, 4000, rng.next());
    const double z = std::abs(mc.g_ave - truth) / mc.g_err;
    rec.check("exact-sigma", "Monte Carlo within 4 standard errors", z <= 4.0,
              "exact " + sci(truth) + ", estimate " + sci(mc.g_ave) + ", z " + sci(z));
}

void regression_suite(Recorder &rec) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (double x : {10.0, 100.0, 200.0, 400.0, 800.0}) {
        xs.push_back(x);
        ys.push_back(std::pow(x, -0.5));
    }
    const auto fit = analysis::loglog_fit(xs, ys);
    rec.check("regression", "power law slope", std::abs(fit.slope + 0.5) <= 1e-12,
              "slope " + sci(fit.slope));

    // Student t with 3 degrees of freedom has a closed-form CDF.
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0, 2.0, 3.182, 5.0, 12.0}) {
        const double a = t / std::sqrt(3.0);
        const double cdf = 0.5 + (a / (1 + a * a) + std::atan(a)) / std::numbers::pi;
        worst = std::max(worst, std::abs(analysis::student_t_two_sided_p(t, 3.0) - 2 * (1 - cdf)));
    }
    rec.check("regression", "t distribution, 3 dof", worst <= 1e-10, "max |diff| " + sci(worst));
}

void kernel_suite(Recorder &rec, Stream rng) {
    const kernels::KernelTable *simd = kernels::avx2_table();
    if (simd == nullptr) {
        rec.check("kernels", "avx2 vs scalar", true, "avx2 unavailable, skipped");
        return;
    }
    const auto &ref = kernels::scalar_table();
    bool identical = true;
    for (int inst = 0; inst < 20 && identical; ++inst) {
        const std::size_t n = 1 + rng.below(6);
        const std::size_t dim = std::size_t{1} << n;
        const std::size_t stride = kernels::padded_lanes(1 + rng.below(9));
        std::vector<double> re(dim * stride);
        std::vector<double> im(dim * stride);
        for (std::size_t i = 0; i < re.size(); ++i) {
            re[i] = rng.uniform(-1.0, 1.0);
            im[i] = rng.uniform(-1.0, 1.0);
        }
        const PauliString p = sample_pauli_string(n, rng);
        const kernels::PauliMasks pm{p.x_mask(), p.z_mask(), p.y_count()};
        const double t = rng.uniform(-3.0, 3.0);
        auto re2 = re;
        auto im2 = im;
        ref.exp_pauli(re.data(), im.data(), dim, stride, pm, std::cos(t), std::sin(t));
        simd->exp_pauli(re2.data(), im2.data(), dim, stride, pm, std::cos(t), std::sin(t));
        identical = identical && re == re2 && im == im2;

        std::vector<double> a_re(stride), a_im(stride), b_re(stride), b_im(stride);
        ref.expect_pauli(re.data(), im.data(), dim, stride, pm, a_re.data(), a_im.data());
        simd->expect_pauli(re.data(), im.data(), dim, stride, pm, b_re.data(), b_im.data());
        identical = identical && a_re == b_re && a_im == b_im;

        const std::size_t rows = std::min<std::size_t>(stride, 3);
        std::vector<double> ga(rows * stride), gb(rows * stride);
        ref.gram_pauli(re.data(), im.data(), dim, stride, rows, pm, ga.data());
        simd->gram_pauli(re.data(), im.data(), dim, stride, rows, pm, gb.data());
        identical = identical && ga == gb;
    }
    rec.check("kernels", "avx2 vs scalar", identical, identical ? "bit-identical" : "outputs differ");
}

void moment_suite(Recorder &rec, Stream rng) {
    double worst = 0.0;
    for (int inst = 0; inst < 10; ++inst) {
        const std::size_t n = 1 + rng.below(5);
        const std::size_t L = rng.below(8);
        const CircuitModel m = CircuitModel::sample(n, L, rng);
        MomentEvaluator me(m);
        Evaluator ev(m);
        const auto theta = random_theta(L, rng);
        for (int k = 0; k < 5; ++k) {
            const double x = rng.uniform(0.0, 2 * std::numbers::pi);
            worst = std::max(worst, std::abs(me.evaluate(x, theta) - ev.evaluate(x, theta)));
        }
    }
    rec.check("moments", "polynomial form vs state vector", worst <= 1e-12, "max |diff| " + sci(worst));
}

} // namespace

bool SelftestReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck &c) { return c.passed; });
}

std::string SelftestReport::str() const {
    std::string out;
    for (const auto &c : checks) {
        out += c.passed ? "PASS " : "FAIL ";
        out += c.suite + ": " + c.name + " (" + c.detail + ")\n";
    }
    return out;
}

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport report;
    Recorder rec(report);
    const Stream root(seed);
    dense_suite(rec, root.substream(1));
    gradient_suite(rec, root.substream(2));
    sigma_suite(rec, root.substream(3));
    regression_suite(rec);
    kernel_suite(rec, root.substream(5));
    moment_suite(rec, root.substream(6));
    return report;
}

} // namespace pqcrad
