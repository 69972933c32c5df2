// Copyright 2026 The UMT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "umt/ansatz.hpp"
#include "umt/errors.hpp"
#include "umt/estimators.hpp"
#include "umt/oracle.hpp"

using namespace umt;

TEST_CASE("Hoeffding shot plan") {
    CHECK(plan_shots({0.1, 0.05, {}}) == 2952);
    const auto base = plan_shots({0.1, 0.05, {}});
    const auto half = plan_shots({0.05, 0.05, {}});
    CHECK(std::abs(half - 4 * base) <= 4);
    const double ratio = static_cast<double>(plan_shots({0.1, 0.005, {}})) / base;
    CHECK(ratio == doctest::Approx(std::log(400.0) / std::log(40.0)).epsilon(1e-3));
    CHECK_THROWS_AS(plan_shots({0.0, 0.05, {}}), ParameterError);
    CHECK_THROWS_AS(plan_shots({0.1, 1.0, {}}), ParameterError);
    CHECK_THROWS_AS(plan_shots({0.1, 0.0, {}}), ParameterError);
    CHECK_THROWS_AS(plan_shots({0.1, 0.05, -1.0}), ParameterError);
}

TEST_CASE("estimate_mt on identical pure states") {
    std::mt19937_64 rng(1);
    const auto psi = random_density<double>(1, rng, 1);
    const std::vector<DensityMatrix> states{psi, psi};
    const ErrorBudget budget{0.1, 0.05, {}};
    const auto r = estimate_mt(states, {}, budget, 3);
    CHECK(r.value.real() == 1.0);
    CHECK(r.parts.size() == 2);
    CHECK(r.parts[0].sample_variance == 0.0);
    CHECK(std::abs(r.value.imag()) < 5.0 / std::sqrt(2952.0));
    CHECK(r.shots_used == 2 * 2952);
    CHECK(r.copies_used == 2 * r.shots_used);
    CHECK(r.empirical_variance >= 0.0);
}

TEST_CASE("estimate_mt is within 5 sigma of the exact trace and the variance identities hold") {
    std::mt19937_64 rng(2);
    CircuitOptions opt;
    opt.shots_per_part = 100000;
    for (int trial = 0; trial < 4; ++trial) {
        const int m = 2 + trial % 3;
        std::vector<DensityMatrix> states;
        for (int k = 0; k < m; ++k) {
            states.push_back(random_density<double>(1, rng));
        }
        const cplx exact = oracle::mt_exact<double>(states);
        opt.s = 1 + trial % (m / 2);
        const auto r = estimate_mt(states, opt, {}, 100 + trial);
        const double sigma = std::sqrt(r.empirical_variance);
        CHECK(std::abs(r.value - exact) < 5.0 * sigma + 1e-12);
        const double n = 100000.0;
        for (int part = 0; part < 2; ++part) {
            const double t = part == 0 ? exact.real() : exact.imag();
            const double var = 1.0 - t * t;
            // Standard error of the sample variance of ±1 draws: 2|t| sqrt(var/n).
            const double se = 2.0 * std::abs(t) * std::sqrt(var / n) + 1.0 / n;
            CHECK(std::abs(r.parts[part].sample_variance - var) < 5.0 * se);
        }
    }
}

TEST_CASE("identity numerator reproduces the real part of estimate_mt") {
    std::mt19937_64 rng(6);
    const auto rho = random_density<double>(1, rng);
    const std::vector<DensityMatrix> states(3, rho);
    const ErrorBudget budget{0.2, 0.1, {}};
    const PauliObservable id(1, {{1.0, PauliString::identity(1)}});
    const auto num = estimate_numerator(rho, 3, id, {}, budget, 77);
    const auto mt = estimate_mt(states, {}, budget, 77);
    CHECK(num.value.real() == mt.parts[0].mean);
    CHECK(num.shots_used == mt.parts[0].shots);
}

TEST_CASE("numerator on the experiment state") {
    const auto rho = ansatz_state(kDefaultAlpha, 0.4);
    const auto o = mean_z_observable(2);
    CircuitOptions opt;
    opt.s = 1;
    const ErrorBudget budget{0.1, 0.05, {}};
    const auto r = estimate_numerator(rho, 5, o, opt, budget, 11);
    const double exact = oracle::evaluate(rho, 5, o).tr_O_rho_m;
    CHECK(std::abs(r.value.real() - exact) <= 0.1);
    REQUIRE(r.terms.size() == 2);
    for (const auto &t : r.terms) {
        CHECK(t.epsilon == doctest::Approx(0.1));
        CHECK(t.shots == 2952);
    }
    CHECK(r.shots_used == 2 * 2952);
    CHECK(r.copies_used == 5 * r.shots_used);
    CHECK(r.empirical_variance * 2952 <= o.coefficient_square_sum() * (1.0 + 1e-3));
    CHECK_THROWS_AS(estimate_numerator(rho, 5, PauliObservable(2, {}), opt, budget, 1),
                    ParameterError);
}

TEST_CASE("numerator is linear in the observable") {
    std::mt19937_64 rng(12);
    const auto rho = random_density<double>(2, rng);
    const auto o = mean_z_observable(2);
    CircuitOptions opt;
    const ErrorBudget budget{0.1, 0.05, {}};
    const auto a = estimate_numerator(rho, 3, o, opt, budget, 5);
    const auto b = estimate_numerator(rho, 3, o.scaled(3.0), opt, budget, 5);
    CHECK(b.terms[0].epsilon == doctest::Approx(a.terms[0].epsilon / 3.0));
    CHECK(b.terms[0].shots > a.terms[0].shots);
    opt.shots_per_part = 4000;
    const auto c = estimate_numerator(rho, 3, o, opt, budget, 5);
    const auto d = estimate_numerator(rho, 3, o.scaled(3.0), opt, budget, 5);
    CHECK(d.value.real() == doctest::Approx(3.0 * c.value.real()));
}

TEST_CASE("ratio statistics") {
    std::mt19937_64 rng(13);
    const auto o = mean_z_observable(2);
    SUBCASE("pure state reduces to the numerator variance") {
        const auto rho = random_density<double>(2, rng, 1);
        const auto ev = oracle::evaluate(rho, 3, o);
        const auto st = ratio_stats(ev.tr_O_rho_m, ev.mt.real(), o, rho, 3, 1000);
        const auto t = term_traces(rho, 3, o);
        double expect = 0.0;
        for (std::size_t k = 0; k < t.size(); ++k) {
            expect += o.terms()[k].coefficient * o.terms()[k].coefficient * (1.0 - t[k] * t[k]);
        }
        CHECK(st.variance == doctest::Approx(expect / 1000.0));
        CHECK(std::abs(st.mean_correction) < 1e-12);
    }
    SUBCASE("corrections vanish as N grows") {
        const auto rho = ansatz_state(kDefaultAlpha, 0.4);
        const auto ev = oracle::evaluate(rho, 5, o);
        const auto small = ratio_stats(ev.tr_O_rho_m, ev.mt.real(), o, rho, 5, 100);
        const auto large = ratio_stats(ev.tr_O_rho_m, ev.mt.real(), o, rho, 5, 100000000);
        CHECK(small.mean_correction > 0.0);
        CHECK(large.mean_correction == doctest::Approx(small.mean_correction * 1e-6));
        CHECK(large.variance < 1e-6);
        const auto planned = ratio_stats(ev.tr_O_rho_m, ev.mt.real(), o, rho, 5, 100, 1e-4);
        REQUIRE(planned.shots_for_target);
        CHECK(static_cast<double>(*planned.shots_for_target) ==
              doctest::Approx(small.variance * 100 / 1e-4).epsilon(1e-3));
    }
    SUBCASE("degenerate denominator") {
        const auto rho = maximally_mixed<double>(2);
        CHECK_THROWS_AS(ratio_stats(0.1, 1e-9, o, rho, 2, 10), DegenerateDenominator);
    }
}

TEST_CASE("bootstrap agrees with the ratio variance in order of magnitude") {
    const auto rho = ansatz_state(kDefaultAlpha);
    const auto o = mean_z_observable(2);
    CircuitOptions opt;
    opt.s = 1;
    opt.noise = {0.4, 0.0};
    opt.shots_per_part = 10000;
    const auto fed = depolarize_state(rho, 0.4);
    const auto ev = oracle::evaluate(fed, 5, o);
    const auto st = ratio_stats(ev.tr_O_rho_m, ev.mt.real(), o, fed, 5, 10000);
    const double boot = bootstrap_ratio_variance(rho, 5, o, opt, {}, 20, 321);
    CHECK(st.variance > 0.0);
    CHECK(boot > st.variance / 3.0);
    CHECK(boot < st.variance * 3.0);
}

TEST_CASE("virtual distillation") {
    const auto o = mean_z_observable(2);
    SUBCASE("m = 1 returns the noisy expectation") {
        const auto rho = ansatz_state(kDefaultAlpha);
        CircuitOptions opt;
        opt.noise = {0.4, 0.3};
        const auto r = virtual_distillation(rho, 1, o, opt, {}, EstimationMode::Exact, 1, &rho);
        CHECK(r.corrected == doctest::Approx(r.noisy));
        CHECK(std::abs(r.noisy - 0.4528) < 5e-4);
        REQUIRE(r.ideal);
        CHECK(std::abs(*r.ideal - 0.7547) < 5e-4);
    }
    SUBCASE("pure input is returned unchanged for any m") {
        std::mt19937_64 rng(9);
        const auto rho = random_density<double>(2, rng, 1);
        for (int m = 2; m <= 4; ++m) {
            const auto r = virtual_distillation(rho, m, o, {}, {}, EstimationMode::Exact, 1);
            CHECK(r.corrected == doctest::Approx(oracle::expectation(rho, o)));
        }
    }
    SUBCASE("exact mode is gamma independent") {
        const auto rho = ansatz_state(kDefaultAlpha);
        CircuitOptions opt;
        opt.s = 1;
        opt.noise = {0.4, 0.0};
        const double ref = virtual_distillation(rho, 3, o, opt, {}, EstimationMode::Exact, 1).corrected;
        for (double g : {0.2, 0.5, 0.8}) {
            opt.noise.layer_noise = g;
            const double v = virtual_distillation(rho, 3, o, opt, {}, EstimationMode::Exact, 1).corrected;
            CHECK(std::abs(v - ref) < 1e-9);
        }
    }
    SUBCASE("shots mode lands near the exact value") {
        const auto rho = ansatz_state(kDefaultAlpha);
        CircuitOptions opt;
        opt.noise = {0.4, 0.0};
        opt.shots_per_part = 200000;
        const auto r = virtual_distillation(rho, 3, o, opt, {}, EstimationMode::Shots, 5);
        const double exact = oracle::vd_exact(depolarize_state(rho, 0.4), 3, o);
        CHECK(std::abs(r.corrected - exact) < 5.0 * std::sqrt(r.variance));
        CHECK(r.total_shots == 3 * 200000);
    }
    SUBCASE("vanishing denominator") {
        // A near-complete depolarizing round pushes the denominator below threshold.
        const auto rho = ansatz_state(kDefaultAlpha);
        CircuitOptions opt;
        opt.noise = {0.0, 0.9999999};
        CHECK_THROWS_AS(virtual_distillation(rho, 2, o, opt, {}, EstimationMode::Exact, 1),
                        DegenerateDenominator);
    }
}
