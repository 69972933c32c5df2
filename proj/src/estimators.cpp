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


#include "umt/estimators.hpp"

#include <cmath>
#include <string>

#include "umt/errors.hpp"
#include "umt/oracle.hpp"

namespace umt {

namespace {

constexpr double kMinDenominator = 1e-6;

struct SampleMoments {
    double mean = 0.0;
    double variance = 0.0;
};

SampleMoments moments(const std::vector<int> &xs) {
    SampleMoments out;
    if (xs.empty()) {
        return out;
    }
    double sum = 0.0;
    for (int x : xs) {
        sum += x;
    }
    const double n = static_cast<double>(xs.size());
    out.mean = sum / n;
    if (xs.size() > 1) {
        // Outcomes are ±1, so Σx² = n.
        out.variance = (n - n * out.mean * out.mean) / (n - 1.0);
    }
    return out;
}

std::int64_t part_shots(const CircuitOptions &options, const ErrorBudget &budget) {
    if (options.shots_per_part) {
        if (*options.shots_per_part < 1) {
            throw ParameterError("shots per part must be >= 1");
        }
        return *options.shots_per_part;
    }
    return plan_shots(budget);
}

Circuit base_circuit(int m, int n, const CircuitOptions &options) {
    return build_circuit(m, n, options.s, options.family, options.policy);
}

std::vector<DensityMatrix> copies(const DensityMatrix &rho, int m) {
    return std::vector<DensityMatrix>(static_cast<std::size_t>(m), rho);
}

PauliObservable identity_observable(int n) {
    return PauliObservable(n, {{1.0, PauliString::identity(n)}});
}

} // namespace

void ErrorBudget::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ParameterError("epsilon must be > 0");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ParameterError("delta must lie in (0, 1)");
    }
    if (target_variance && !(*target_variance > 0.0)) {
        throw ParameterError("target variance must be > 0");
    }
}

std::int64_t plan_shots(const ErrorBudget &budget) {
    budget.validate();
    const double half = budget.epsilon / 2.0;
    return static_cast<std::int64_t>(std::ceil(2.0 * std::log(2.0 / budget.delta) / (half * half)));
}

EstimateReport estimate_mt(std::span<const DensityMatrix> states, const CircuitOptions &options,
                           const ErrorBudget &budget, std::uint64_t seed) {
    budget.validate();
    options.noise.validate();
    if (states.empty()) {
        throw ParameterError("estimate_mt needs at least one state");
    }
    const int m = static_cast<int>(states.size());
    const Circuit circuit = base_circuit(m, states.front().qubits(), options);
    const std::int64_t shots = part_shots(options, budget);

    EstimateReport report;
    report.budget = budget;
    const Basis bases[] = {Basis::X, Basis::Y};
    for (int b = 0; b < 2; ++b) {
        const auto draws =
            sample_shots(circuit, states, options.noise, {bases[b]}, shots, stream_seed(seed, b));
        const auto mo = moments(draws);
        report.parts.push_back({bases[b], shots, mo.mean, mo.variance});
    }
    report.value = {report.parts[0].mean, report.parts[1].mean};
    report.shots_used = 2 * shots;
    report.copies_used = m * report.shots_used;
    report.empirical_variance =
        (report.parts[0].sample_variance + report.parts[1].sample_variance) / static_cast<double>(shots);
    return report;
}

EstimateReport estimate_numerator(const DensityMatrix &rho, int m, const PauliObservable &o,
                                  const CircuitOptions &options, const ErrorBudget &budget,
                                  std::uint64_t seed) {
    budget.validate();
    options.noise.validate();
    if (o.terms().empty() || !(o.coefficient_norm() > 0.0)) {
        throw ParameterError("observable has no nonzero terms");
    }
    if (o.qubits() != rho.qubits()) {
        throw ParameterError("observable and state qubit counts differ");
    }
    const Circuit circuit = base_circuit(m, rho.qubits(), options);
    const auto inputs = copies(rho, m);
    const double eps_k = budget.epsilon / o.coefficient_norm();

    EstimateReport report;
    report.budget = budget;
    double value = 0.0;
    double variance = 0.0;
    for (std::size_t k = 0; k < o.terms().size(); ++k) {
        const auto &term = o.terms()[k];
        TermEstimate est{term.string, term.coefficient, eps_k, 0, 0.0, 0.0};
        if (term.coefficient != 0.0) {
            ErrorBudget term_budget = budget;
            term_budget.epsilon = eps_k;
            est.shots = part_shots(options, term_budget);
            const Circuit c = attach_observable(circuit, term.string);
            const auto mo = moments(sample_shots(c, inputs, options.noise, {Basis::X}, est.shots,
                                                 stream_seed(seed, k)));
            est.mean = mo.mean;
            est.sample_variance = mo.variance;
            value += term.coefficient * est.mean;
            variance += term.coefficient * term.coefficient * est.sample_variance /
                        static_cast<double>(est.shots);
            report.shots_used += est.shots;
        }
        report.terms.push_back(std::move(est));
    }
    report.value = {value, 0.0};
    report.empirical_variance = variance;
    report.copies_used = m * report.shots_used;
    return report;
}

std::vector<double> term_traces(const DensityMatrix &rho, int m, const PauliObservable &o) {
    const MatrixXc power = oracle::matrix_power<double>(rho.matrix(), m);
    std::vector<double> out;
    for (const auto &t : o.terms()) {
        out.push_back((pauli_matrix<double>(t.string) * power).trace().real());
    }
    return out;
}

RatioStats ratio_stats(double num_mean, double den_mean, const PauliObservable &o,
                       const DensityMatrix &rho, int m, std::int64_t shots,
                       std::optional<double> target_variance) {
    if (std::abs(den_mean) < kMinDenominator) {
        throw DegenerateDenominator("ratio_stats: denominator mean is ~0");
    }
    if (shots < 1) {
        throw ParameterError("ratio_stats: shots must be >= 1");
    }
    const auto traces = term_traces(rho, m, o);
    double var_num = 0.0;
    for (std::size_t k = 0; k < traces.size(); ++k) {
        const double a = o.terms()[k].coefficient;
        var_num += a * a * (1.0 - traces[k] * traces[k]);
    }
    const double var_den = 1.0 - den_mean * den_mean;
    const double n = static_cast<double>(shots);
    const double d2 = den_mean * den_mean;

    // Per-shot numerators of the two variance terms.
    const double first = num_mean * num_mean * var_den * var_den / (d2 * d2);
    const double second = var_num / d2;

    RatioStats out;
    out.mean_correction = num_mean * var_den * var_den / (n * d2 * den_mean);
    out.variance = (first + second) / n;
    if (target_variance) {
        if (!(*target_variance > 0.0)) {
            throw ParameterError("target variance must be > 0");
        }
        out.shots_for_target =
            static_cast<std::int64_t>(std::ceil((first + second) / *target_variance));
    }
    return out;
}

namespace {

EstimateReport exact_numerator(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                               const PauliObservable &o, const NoiseModel &noise,
                               const ErrorBudget &budget) {
    EstimateReport report;
    report.budget = budget;
    double value = 0.0;
    for (const auto &term : o.terms()) {
        TermEstimate est{term.string, term.coefficient, 0.0, 0, 0.0, 0.0};
        if (term.coefficient != 0.0) {
            est.mean = run_exact(attach_observable(circuit, term.string), inputs, noise);
            value += term.coefficient * est.mean;
        }
        report.terms.push_back(std::move(est));
    }
    report.value = {value, 0.0};
    return report;
}

} // namespace

VDResult virtual_distillation(const DensityMatrix &rho, int m, const PauliObservable &o,
                              const CircuitOptions &options, const ErrorBudget &budget,
                              EstimationMode mode, std::uint64_t seed, const DensityMatrix *ideal) {
    budget.validate();
    options.noise.validate();
    if (m < 1) {
        throw ParameterError("m must be >= 1 (got " + std::to_string(m) + ")");
    }
    if (o.qubits() != rho.qubits()) {
        throw ParameterError("observable and state qubit counts differ");
    }
    const DensityMatrix fed = depolarize_state(rho, options.noise.state_noise);

    VDResult result;
    result.noisy = oracle::expectation(fed, o);
    if (ideal) {
        result.ideal = oracle::expectation(*ideal, o);
    }
    if (m == 1) {
        result.corrected = result.noisy;
        result.numerator.value = result.noisy;
        result.denominator.value = 1.0;
        return result;
    }

    if (mode == EstimationMode::Exact) {
        const Circuit circuit = base_circuit(m, rho.qubits(), options);
        const auto inputs = copies(rho, m);
        result.numerator = exact_numerator(circuit, inputs, o, options.noise, budget);
        result.denominator =
            exact_numerator(circuit, inputs, identity_observable(rho.qubits()), options.noise, budget);
    } else {
        result.denominator = estimate_numerator(rho, m, identity_observable(rho.qubits()), options,
                                                budget, stream_seed(seed, 0));
        result.numerator = estimate_numerator(rho, m, o, options, budget, stream_seed(seed, 1));
        result.total_shots = result.numerator.shots_used + result.denominator.shots_used;
    }

    const double num = result.numerator.value.real();
    const double den = result.denominator.value.real();
    if (std::abs(den) < kMinDenominator) {
        throw DegenerateDenominator("denominator estimate " + std::to_string(den) +
                                    " is below 1e-6 in magnitude");
    }
    result.corrected = num / den;
    if (mode == EstimationMode::Shots) {
        const double r = result.corrected;
        result.variance = (result.numerator.empirical_variance +
                           r * r * result.denominator.empirical_variance) /
                          (den * den);
    }
    return result;
}

double bootstrap_ratio_variance(const DensityMatrix &rho, int m, const PauliObservable &o,
                                const CircuitOptions &options, const ErrorBudget &budget,
                                int trials, std::uint64_t seed) {
    if (trials < 2) {
        throw ParameterError("bootstrap needs at least 2 trials");
    }
    std::vector<double> values;
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        // Trial bases are spaced far apart so their term streams never overlap.
        const auto r = virtual_distillation(rho, m, o, options, budget, EstimationMode::Shots,
                                            seed + 1000003ULL * static_cast<std::uint64_t>(t));
        values.push_back(r.corrected);
        sum += r.corrected;
    }
    const double mean = sum / trials;
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return ss / (trials - 1);
}

} // namespace umt
