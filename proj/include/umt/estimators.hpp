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

/**
 * @file
 * Shot-based estimators built on the controlled-shift circuits.
 *
 * A single shot yields a parity p in {-1, +1}. X-basis readout has mean
 * Re Tr(ρ1...ρm), the phase-gate readout has mean Im Tr(ρ1...ρm), so the
 * complex estimate is V = mean(Q) + i mean(R). With a Pauli P on register 1
 * the X-basis mean is Tr(P ρ^m) for identical inputs.
 *
 * Shot counts come from the two-sided Hoeffding bound for outcomes in
 * [-1, 1] with ε/2 allotted to each part: N = ⌈2 ln(2/δ) / (ε/2)²⌉.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "umt/circuit.hpp"
#include "umt/pauli.hpp"
#include "umt/qstate.hpp"
#include "umt/schedule.hpp"
#include "umt/simulator.hpp"

namespace umt {

struct ErrorBudget {
    double epsilon = 0.1;
    double delta = 0.05;
    std::optional<double> target_variance; ///< Δ², used by ratio_stats

    void validate() const;
};

std::int64_t plan_shots(const ErrorBudget &budget);

/// Circuit family, schedule, noise and an optional fixed shot count that
/// overrides Hoeffding planning for every part.
struct CircuitOptions {
    int s = 1;
    CircuitFamily family = CircuitFamily::QubitParallel;
    SchedulePolicy policy = SchedulePolicy::Greedy;
    NoiseModel noise;
    std::optional<std::int64_t> shots_per_part;
};

/// One readout basis of estimate_mt.
struct PartEstimate {
    Basis basis = Basis::X;
    std::int64_t shots = 0;
    double mean = 0.0;
    double sample_variance = 0.0; ///< unbiased per-shot variance
};

/// One Pauli term a_k P_k of a numerator estimate.
struct TermEstimate {
    PauliString string;
    double coefficient = 0.0;
    double epsilon = 0.0; ///< ε_k
    std::int64_t shots = 0;
    double mean = 0.0; ///< Ŵ_k
    double sample_variance = 0.0;
};

struct EstimateReport {
    cplx value{0.0, 0.0};
    std::int64_t shots_used = 0;   ///< circuit repetitions
    std::int64_t copies_used = 0;  ///< copies of the input state consumed (m per repetition)
    double empirical_variance = 0.0; ///< estimated variance of value
    ErrorBudget budget;
    std::vector<PartEstimate> parts;
    std::vector<TermEstimate> terms;
};

/// Tr(ρ1...ρm) from X- and Y-basis shots; parity streams use seeds seed and seed+1.
EstimateReport estimate_mt(std::span<const DensityMatrix> states, const CircuitOptions &options,
                           const ErrorBudget &budget, std::uint64_t seed);

/// Tr(O ρ^m) as Σ a_k Ŵ_k with ε_k = ε / Σ|a_k|. Term k draws from seed + k.
EstimateReport estimate_numerator(const DensityMatrix &rho, int m, const PauliObservable &o,
                                  const CircuitOptions &options, const ErrorBudget &budget,
                                  std::uint64_t seed);

/// Tr(P_k ρ^m) for every term of o, by dense matrix powers.
std::vector<double> term_traces(const DensityMatrix &rho, int m, const PauliObservable &o);

struct RatioStats {
    double mean_correction = 0.0;
    double variance = 0.0;
    std::optional<std::int64_t> shots_for_target;
};

/// Large-N mean offset and variance of X̂/Ŷ:
///   E ≈ X/Y + X (1 - Y²)² / (N Y³)
///   Var ≈ X² (1 - Y²)² / (N Y⁴) + Σ a_k² (1 - Tr(P_k ρ^m)²) / (N Y²)
/// where X = num_mean, Y = den_mean. shots_for_target solves Var = Δ² for N.
RatioStats ratio_stats(double num_mean, double den_mean, const PauliObservable &o,
                       const DensityMatrix &rho, int m, std::int64_t shots,
                       std::optional<double> target_variance = std::nullopt);

enum class EstimationMode { Exact, Shots };

struct VDResult {
    double corrected = 0.0; ///< Re(numerator) / Re(denominator)
    double noisy = 0.0;     ///< Tr(O ρ) of the state fed to the circuit
    std::optional<double> ideal;
    EstimateReport numerator;
    EstimateReport denominator;
    double variance = 0.0; ///< delta-method variance of the corrected value (0 in exact mode)
    std::int64_t total_shots = 0;
};

/// Tr(O ρ^m)/Tr(ρ^m) through the circuit family in options. The state
/// noise of options.noise is applied to rho first. Throws
/// DegenerateDenominator when |denominator| < 1e-6.
VDResult virtual_distillation(const DensityMatrix &rho, int m, const PauliObservable &o,
                              const CircuitOptions &options, const ErrorBudget &budget,
                              EstimationMode mode, std::uint64_t seed,
                              const DensityMatrix *ideal = nullptr);

/// Sample variance of the shots-mode corrected value over trials seeded runs.
double bootstrap_ratio_variance(const DensityMatrix &rho, int m, const PauliObservable &o,
                                const CircuitOptions &options, const ErrorBudget &budget,
                                int trials, std::uint64_t seed);

} // namespace umt
