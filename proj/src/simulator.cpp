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

#include "umt/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "umt/errors.hpp"
#include "umt/kernels.hpp"

namespace umt {

namespace {

constexpr int kMaxDensityWidth = 11;
constexpr int kMaxEnsembleWidth = 26;
constexpr int kMaxDistributionAncillas = 12;
constexpr int kAutoDensityWidth = 6;
constexpr double kEngineAgreement = 1e-8;
// Spectral weights below this are dropped from the ensemble.
constexpr double kNegligibleWeight = 1e-15;

void check_probability(double p, const char *name, bool allow_one) {
    if (!(p >= 0.0) || p > 1.0 || (!allow_one && p == 1.0)) {
        std::ostringstream msg;
        msg << name << " = " << p << " outside [0, 1" << (allow_one ? "]" : ")");
        throw ParameterError(msg.str());
    }
}

void check_inputs(const Circuit &circuit, std::span<const DensityMatrix> inputs) {
    const auto &info = circuit.info();
    if (info.m < 1 || info.n < 1) {
        throw ParameterError("circuit has no work registers");
    }
    if (static_cast<int>(inputs.size()) != info.m) {
        throw ParameterError("circuit expects " + std::to_string(info.m) + " input states, got " +
                             std::to_string(inputs.size()));
    }
    for (const auto &rho : inputs) {
        if (rho.qubits() != info.n) {
            throw ParameterError("input state has " + std::to_string(rho.qubits()) +
                                 " qubits, registers hold " + std::to_string(info.n));
        }
    }
}

Circuit measurement_circuit(const Circuit &circuit, const MeasurementSpec &spec) {
    return spec.basis == Basis::Y ? imaginary_mode(circuit) : circuit;
}

std::vector<DensityMatrix> noisy_inputs(std::span<const DensityMatrix> inputs,
                                        const NoiseModel &noise) {
    std::vector<DensityMatrix> out;
    out.reserve(inputs.size());
    for (const auto &rho : inputs) {
        out.push_back(noise.state_noise > 0.0 ? depolarize_state(rho, noise.state_noise) : rho);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Density-matrix engine

MatrixXc evolve_density(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                        const NoiseModel &noise) {
    if (circuit.width() > kMaxDensityWidth) {
        throw ParameterError("density-matrix engine supports width <= " +
                             std::to_string(kMaxDensityWidth) + " (got " +
                             std::to_string(circuit.width()) + ")");
    }
    const Index anc_dim = pow2(circuit.ancilla_count());
    MatrixXc rho = MatrixXc::Zero(anc_dim, anc_dim);
    rho(0, 0) = 1.0;
    for (const auto &input : inputs) {
        rho = kron(rho, input.matrix());
    }
    const Index dim = rho.rows();
    for (std::size_t k = 0; k < circuit.layers().size(); ++k) {
        apply_layer(rho, circuit.width(), circuit.layers()[k]);
        if (noise.layer_noise > 0.0 && circuit.ends_round(k)) {
            rho *= (1.0 - noise.layer_noise);
            rho.diagonal().array() += noise.layer_noise / static_cast<double>(dim);
        }
    }
    return rho;
}

double density_parity(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                      const NoiseModel &noise) {
    const MatrixXc rho = evolve_density(circuit, inputs, noise);
    const std::uint64_t mask = circuit.ancilla_mask();
    // Tr[(X^{⊗A} ⊗ I) ρ] = Σ_x ρ(x ⊕ mask, x).
    double total = 0.0;
    for (Index x = 0; x < rho.rows(); ++x) {
        total += rho(static_cast<Index>(static_cast<std::uint64_t>(x) ^ mask), x).real();
    }
    return total;
}

std::vector<double> density_distribution(const Circuit &circuit,
                                         std::span<const DensityMatrix> inputs,
                                         const NoiseModel &noise) {
    MatrixXc rho = evolve_density(circuit, inputs, noise);
    for (int a = 0; a < circuit.ancilla_count(); ++a) {
        apply_gate(rho, circuit.width(), Gate::h(a));
    }
    const int work = circuit.width() - circuit.ancilla_count();
    std::vector<double> dist(static_cast<std::size_t>(pow2(circuit.ancilla_count())), 0.0);
    for (Index x = 0; x < rho.rows(); ++x) {
        dist[static_cast<std::size_t>(x >> work)] += rho(x, x).real();
    }
    return dist;
}

// ---------------------------------------------------------------------------
// Eigen-ensemble engine

struct Ensemble {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<VectorXc>> vectors;
};

Ensemble expand_inputs(std::span<const DensityMatrix> inputs) {
    Ensemble e;
    for (const auto &rho : inputs) {
        const auto sd = spectral(rho);
        std::vector<double> w;
        std::vector<VectorXc> v;
        for (Index k = 0; k < sd.eigenvalues.size(); ++k) {
            if (sd.eigenvalues(k) > kNegligibleWeight) {
                w.push_back(sd.eigenvalues(k));
                v.push_back(sd.eigenvectors.col(k));
            }
        }
        e.weights.push_back(std::move(w));
        e.vectors.push_back(std::move(v));
    }
    return e;
}

// Visits every product term of the ensemble as a noisy MixtureState that
// has been pushed through the whole circuit.
template <typename Visit>
void for_each_evolved_term(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                           const NoiseModel &noise, Visit &&visit) {
    if (circuit.width() > kMaxEnsembleWidth) {
        throw ParameterError("eigen-ensemble engine supports width <= " +
                             std::to_string(kMaxEnsembleWidth));
    }
    const Ensemble e = expand_inputs(inputs);
    const std::size_t m = inputs.size();
    std::vector<std::size_t> choice(m, 0);
    const Index full = pow2(circuit.width());
    while (true) {
        double weight = 1.0;
        VectorXc work = VectorXc::Ones(1);
        for (std::size_t r = 0; r < m; ++r) {
            weight *= e.weights[r][choice[r]];
            work = kron(work, e.vectors[r][choice[r]]);
        }
        VectorXc amps = VectorXc::Zero(full);
        // Ancillas start in |0...0⟩, the most significant block.
        amps.head(work.size()) = work;

        MixtureState state(circuit.width());
        state.add(weight, std::move(amps));
        for (std::size_t k = 0; k < circuit.layers().size(); ++k) {
            state.apply(circuit.layers()[k]);
            if (noise.layer_noise > 0.0 && circuit.ends_round(k)) {
                state.depolarize(noise.layer_noise);
            }
        }
        visit(state);

        std::size_t r = m;
        while (r > 0) {
            --r;
            if (++choice[r] < e.weights[r].size()) {
                break;
            }
            choice[r] = 0;
            if (r == 0) {
                return;
            }
        }
    }
}

double ensemble_parity(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                       const NoiseModel &noise) {
    double total = 0.0;
    const std::uint64_t mask = circuit.ancilla_mask();
    for_each_evolved_term(circuit, inputs, noise,
                          [&](const MixtureState &s) { total += s.parity_expectation(mask); });
    return total;
}

std::vector<double> ensemble_distribution(const Circuit &circuit,
                                          std::span<const DensityMatrix> inputs,
                                          const NoiseModel &noise) {
    std::vector<double> dist(static_cast<std::size_t>(pow2(circuit.ancilla_count())), 0.0);
    for_each_evolved_term(circuit, inputs, noise, [&](const MixtureState &s) {
        const auto part = s.ancilla_distribution(circuit.ancilla_count());
        for (std::size_t b = 0; b < dist.size(); ++b) {
            dist[b] += part[b];
        }
    });
    return dist;
}

Engine resolve(Engine engine, const Circuit &circuit) {
    if (engine == Engine::Auto) {
        return circuit.width() <= kAutoDensityWidth ? Engine::DensityMatrix : Engine::EigenEnsemble;
    }
    return engine;
}

} // namespace

void NoiseModel::validate() const {
    check_probability(state_noise, "state noise", true);
    check_probability(layer_noise, "layer noise", false);
}

DensityMatrix depolarize_state(const DensityMatrix &rho, double gamma0) {
    check_probability(gamma0, "gamma0", true);
    const Index d = rho.dim();
    MatrixXc out = (1.0 - gamma0) * rho.matrix();
    out.diagonal().array() += gamma0 / static_cast<double>(d);
    return make_density(out);
}

void MixtureState::add(double weight, VectorXc amplitudes) {
    if (weight < 0.0) {
        throw ParameterError("mixture weight must be non-negative");
    }
    if (amplitudes.size() != pow2(width_)) {
        throw ParameterError("mixture component has the wrong dimension");
    }
    components_.emplace_back(weight, std::move(amplitudes));
}

double MixtureState::total_weight() const {
    double total = residual_;
    for (const auto &c : components_) {
        total += c.first;
    }
    return total;
}

void MixtureState::apply(const Layer &layer) {
    for (auto &c : components_) {
        apply_layer(c.second, width_, layer);
    }
}

void MixtureState::depolarize(double gamma) {
    check_probability(gamma, "layer noise", false);
    for (auto &c : components_) {
        residual_ += gamma * c.first;
        c.first *= (1.0 - gamma);
    }
}

double MixtureState::parity_expectation(std::uint64_t mask) const {
    double total = 0.0;
    for (const auto &[weight, v] : components_) {
        // ⟨ψ| X^{⊗A} |ψ⟩ = Σ_x conj(ψ[x ⊕ mask]) ψ[x].
        double value = 0.0;
        for (Index x = 0; x < v.size(); ++x) {
            value += (std::conj(v[static_cast<Index>(static_cast<std::uint64_t>(x) ^ mask)]) * v[x])
                         .real();
        }
        total += weight * value;
    }
    return total;
}

std::vector<double> MixtureState::ancilla_distribution(int ancillas) const {
    if (ancillas > kMaxDistributionAncillas) {
        throw ParameterError("bit-string distributions support at most " +
                             std::to_string(kMaxDistributionAncillas) + " ancillas");
    }
    const std::size_t outcomes = static_cast<std::size_t>(pow2(ancillas));
    std::vector<double> dist(outcomes, residual_ / static_cast<double>(outcomes));
    const int work = width_ - ancillas;
    for (const auto &[weight, v] : components_) {
        VectorXc rotated = v;
        for (int a = 0; a < ancillas; ++a) {
            apply_gate(rotated, width_, Gate::h(a));
        }
        for (Index x = 0; x < rotated.size(); ++x) {
            dist[static_cast<std::size_t>(x >> work)] += weight * std::norm(rotated[x]);
        }
    }
    return dist;
}

double run_exact(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                 const NoiseModel &noise, const MeasurementSpec &spec, Engine engine) {
    noise.validate();
    check_inputs(circuit, inputs);
    const Circuit c = measurement_circuit(circuit, spec);
    const auto states = noisy_inputs(inputs, noise);
    NoiseModel layer_only = noise;
    layer_only.state_noise = 0.0;

    switch (resolve(engine, c)) {
    case Engine::DensityMatrix:
        return density_parity(c, states, layer_only);
    case Engine::EigenEnsemble:
        return ensemble_parity(c, states, layer_only);
    case Engine::SelfCheck: {
        const double a = density_parity(c, states, layer_only);
        const double b = ensemble_parity(c, states, layer_only);
        if (std::abs(a - b) > kEngineAgreement) {
            std::ostringstream msg;
            msg << "engines disagree: density " << a << " vs ensemble " << b;
            throw NumericError(msg.str());
        }
        return b;
    }
    case Engine::Auto:
        break;
    }
    throw NumericError("unresolved engine");
}

std::vector<double> bitstring_distribution(const Circuit &circuit,
                                           std::span<const DensityMatrix> inputs,
                                           const NoiseModel &noise, const MeasurementSpec &spec,
                                           Engine engine) {
    noise.validate();
    check_inputs(circuit, inputs);
    if (circuit.ancilla_count() > kMaxDistributionAncillas) {
        throw ParameterError("bit-string distributions support at most " +
                             std::to_string(kMaxDistributionAncillas) + " ancillas");
    }
    const Circuit c = measurement_circuit(circuit, spec);
    const auto states = noisy_inputs(inputs, noise);
    NoiseModel layer_only = noise;
    layer_only.state_noise = 0.0;

    switch (resolve(engine, c)) {
    case Engine::DensityMatrix:
        return density_distribution(c, states, layer_only);
    case Engine::EigenEnsemble:
        return ensemble_distribution(c, states, layer_only);
    case Engine::SelfCheck: {
        const auto a = density_distribution(c, states, layer_only);
        const auto b = ensemble_distribution(c, states, layer_only);
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (std::abs(a[k] - b[k]) > kEngineAgreement) {
                throw NumericError("engines disagree on the outcome distribution");
            }
        }
        return b;
    }
    case Engine::Auto:
        break;
    }
    throw NumericError("unresolved engine");
}

std::vector<int> sample_parities(double expectation, std::int64_t shots, std::uint64_t seed) {
    if (shots < 0) {
        throw ParameterError("shot count must be non-negative");
    }
    const double p_plus = std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0);
    ShotRng rng(seed);
    std::vector<int> out(static_cast<std::size_t>(shots));
    for (auto &o : out) {
        o = rng.uniform() < p_plus ? 1 : -1;
    }
    return out;
}

std::vector<std::uint64_t> sample_bitstrings(const std::vector<double> &distribution,
                                             std::int64_t shots, std::uint64_t seed) {
    if (shots < 0) {
        throw ParameterError("shot count must be non-negative");
    }
    if (distribution.empty()) {
        throw ParameterError("empty distribution");
    }
    std::vector<double> cdf(distribution.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < distribution.size(); ++k) {
        acc += std::max(0.0, distribution[k]);
        cdf[k] = acc;
    }
    ShotRng rng(seed);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(shots));
    for (auto &o : out) {
        const double u = rng.uniform() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        o = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                                static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    }
    return out;
}

std::vector<int> sample_shots(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                              const NoiseModel &noise, const MeasurementSpec &spec,
                              std::int64_t shots, std::uint64_t seed) {
    return sample_parities(run_exact(circuit, inputs, noise, spec), shots, seed);
}

} // namespace umt
