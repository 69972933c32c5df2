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
 * Exact execution of controlled-shift circuits on product inputs
 * ρ_1 ⊗ ... ⊗ ρ_m, with global depolarizing noise and X-basis ancilla
 * readout.
 *
 * Two engines:
 *  - DensityMatrix: full 2^W x 2^W evolution (W <= 11), noise applied as
 *    ρ -> (1-γ)ρ + γ I/2^W after each controlled-SWAP round.
 *  - EigenEnsemble: each input expanded over its spectrum, one state vector
 *    per product term. Depolarizing is unital and gates fix I/2^W, so a noisy
 *    round only moves weight (1-γ)->residual maximally mixed part
 *    (MixtureState). Parity of the residual is 0; its outcome law uniform.
 *
 * Ancilla outcome bit strings use ancilla 0 as the most significant bit; a 1
 * bit means the |−⟩ outcome.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "umt/circuit.hpp"
#include "umt/qstate.hpp"

namespace umt {

/// Global depolarizing noise. `state_noise` (γ₀) hits every input state before
/// the circuit; `layer_noise` (γ) hits the whole register after every
/// controlled-SWAP round. Zero disables either.
struct NoiseModel {
    double state_noise = 0.0;
    double layer_noise = 0.0;

    void validate() const;
    bool noiseless() const { return state_noise == 0.0 && layer_noise == 0.0; }
};

enum class Basis { X, Y };

/// Readout of every ancilla in the X basis. Y selects the imaginary-part
/// readout: the phase gate of imaginary_mode() is applied first.
struct MeasurementSpec {
    Basis basis = Basis::X;
};

/// (1-γ₀)ρ + γ₀ I/2^n, γ₀ in [0, 1].
DensityMatrix depolarize_state(const DensityMatrix &rho, double gamma0);

/// Weighted pure components plus a residual weight on I/2^W.
class MixtureState {
  public:
    explicit MixtureState(int width) : width_(width) {}

    void add(double weight, VectorXc amplitudes);

    int width() const noexcept { return width_; }
    double residual() const noexcept { return residual_; }
    const std::vector<std::pair<double, VectorXc>> &components() const noexcept {
        return components_;
    }
    double total_weight() const;

    void apply(const Layer &layer);
    /// Global depolarizing: coherent weights scale by (1-γ), the rest joins the residual.
    void depolarize(double gamma);

    /// E[(-1)^{parity of ancilla outcomes}] for X-basis readout of the ancillas in `mask`.
    double parity_expectation(std::uint64_t ancilla_mask) const;
    /// Outcome law of the first `ancillas` qubits measured in the X basis.
    std::vector<double> ancilla_distribution(int ancillas) const;

  private:
    int width_;
    double residual_ = 0.0;
    std::vector<std::pair<double, VectorXc>> components_;
};

enum class Engine { Auto, DensityMatrix, EigenEnsemble, SelfCheck };

/// Exact E[(-1)^{ΣQ_i}] of the ancilla readout.
double run_exact(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                 const NoiseModel &noise = {}, const MeasurementSpec &spec = {},
                 Engine engine = Engine::Auto);

/// Full ancilla outcome distribution (2^ancillas entries, ancillas <= 12).
std::vector<double> bitstring_distribution(const Circuit &circuit,
                                           std::span<const DensityMatrix> inputs,
                                           const NoiseModel &noise = {},
                                           const MeasurementSpec &spec = {},
                                           Engine engine = Engine::Auto);

/// Seeded generator used for every sampling routine (std::mt19937_64).
class ShotRng {
  public:
    explicit ShotRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform double in [0, 1) from the top 53 bits of one draw.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

/// Seed of an independent sub-stream: seed + stream index.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return seed + stream;
}

/// i.i.d. ±1 draws with P(+1) = (1 + expectation)/2.
std::vector<int> sample_parities(double expectation, std::int64_t shots, std::uint64_t seed);

/// i.i.d. outcome indices drawn from `distribution`.
std::vector<std::uint64_t> sample_bitstrings(const std::vector<double> &distribution,
                                             std::int64_t shots, std::uint64_t seed);

/// Parity outcomes of `shots` runs, drawn from the exact outcome law.
std::vector<int> sample_shots(const Circuit &circuit, std::span<const DensityMatrix> inputs,
                              const NoiseModel &noise, const MeasurementSpec &spec,
                              std::int64_t shots, std::uint64_t seed);

/// (-1)^{popcount(bits)}.
inline int parity_sign(std::uint64_t bits) { return (std::popcount(bits) & 1) ? -1 : 1; }

} // namespace umt
