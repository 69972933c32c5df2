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
 * Gate-level controlled cyclic-shift circuits.
 *
 * Qubit layout: ancillas occupy indices [0, ancilla_count), followed by the
 * m work registers of n qubits each. Register r (1-based), position q
 * (1-based) lives at ancilla_count + (r-1)*n + (q-1). Index 0 is the most
 * significant tensor factor.
 *
 * Two families are built:
 *  - Sequential: s ancillas in one GHZ state, each scheduled transposition
 *    expanded into n CSWAPs stacked over n sub-layers. Width s + m*n,
 *    controlled-SWAP depth n * rounds.
 *  - QubitParallel: n blocks of s ancillas, block q controlling the position-q
 *    qubits of every register. Width (s + m)*n, depth = rounds. All s*n
 *    ancillas share a single GHZ state so the blocks act as one control.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "umt/pauli.hpp"
#include "umt/schedule.hpp"
#include "umt/types.hpp"

namespace umt {

enum class GateKind { H, RY, SPhase, CNOT, CSwap, CPauli };

/// One gate. Operands list controls first: CNOT (c, t), CSWAP (c, a, b),
/// CPAULI (c, t).
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    double angle = 0.0;
    Pauli letter = Pauli::I;

    static Gate h(int q) { return {GateKind::H, {q}}; }
    static Gate ry(int q, double theta) { return {GateKind::RY, {q}, theta}; }
    static Gate s_phase(int q) { return {GateKind::SPhase, {q}}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t}}; }
    static Gate cswap(int c, int a, int b) { return {GateKind::CSwap, {c, a, b}}; }
    static Gate cpauli(int c, int t, Pauli p) { return {GateKind::CPauli, {c, t}, 0.0, p}; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

enum class LayerKind { Prep, CSwap, Observable, Phase };

/// Gates acting simultaneously on disjoint qubits. `round` is the schedule
/// round for CSwap layers and -1 otherwise.
struct Layer {
    LayerKind kind = LayerKind::Prep;
    int round = -1;
    std::vector<Gate> gates;

    friend bool operator==(const Layer &, const Layer &) = default;
};

enum class CircuitFamily { Sequential = 1, QubitParallel = 2 };

std::string to_string(CircuitFamily family);
/// Accepts 1/2, "sequential"/"parallel".
CircuitFamily parse_circuit_family(std::string_view text);

struct CircuitInfo {
    int m = 0;
    int n = 0;
    int s = 0;
    CircuitFamily family = CircuitFamily::Sequential;
    SchedulePolicy policy = SchedulePolicy::Greedy;
    int rounds = 0;

    friend bool operator==(const CircuitInfo &, const CircuitInfo &) = default;
};

class Circuit {
  public:
    Circuit() = default;
    Circuit(CircuitInfo info, int width, int ancilla_count, std::vector<Layer> layers);

    const CircuitInfo &info() const noexcept { return info_; }
    int width() const noexcept { return width_; }
    int ancilla_count() const noexcept { return ancilla_count_; }
    const std::vector<Layer> &layers() const noexcept { return layers_; }

    /// Qubit index of register r, position q (both 1-based).
    int qubit(int r, int q) const;
    /// First ancilla of GHZ block q (1-based). Sequential circuits have one block.
    int block_head(int q) const;

    /// Number of controlled-SWAP layers; excludes prep, observable and phase.
    int cswap_depth() const;
    /// Layer index after which schedule round `round` is complete.
    bool ends_round(std::size_t layer) const;
    /// Basis-index mask selecting all ancilla bits.
    std::uint64_t ancilla_mask() const;

    Circuit with_layer(Layer layer) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    CircuitInfo info_;
    int width_ = 0;
    int ancilla_count_ = 0;
    std::vector<Layer> layers_;
};

/// H on qubits[0] then a CNOT chain qubits[k-1] -> qubits[k]; one layer each.
std::vector<Layer> ghz_prep(const std::vector<int> &qubits);

Circuit build_sequential(int m, int n, int s, SchedulePolicy policy = SchedulePolicy::Greedy);
Circuit build_parallel(int m, int n, int s, SchedulePolicy policy = SchedulePolicy::Greedy);
Circuit build_circuit(int m, int n, int s, CircuitFamily family,
                      SchedulePolicy policy = SchedulePolicy::Greedy);

/// Appends a controlled P on work register `target_register` after all
/// CSWAP layers. Identity letters add nothing; an all-identity string leaves
/// the circuit unchanged. Sequential circuits control every letter from the
/// first ancilla (one layer per letter, since they share that control);
/// parallel circuits control position q from the head of block q (one layer).
Circuit attach_observable(const Circuit &circuit, const PauliString &p, int target_register = 1);

/// Appends the phase gate |1⟩ -> i|1⟩ to the first ancilla. Every ancilla
/// sits in one GHZ state, so one phase gate puts i on the whole |1...1⟩
/// branch; X-parity readout then yields -Im Tr[U ρ].
Circuit imaginary_mode(const Circuit &circuit);

/// Dense unitary of the whole circuit (width <= 12).
MatrixXc circuit_unitary(const Circuit &circuit);

/// Work-register action of the non-prep layers with the ancillas held in the
/// computational basis state `ancilla_bits` (ancilla 0 most significant).
/// Throws NumericError if the ancillas are disturbed.
MatrixXc conditional_action(const Circuit &circuit, std::uint64_t ancilla_bits);

enum class ExportFormat { Text, Qasm };

ExportFormat parse_export_format(std::string_view text);

/// Deterministic text emission. Text grammar (one line each):
///
///   # umt-circuit m=<m> n=<n> s=<s> prop=<1|2> policy=<p> width=<W> ancillas=<A> rounds=<R>
///   LAYER <k> <prep|cswap|observable|phase>[ round=<r>]: <gate> | <gate> | ...
///
/// with gates `H a`, `RY(<theta>) a`, `S a`, `CNOT a->b`,
/// `CSWAP a;(i,q)<->(j,q)`, `C<X|Y|Z> a;(i,q)`. Ancillas are written as
/// plain indices, work qubits as (register,position). Qasm output uses
/// h, ry, s, cx, cy, cz, cswap on a single qreg.
std::string export_circuit(const Circuit &circuit, ExportFormat format);

/// Parses the Text format back into a circuit. Throws DataError with the
/// offending line number.
Circuit parse_circuit_text(std::string_view text);

} // namespace umt
