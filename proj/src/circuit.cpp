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

#include "umt/circuit.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "umt/errors.hpp"
#include "umt/kernels.hpp"

namespace umt {

namespace {

constexpr int kMaxWidth = 62;
constexpr int kMaxUnitaryWidth = 12;

int gate_arity(GateKind kind) {
    switch (kind) {
    case GateKind::H:
    case GateKind::RY:
    case GateKind::SPhase:
        return 1;
    case GateKind::CNOT:
    case GateKind::CPauli:
        return 2;
    case GateKind::CSwap:
        return 3;
    }
    return 0;
}

void validate_layers(int width, const std::vector<Layer> &layers) {
    for (std::size_t k = 0; k < layers.size(); ++k) {
        std::set<int> used;
        for (const Gate &g : layers[k].gates) {
            if (static_cast<int>(g.qubits.size()) != gate_arity(g.kind)) {
                throw ParameterError("gate in layer " + std::to_string(k + 1) +
                                     " has the wrong operand count");
            }
            for (int q : g.qubits) {
                if (q < 0 || q >= width) {
                    throw ParameterError("gate operand " + std::to_string(q) +
                                         " outside circuit width " + std::to_string(width));
                }
                if (!used.insert(q).second) {
                    throw ParameterError("layer " + std::to_string(k + 1) +
                                         " uses qubit " + std::to_string(q) + " twice");
                }
            }
        }
    }
}

void check_build_params(int m, int n, int s) {
    if (m < 2) {
        throw ParameterError("m must be >= 2 (got " + std::to_string(m) + ")");
    }
    if (n < 1) {
        throw ParameterError("n must be >= 1 (got " + std::to_string(n) + ")");
    }
    if (s < 1 || s > m / 2) {
        throw ParameterError("s must satisfy 1 <= s <= floor(m/2) = " + std::to_string(m / 2) +
                             " (got " + std::to_string(s) + ")");
    }
}

} // namespace

std::string to_string(CircuitFamily family) {
    return family == CircuitFamily::Sequential ? "sequential" : "parallel";
}

CircuitFamily parse_circuit_family(std::string_view text) {
    if (text == "1" || text == "sequential") {
        return CircuitFamily::Sequential;
    }
    if (text == "2" || text == "parallel") {
        return CircuitFamily::QubitParallel;
    }
    throw ParameterError("unknown circuit family '" + std::string(text) + "' (use 1 or 2)");
}

Circuit::Circuit(CircuitInfo info, int width, int ancilla_count, std::vector<Layer> layers)
    : info_(info), width_(width), ancilla_count_(ancilla_count), layers_(std::move(layers)) {
    if (width_ < 0 || width_ > kMaxWidth) {
        throw ParameterError("circuit width " + std::to_string(width_) + " outside 0.." +
                             std::to_string(kMaxWidth));
    }
    if (ancilla_count_ < 0 || ancilla_count_ > width_) {
        throw ParameterError("ancilla count exceeds circuit width");
    }
    validate_layers(width_, layers_);
}

int Circuit::qubit(int r, int q) const {
    if (r < 1 || r > info_.m || q < 1 || q > info_.n) {
        throw ParameterError("register/position (" + std::to_string(r) + "," +
                             std::to_string(q) + ") out of range");
    }
    return ancilla_count_ + (r - 1) * info_.n + (q - 1);
}

int Circuit::block_head(int q) const {
    if (info_.family == CircuitFamily::Sequential) {
        return 0;
    }
    if (q < 1 || q > info_.n) {
        throw ParameterError("GHZ block index out of range");
    }
    return (q - 1) * info_.s;
}

int Circuit::cswap_depth() const {
    return static_cast<int>(std::count_if(layers_.begin(), layers_.end(), [](const Layer &l) {
        return l.kind == LayerKind::CSwap;
    }));
}

bool Circuit::ends_round(std::size_t k) const {
    if (k >= layers_.size() || layers_[k].kind != LayerKind::CSwap) {
        return false;
    }
    if (k + 1 == layers_.size()) {
        return true;
    }
    const Layer &next = layers_[k + 1];
    return next.kind != LayerKind::CSwap || next.round != layers_[k].round;
}

std::uint64_t Circuit::ancilla_mask() const {
    std::uint64_t mask = 0;
    for (int a = 0; a < ancilla_count_; ++a) {
        mask |= qubit_mask(width_, a);
    }
    return mask;
}

Circuit Circuit::with_layer(Layer layer) const {
    std::vector<Layer> layers = layers_;
    layers.push_back(std::move(layer));
    return Circuit(info_, width_, ancilla_count_, std::move(layers));
}

std::vector<Layer> ghz_prep(const std::vector<int> &qubits) {
    std::vector<Layer> layers;
    if (qubits.empty()) {
        return layers;
    }
    layers.push_back({LayerKind::Prep, -1, {Gate::h(qubits.front())}});
    for (std::size_t k = 1; k < qubits.size(); ++k) {
        layers.push_back({LayerKind::Prep, -1, {Gate::cnot(qubits[k - 1], qubits[k])}});
    }
    return layers;
}

Circuit build_sequential(int m, int n, int s, SchedulePolicy policy) {
    check_build_params(m, n, s);
    const auto sched = schedule(m, s, policy);
    const CircuitInfo info{m, n, s, CircuitFamily::Sequential, policy, sched.depth()};
    const int width = s + m * n;
    auto qubit = [&](int r, int q) { return s + (r - 1) * n + (q - 1); };

    std::vector<int> ancillas(s);
    for (int a = 0; a < s; ++a) {
        ancillas[a] = a;
    }
    std::vector<Layer> layers = ghz_prep(ancillas);
    for (int round = 0; round < sched.depth(); ++round) {
        const auto &ts = sched.rounds()[round];
        for (int q = 1; q <= n; ++q) {
            Layer layer{LayerKind::CSwap, round, {}};
            for (std::size_t j = 0; j < ts.size(); ++j) {
                layer.gates.push_back(Gate::cswap(static_cast<int>(j), qubit(ts[j].first, q),
                                                  qubit(ts[j].second, q)));
            }
            layers.push_back(std::move(layer));
        }
    }
    return Circuit(info, width, s, std::move(layers));
}

Circuit build_parallel(int m, int n, int s, SchedulePolicy policy) {
    check_build_params(m, n, s);
    const auto sched = schedule(m, s, policy);
    const CircuitInfo info{m, n, s, CircuitFamily::QubitParallel, policy, sched.depth()};
    const int ancilla_count = s * n;
    const int width = (s + m) * n;
    auto qubit = [&](int r, int q) { return ancilla_count + (r - 1) * n + (q - 1); };

    std::vector<int> ancillas(ancilla_count);
    for (int a = 0; a < ancilla_count; ++a) {
        ancillas[a] = a;
    }
    std::vector<Layer> layers = ghz_prep(ancillas);
    for (int round = 0; round < sched.depth(); ++round) {
        const auto &ts = sched.rounds()[round];
        Layer layer{LayerKind::CSwap, round, {}};
        for (int q = 1; q <= n; ++q) {
            for (std::size_t j = 0; j < ts.size(); ++j) {
                const int control = (q - 1) * s + static_cast<int>(j);
                layer.gates.push_back(
                    Gate::cswap(control, qubit(ts[j].first, q), qubit(ts[j].second, q)));
            }
        }
        layers.push_back(std::move(layer));
    }
    return Circuit(info, width, ancilla_count, std::move(layers));
}

Circuit build_circuit(int m, int n, int s, CircuitFamily family, SchedulePolicy policy) {
    return family == CircuitFamily::Sequential ? build_sequential(m, n, s, policy)
                                               : build_parallel(m, n, s, policy);
}

Circuit attach_observable(const Circuit &circuit, const PauliString &p, int target_register) {
    const auto &info = circuit.info();
    if (p.qubits() != info.n) {
        throw ParameterError("Pauli string '" + p.str() + "' has " + std::to_string(p.qubits()) +
                             " letters but registers hold " + std::to_string(info.n) + " qubits");
    }
    if (target_register < 1 || target_register > info.m) {
        throw ParameterError("target register " + std::to_string(target_register) +
                             " outside 1.." + std::to_string(info.m));
    }
    if (p.is_identity()) {
        return circuit;
    }
    std::vector<Layer> layers = circuit.layers();
    if (info.family == CircuitFamily::Sequential) {
        for (int q = 1; q <= info.n; ++q) {
            if (p[q - 1] != Pauli::I) {
                layers.push_back({LayerKind::Observable, -1,
                                  {Gate::cpauli(0, circuit.qubit(target_register, q), p[q - 1])}});
            }
        }
    } else {
        Layer layer{LayerKind::Observable, -1, {}};
        for (int q = 1; q <= info.n; ++q) {
            if (p[q - 1] != Pauli::I) {
                layer.gates.push_back(
                    Gate::cpauli(circuit.block_head(q), circuit.qubit(target_register, q), p[q - 1]));
            }
        }
        layers.push_back(std::move(layer));
    }
    return Circuit(info, circuit.width(), circuit.ancilla_count(), std::move(layers));
}

Circuit imaginary_mode(const Circuit &circuit) {
    if (circuit.ancilla_count() == 0) {
        return circuit;
    }
    return circuit.with_layer({LayerKind::Phase, -1, {Gate::s_phase(0)}});
}

MatrixXc circuit_unitary(const Circuit &circuit) {
    if (circuit.width() > kMaxUnitaryWidth) {
        throw ParameterError("circuit_unitary supports width <= " +
                             std::to_string(kMaxUnitaryWidth) + " (got " +
                             std::to_string(circuit.width()) + ")");
    }
    const Index dim = pow2(circuit.width());
    MatrixXc u = MatrixXc::Identity(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        for (const Layer &layer : circuit.layers()) {
            apply_layer(u.col(j), circuit.width(), layer);
        }
    }
    return u;
}

MatrixXc conditional_action(const Circuit &circuit, std::uint64_t ancilla_bits) {
    const int work = circuit.width() - circuit.ancilla_count();
    if (circuit.width() > 24) {
        throw ParameterError("conditional_action supports width <= 24");
    }
    if (ancilla_bits >> circuit.ancilla_count() != 0) {
        throw ParameterError("ancilla bit pattern wider than the ancilla register");
    }
    const Index work_dim = pow2(work);
    const Index offset = static_cast<Index>(ancilla_bits) << work;
    MatrixXc block(work_dim, work_dim);
    VectorXc v(pow2(circuit.width()));
    for (Index w = 0; w < work_dim; ++w) {
        v.setZero();
        v[offset + w] = 1.0;
        for (const Layer &layer : circuit.layers()) {
            if (layer.kind != LayerKind::Prep) {
                apply_layer(v, circuit.width(), layer);
            }
        }
        block.col(w) = v.segment(offset, work_dim);
        if (std::abs(block.col(w).squaredNorm() - 1.0) > kExactTol) {
            throw NumericError("ancilla register disturbed by controlled layers");
        }
    }
    return block;
}

} // namespace umt
