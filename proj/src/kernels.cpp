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

#include "umt/kernels.hpp"

#include <cmath>
#include <utility>

#include "umt/errors.hpp"

namespace umt {

namespace {

using u64 = std::uint64_t;

void check_operands(int width, const Gate &g) {
    for (int q : g.qubits) {
        if (q < 0 || q >= width) {
            throw ParameterError("gate operand " + std::to_string(q) + " outside width " +
                                 std::to_string(width));
        }
    }
}

// Calls f(i) for every basis index whose bits under `set` are all 1 and
// under `clear` are all 0.
template <typename F> void for_each_index(u64 dim, u64 set, u64 clear, F &&f) {
    const u64 fixed = set | clear;
    for (u64 i = 0; i < dim; ++i) {
        if ((i & fixed) == set) {
            f(i);
        }
    }
}

} // namespace

void apply_gate(Eigen::Ref<VectorXc> v, int width, const Gate &g) {
    check_operands(width, g);
    const u64 dim = static_cast<u64>(v.size());
    auto mask = [&](int k) { return qubit_mask(width, g.qubits[k]); };
    switch (g.kind) {
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        const u64 t = mask(0);
        for_each_index(dim, 0, t, [&](u64 i) {
            const cplx a = v[i];
            const cplx b = v[i | t];
            v[i] = r * (a + b);
            v[i | t] = r * (a - b);
        });
        break;
    }
    case GateKind::RY: {
        const double c = std::cos(g.angle / 2.0);
        const double s = std::sin(g.angle / 2.0);
        const u64 t = mask(0);
        for_each_index(dim, 0, t, [&](u64 i) {
            const cplx a = v[i];
            const cplx b = v[i | t];
            v[i] = c * a - s * b;
            v[i | t] = s * a + c * b;
        });
        break;
    }
    case GateKind::SPhase: {
        const u64 t = mask(0);
        for_each_index(dim, t, 0, [&](u64 i) { v[i] *= cplx(0.0, 1.0); });
        break;
    }
    case GateKind::CNOT: {
        const u64 c = mask(0);
        const u64 t = mask(1);
        for_each_index(dim, c, t, [&](u64 i) { std::swap(v[i], v[i | t]); });
        break;
    }
    case GateKind::CSwap: {
        const u64 c = mask(0);
        const u64 a = mask(1);
        const u64 b = mask(2);
        for_each_index(dim, c | a, b, [&](u64 i) { std::swap(v[i], v[(i ^ a) | b]); });
        break;
    }
    case GateKind::CPauli: {
        const u64 c = mask(0);
        const u64 t = mask(1);
        switch (g.letter) {
        case Pauli::I:
            break;
        case Pauli::X:
            for_each_index(dim, c, t, [&](u64 i) { std::swap(v[i], v[i | t]); });
            break;
        case Pauli::Y:
            for_each_index(dim, c, t, [&](u64 i) {
                const cplx a = v[i];
                const cplx b = v[i | t];
                v[i] = cplx(0.0, -1.0) * b;
                v[i | t] = cplx(0.0, 1.0) * a;
            });
            break;
        case Pauli::Z:
            for_each_index(dim, c | t, 0, [&](u64 i) { v[i] = -v[i]; });
            break;
        }
        break;
    }
    }
}

void apply_gate(MatrixXc &rho, int width, const Gate &g) {
    for (Index j = 0; j < rho.cols(); ++j) {
        apply_gate(rho.col(j), width, g);
    }
    // A U† = (U A†)† with A = U ρ.
    rho.adjointInPlace();
    for (Index j = 0; j < rho.cols(); ++j) {
        apply_gate(rho.col(j), width, g);
    }
    rho.adjointInPlace();
}

} // namespace umt
