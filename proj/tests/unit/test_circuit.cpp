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

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "umt/circuit.hpp"
#include "umt/errors.hpp"
#include "umt/kernels.hpp"
#include "umt/oracle.hpp"
#include "umt/qstate.hpp"

using namespace umt;

namespace {

using Ops = std::map<int, MatrixXc>;

// ⊗ of per-qubit operators, identity where absent, qubit 0 leftmost.
MatrixXc embed(int width, const Ops &ops) {
    MatrixXc out = MatrixXc::Identity(1, 1);
    for (int q = 0; q < width; ++q) {
        const auto it = ops.find(q);
        const MatrixXc f = it == ops.end() ? MatrixXc::Identity(2, 2) : it->second;
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

MatrixXc proj(int bit) {
    MatrixXc p = MatrixXc::Zero(2, 2);
    p(bit, bit) = 1.0;
    return p;
}

MatrixXc single_qubit(const Gate &g) {
    MatrixXc u(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
    case GateKind::H:
        u << r, r, r, -r;
        break;
    case GateKind::RY:
        u << std::cos(g.angle / 2), -std::sin(g.angle / 2), std::sin(g.angle / 2),
            std::cos(g.angle / 2);
        break;
    case GateKind::SPhase:
        u << 1, 0, 0, cplx(0, 1);
        break;
    default:
        FAIL("not a single-qubit gate");
    }
    return u;
}

// Reference unitary from projector and Pauli expansions.
MatrixXc reference(int width, const Gate &g) {
    const auto &q = g.qubits;
    switch (g.kind) {
    case GateKind::H:
    case GateKind::RY:
    case GateKind::SPhase:
        return embed(width, {{q[0], single_qubit(g)}});
    case GateKind::CNOT:
        return embed(width, {{q[0], proj(0)}}) +
               embed(width, {{q[0], proj(1)}, {q[1], pauli_matrix<double>(Pauli::X)}});
    case GateKind::CPauli:
        return embed(width, {{q[0], proj(0)}}) +
               embed(width, {{q[0], proj(1)}, {q[1], pauli_matrix<double>(g.letter)}});
    case GateKind::CSwap: {
        // SWAP = (II + XX + YY + ZZ)/2
        MatrixXc swap_part = embed(width, {{q[0], proj(1)}});
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            const MatrixXc s = pauli_matrix<double>(p);
            swap_part += embed(width, {{q[0], proj(1)}, {q[1], s}, {q[2], s}});
        }
        return embed(width, {{q[0], proj(0)}}) + swap_part / 2.0;
    }
    }
    return {};
}

Circuit single_gate_circuit(int width, const Gate &g) {
    return Circuit(CircuitInfo{}, width, 0, {Layer{LayerKind::Prep, -1, {g}}});
}

std::vector<Gate> gate_zoo() {
    return {Gate::h(1),          Gate::ry(2, 0.37),          Gate::s_phase(0),
            Gate::cnot(2, 0),    Gate::cnot(0, 3),           Gate::cswap(1, 3, 0),
            Gate::cswap(3, 0, 2), Gate::cpauli(0, 2, Pauli::X), Gate::cpauli(3, 1, Pauli::Y),
            Gate::cpauli(2, 0, Pauli::Z)};
}

MatrixXc pauli_on_register1(const PauliString &p, int m) {
    MatrixXc out = pauli_matrix<double>(p);
    const Index rest = pow2(p.qubits() * (m - 1));
    return Eigen::kroneckerProduct(out, MatrixXc::Identity(rest, rest)).eval();
}

std::uint64_t all_ones(int k) { return (std::uint64_t{1} << k) - 1; }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

TEST_CASE("gate kernels match projector expansions") {
    const int width = 4;
    for (const Gate &g : gate_zoo()) {
        const MatrixXc u = circuit_unitary(single_gate_circuit(width, g));
        CHECK((u - reference(width, g)).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("density kernel equals U rho U^dagger") {
    std::mt19937_64 rng(4);
    const int width = 4;
    for (const Gate &g : gate_zoo()) {
        MatrixXc rho = random_density<double>(width, rng).matrix();
        const MatrixXc u = reference(width, g);
        const MatrixXc expect = u * rho * u.adjoint();
        apply_gate(rho, width, g);
        CHECK((rho - expect).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("depth and width ledger for both families, m <= 12") {
    for (int m = 2; m <= 12; ++m) {
        for (int n = 1; n <= 3; ++n) {
            for (int s = 1; s <= m / 2; ++s) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(s);
                const int h = ceil_div(m - 1, s);
                const Circuit p1 = build_sequential(m, n, s);
                CHECK(p1.cswap_depth() == n * h);
                CHECK(p1.width() == s + m * n);
                CHECK(p1.ancilla_count() == s);
                const Circuit p2 = build_parallel(m, n, s);
                CHECK(p2.cswap_depth() == h);
                CHECK(p2.width() == (s + m) * n);
                CHECK(p2.ancilla_count() == s * n);
                int ends = 0;
                for (std::size_t k = 0; k < p1.layers().size(); ++k) {
                    ends += p1.ends_round(k);
                }
                CHECK(ends == h);
            }
        }
    }
}

TEST_CASE("controlled block equals the cyclic shift, and P S with an observable") {
    const PauliString paulis[] = {PauliString::parse("Y"), PauliString::parse("XZ")};
    for (auto family : {CircuitFamily::Sequential, CircuitFamily::QubitParallel}) {
        for (int m = 2; m <= 4; ++m) {
            for (int n = 1; n <= 2; ++n) {
                for (int s = 1; s <= m / 2; ++s) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(s);
                    const Circuit c = build_circuit(m, n, s, family);
                    const MatrixXc shift = oracle::cyclic_shift_matrix<double>(m, n);
                    const auto ones = all_ones(c.ancilla_count());
                    CHECK((conditional_action(c, ones) - shift).cwiseAbs().maxCoeff() < 1e-10);
                    CHECK((conditional_action(c, 0) - MatrixXc::Identity(shift.rows(), shift.cols()))
                              .cwiseAbs()
                              .maxCoeff() < 1e-10);
                    const PauliString &p = paulis[n - 1];
                    const Circuit with_p = attach_observable(c, p);
                    const MatrixXc expect = pauli_on_register1(p, m) * shift;
                    CHECK((conditional_action(with_p, ones) - expect).cwiseAbs().maxCoeff() < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("prep layers make one GHZ state over every ancilla") {
    const Circuit c = build_parallel(4, 2, 2);
    VectorXc v = VectorXc::Zero(pow2(c.width()));
    v[0] = 1.0;
    for (const Layer &layer : c.layers()) {
        if (layer.kind == LayerKind::Prep) {
            apply_layer(v, c.width(), layer);
        }
    }
    const Index top = static_cast<Index>(all_ones(c.ancilla_count())) << (c.width() - c.ancilla_count());
    CHECK(std::abs(v[0] - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(v[top] - 1.0 / std::sqrt(2.0)) < 1e-14);
}

TEST_CASE("full circuit unitary is unitary") {
    const Circuit c = attach_observable(build_sequential(3, 2, 1), PauliString::parse("ZX"));
    const MatrixXc u = circuit_unitary(imaginary_mode(c));
    CHECK((u * u.adjoint() - MatrixXc::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(circuit_unitary(build_parallel(5, 2, 2)), ParameterError);
}

TEST_CASE("observable layers") {
    const Circuit seq = attach_observable(build_sequential(4, 2, 2), PauliString::parse("XY"));
    CHECK(seq.layers().back().kind == LayerKind::Observable);
    CHECK(seq.layers().back().gates.front().qubits[0] == 0);
    const Circuit par = attach_observable(build_parallel(4, 2, 2), PauliString::parse("XY"));
    const auto &obs = par.layers().back();
    CHECK(obs.gates.size() == 2);
    CHECK(obs.gates[1].qubits[0] == par.block_head(2));
    const Circuit base = build_parallel(4, 2, 2);
    CHECK(attach_observable(base, PauliString::identity(2)) == base);
    CHECK_THROWS_AS(attach_observable(base, PauliString::parse("X")), ParameterError);
    CHECK_THROWS_AS(attach_observable(base, PauliString::parse("XX"), 5), ParameterError);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_parallel(8, 1, 5), ParameterError);
    CHECK_THROWS_AS(build_sequential(1, 1, 1), ParameterError);
    CHECK_THROWS_AS(build_sequential(4, 0, 1), ParameterError);
    CHECK_THROWS_AS(Circuit(CircuitInfo{}, 3, 0, {Layer{LayerKind::Prep, -1, {Gate::cnot(0, 0)}}}),
                    ParameterError);
    CHECK_THROWS_AS(
        Circuit(CircuitInfo{}, 3, 0, {Layer{LayerKind::Prep, -1, {Gate::h(0), Gate::h(0)}}}),
        ParameterError);
    CHECK_THROWS_AS(Circuit(CircuitInfo{}, 2, 0, {Layer{LayerKind::Prep, -1, {Gate::h(2)}}}),
                    ParameterError);
    CHECK_THROWS_AS(Circuit(CircuitInfo{}, 63, 0, {}), ParameterError);
    CHECK_THROWS_AS(parse_circuit_family("3"), ParameterError);
}

TEST_CASE("golden text export of the m=5, n=2, s=2 qubit-parallel circuit") {
    const Circuit c = attach_observable(build_parallel(5, 2, 2), PauliString::parse("ZI"));
    std::ifstream in(std::string(UMT_GOLDEN_DIR) + "/m5_n2_s2_parallel_zi.txt");
    REQUIRE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(export_circuit(c, ExportFormat::Text) == golden.str());
}

TEST_CASE("text export round-trips") {
    for (auto family : {CircuitFamily::Sequential, CircuitFamily::QubitParallel}) {
        for (auto policy : {SchedulePolicy::Greedy, SchedulePolicy::LayerRestricted}) {
            for (int m : {2, 5, 9}) {
                for (int s = 1; s <= m / 2; ++s) {
                    Circuit c = build_circuit(m, 2, s, family, policy);
                    c = imaginary_mode(attach_observable(c, PauliString::parse("YZ"), m));
                    const auto text = export_circuit(c, ExportFormat::Text);
                    const Circuit back = parse_circuit_text(text);
                    CHECK(back == c);
                    CHECK(export_circuit(back, ExportFormat::Text) == text);
                }
            }
        }
    }
    const Circuit ry = single_gate_circuit(2, Gate::ry(1, 0.1234567890123));
    CHECK(parse_circuit_text(export_circuit(ry, ExportFormat::Text)) == ry);
}

TEST_CASE("qasm export") {
    const Circuit c = attach_observable(build_sequential(3, 1, 1), PauliString::parse("Y"));
    const auto q = export_circuit(c, ExportFormat::Qasm);
    CHECK(q.rfind("OPENQASM 2.0;\n", 0) == 0);
    CHECK(q.find("qreg q[4];") != std::string::npos);
    CHECK(q.find("creg c[1];") != std::string::npos);
    CHECK(q.find("cswap q[0],q[1],q[3];") != std::string::npos);
    CHECK(q.find("cy q[0],q[1];") != std::string::npos);
    CHECK(q.find("measure q[0] -> c[0];") != std::string::npos);
    CHECK(parse_export_format("qasm") == ExportFormat::Qasm);
    CHECK_THROWS_AS(parse_export_format("json"), ParameterError);
}

TEST_CASE("text parser reports the failing line") {
    CHECK_THROWS_AS(parse_circuit_text(""), DataError);
    CHECK_THROWS_AS(parse_circuit_text("LAYER 1: H 0\n"), DataError);
    const std::string header =
        "# umt-circuit m=2 n=1 s=1 prop=1 policy=greedy width=3 ancillas=1 rounds=1\n";
    try {
        parse_circuit_text(header + "LAYER 1: H 0\nLAYER 2: FOO 0\n");
        FAIL("accepted unknown gate");
    } catch (const DataError &e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_circuit_text(header + "LAYER 2: H 0\n"), DataError);
    CHECK_THROWS_AS(parse_circuit_text(header + "LAYER 1: H 5\n"), DataError);
    CHECK_THROWS_AS(parse_circuit_text(header + "LAYER 1: CSWAP 0;(1,1)<->(1,1)\n"), DataError);
}
