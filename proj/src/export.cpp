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

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "umt/circuit.hpp"
#include "umt/errors.hpp"

namespace umt {

ExportFormat parse_export_format(std::string_view text) {
    if (text == "text") {
        return ExportFormat::Text;
    }
    if (text == "qasm" || text == "qasm-like") {
        return ExportFormat::Qasm;
    }
    throw ParameterError("unknown export format '" + std::string(text) + "' (use text or qasm)");
}

namespace {

std::string format_angle(double theta) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", theta);
    return buf;
}

std::string header_fields(const Circuit &c) {
    const auto &info = c.info();
    std::ostringstream out;
    out << "m=" << info.m << " n=" << info.n << " s=" << info.s
        << " prop=" << static_cast<int>(info.family) << " policy=" << to_string(info.policy)
        << " width=" << c.width() << " ancillas=" << c.ancilla_count()
        << " rounds=" << info.rounds;
    return out.str();
}

class OperandNames {
  public:
    explicit OperandNames(const Circuit &c) : c_(c) {}

    std::string operator()(int q) const {
        if (q < c_.ancilla_count()) {
            return std::to_string(q);
        }
        const int n = std::max(1, c_.info().n);
        const int w = q - c_.ancilla_count();
        return "(" + std::to_string(w / n + 1) + "," + std::to_string(w % n + 1) + ")";
    }

  private:
    const Circuit &c_;
};

std::string gate_text(const Gate &g, const OperandNames &name) {
    const auto &q = g.qubits;
    switch (g.kind) {
    case GateKind::H:
        return "H " + name(q[0]);
    case GateKind::RY:
        return "RY(" + format_angle(g.angle) + ") " + name(q[0]);
    case GateKind::SPhase:
        return "S " + name(q[0]);
    case GateKind::CNOT:
        return "CNOT " + name(q[0]) + "->" + name(q[1]);
    case GateKind::CSwap:
        return "CSWAP " + name(q[0]) + ";" + name(q[1]) + "<->" + name(q[2]);
    case GateKind::CPauli:
        return std::string("C") + to_char(g.letter) + " " + name(q[0]) + ";" + name(q[1]);
    }
    return {};
}

std::string gate_qasm(const Gate &g) {
    auto r = [](int q) { return "q[" + std::to_string(q) + "]"; };
    const auto &q = g.qubits;
    switch (g.kind) {
    case GateKind::H:
        return "h " + r(q[0]) + ";";
    case GateKind::RY:
        return "ry(" + format_angle(g.angle) + ") " + r(q[0]) + ";";
    case GateKind::SPhase:
        return "s " + r(q[0]) + ";";
    case GateKind::CNOT:
        return "cx " + r(q[0]) + "," + r(q[1]) + ";";
    case GateKind::CSwap:
        return "cswap " + r(q[0]) + "," + r(q[1]) + "," + r(q[2]) + ";";
    case GateKind::CPauli: {
        const char letter = static_cast<char>(to_char(g.letter) - 'A' + 'a');
        return std::string("c") + letter + " " + r(q[0]) + "," + r(q[1]) + ";";
    }
    }
    return {};
}

std::string export_text(const Circuit &c) {
    std::ostringstream out;
    out << "# umt-circuit " << header_fields(c) << "\n";
    const OperandNames name(c);
    for (std::size_t k = 0; k < c.layers().size(); ++k) {
        out << "LAYER " << (k + 1) << ":";
        const auto &gates = c.layers()[k].gates;
        for (std::size_t g = 0; g < gates.size(); ++g) {
            out << (g == 0 ? " " : " | ") << gate_text(gates[g], name);
        }
        out << "\n";
    }
    return out.str();
}

std::string export_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "// umt-circuit " << header_fields(c) << "\n";
    if (c.width() == 0) {
        return out.str();
    }
    out << "qreg q[" << c.width() << "];\n";
    if (c.ancilla_count() > 0) {
        out << "creg c[" << c.ancilla_count() << "];\n";
    }
    for (std::size_t k = 0; k < c.layers().size(); ++k) {
        out << "// layer " << (k + 1) << "\n";
        for (const Gate &g : c.layers()[k].gates) {
            out << gate_qasm(g) << "\n";
        }
    }
    // X-basis readout of the ancillas.
    for (int a = 0; a < c.ancilla_count(); ++a) {
        out << "h q[" << a << "];\n";
    }
    for (int a = 0; a < c.ancilla_count(); ++a) {
        out << "measure q[" << a << "] -> c[" << a << "];\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Text parser

class LineParser {
  public:
    LineParser(std::string_view text, int line, int ancillas, int n)
        : text_(text), line_(line), ancillas_(ancillas), n_(n) {}

    [[noreturn]] void fail(const std::string &what) const {
        throw DataError("circuit text line " + std::to_string(line_) + ": " + what);
    }

    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') {
            ++pos_;
        }
    }

    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }

    bool consume(std::string_view token) {
        skip_spaces();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!consume(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }

    int integer() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    double real() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ')') {
            ++pos_;
        }
        try {
            return std::stod(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::exception &) {
            fail("bad angle");
        }
    }

    std::string word() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    int operand() {
        if (consume("(")) {
            const int r = integer();
            expect(",");
            const int q = integer();
            expect(")");
            if (r < 1 || q < 1 || q > n_) {
                fail("work operand out of range");
            }
            return ancillas_ + (r - 1) * n_ + (q - 1);
        }
        const int a = integer();
        if (a >= ancillas_) {
            fail("ancilla operand out of range");
        }
        return a;
    }

    Gate gate() {
        const std::string op = word();
        if (op == "H") {
            return Gate::h(operand());
        }
        if (op == "RY") {
            expect("(");
            const double theta = real();
            expect(")");
            return Gate::ry(operand(), theta);
        }
        if (op == "S") {
            return Gate::s_phase(operand());
        }
        if (op == "CNOT") {
            const int c = operand();
            expect("->");
            return Gate::cnot(c, operand());
        }
        if (op == "CSWAP") {
            const int c = operand();
            expect(";");
            const int a = operand();
            expect("<->");
            return Gate::cswap(c, a, operand());
        }
        if (op == "CX" || op == "CY" || op == "CZ") {
            const int c = operand();
            expect(";");
            return Gate::cpauli(c, operand(), pauli_from_char(op[1]));
        }
        fail("unknown gate '" + op + "'");
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int ancillas_;
    int n_;
};

LayerKind infer_kind(const Layer &layer) {
    if (layer.gates.empty()) {
        return LayerKind::Prep;
    }
    switch (layer.gates.front().kind) {
    case GateKind::CSwap:
        return LayerKind::CSwap;
    case GateKind::CPauli:
        return LayerKind::Observable;
    case GateKind::SPhase:
        return LayerKind::Phase;
    default:
        return LayerKind::Prep;
    }
}

} // namespace

std::string export_circuit(const Circuit &circuit, ExportFormat format) {
    return format == ExportFormat::Text ? export_text(circuit) : export_qasm(circuit);
}

Circuit parse_circuit_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::map<std::string, std::string> fields;
    bool have_header = false;
    std::vector<Layer> layers;
    CircuitInfo info;
    int width = 0;
    int ancillas = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            const std::string prefix = "# umt-circuit ";
            if (line.rfind(prefix, 0) != 0) {
                throw DataError("circuit text line 1: missing '# umt-circuit' header");
            }
            std::istringstream hs(line.substr(prefix.size()));
            std::string kv;
            while (hs >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    throw DataError("circuit text line 1: bad header field '" + kv + "'");
                }
                fields[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            try {
                info.m = std::stoi(fields.at("m"));
                info.n = std::stoi(fields.at("n"));
                info.s = std::stoi(fields.at("s"));
                info.family = static_cast<CircuitFamily>(std::stoi(fields.at("prop")));
                info.policy = parse_schedule_policy(fields.at("policy"));
                info.rounds = std::stoi(fields.at("rounds"));
                width = std::stoi(fields.at("width"));
                ancillas = std::stoi(fields.at("ancillas"));
            } catch (const std::exception &e) {
                throw DataError(std::string("circuit text line 1: bad header (") + e.what() + ")");
            }
            if (info.family != CircuitFamily::Sequential && info.family != CircuitFamily::QubitParallel &&
                info.m != 0) {
                throw DataError("circuit text line 1: prop must be 1 or 2");
            }
            have_header = true;
            continue;
        }
        LineParser p(line, line_no, ancillas, std::max(1, info.n));
        p.expect("LAYER");
        const int k = p.integer();
        if (k != static_cast<int>(layers.size()) + 1) {
            p.fail("layer numbers must be consecutive");
        }
        p.expect(":");
        Layer layer;
        while (!p.at_end()) {
            if (!layer.gates.empty()) {
                p.expect("|");
            }
            layer.gates.push_back(p.gate());
        }
        layer.kind = infer_kind(layer);
        layers.push_back(std::move(layer));
    }
    if (!have_header) {
        throw DataError("circuit text: empty input");
    }
    // Round indices: sequential circuits stack n sub-layers per round.
    const int per_round = info.family == CircuitFamily::Sequential ? std::max(1, info.n) : 1;
    int cswap_index = 0;
    for (auto &layer : layers) {
        if (layer.kind == LayerKind::CSwap) {
            layer.round = cswap_index++ / per_round;
        }
    }
    try {
        return Circuit(info, width, ancillas, std::move(layers));
    } catch (const ParameterError &e) {
        throw DataError(std::string("circuit text: ") + e.what());
    }
}

} // namespace umt
