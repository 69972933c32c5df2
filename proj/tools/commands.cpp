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


#include "commands.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umt/ansatz.hpp"
#include "umt/circuit.hpp"
#include "umt/errors.hpp"
#include "umt/estimators.hpp"
#include "umt/io.hpp"
#include "umt/oracle.hpp"
#include "umt/schedule.hpp"

namespace umt::cli {

namespace {

constexpr std::uint64_t kFallbackSeed = 20260101;

std::uint64_t default_seed() {
    const char *env = std::getenv("UMT_SEED");
    if (env == nullptr || *env == '\0') {
        return kFallbackSeed;
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) {
            throw std::invalid_argument(env);
        }
        return v;
    } catch (const std::exception &) {
        throw ParameterError(std::string("UMT_SEED is not an unsigned integer: '") + env + "'");
    }
}

void emit(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty()) {
        out << content;
    } else {
        io::write_file(path, content);
    }
}

std::string rstrip_lines(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::string result;
    while (std::getline(in, line)) {
        line.erase(line.find_last_not_of(' ') + 1);
        result += line + "\n";
    }
    return result;
}

std::string fixed(double x, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

struct BuildArgs {
    int m = 0;
    int n = 1;
    int s = 1;
    std::string prop = "2";
    std::string policy = "greedy";
    std::string format = "text";
    std::string pauli;
    bool imag = false;
    bool print = false;
    std::string output;
};

struct TradeoffArgs {
    int m = 0;
    int n = 1;
    std::string policy = "greedy";
    std::string output;
};

struct AnsatzArgs {
    std::vector<double> alpha{kDefaultAlpha.begin(), kDefaultAlpha.end()};
    double gamma0 = 0.0;
    std::string output;
};

struct EstimateArgs {
    std::vector<std::string> states;
    int m = 0;
    int s = 1;
    std::string prop = "2";
    std::string policy = "greedy";
    double epsilon = 0.1;
    double delta = 0.05;
    std::int64_t shots = 0;
    double gamma = 0.0;
    std::uint64_t seed = 0;
    bool oracle = false;
    std::string output;
};

struct VdArgs {
    int m = 5;
    std::vector<int> s_values{2, 1};
    std::string prop = "2";
    std::string policy = "greedy";
    std::vector<double> gammas{0.2, 0.4, 0.6, 0.8};
    double gamma0 = 0.4;
    std::vector<double> alpha{kDefaultAlpha.begin(), kDefaultAlpha.end()};
    std::string state;
    std::string observable;
    std::string mode = "exact";
    double epsilon = 0.1;
    double delta = 0.05;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::string json_output;
};

AnsatzParams to_alpha(const std::vector<double> &v) {
    if (v.size() != 4) {
        throw ParameterError("--alpha takes exactly 4 values");
    }
    return {v[0], v[1], v[2], v[3]};
}

int cmd_build(const BuildArgs &a, std::ostream &out) {
    Circuit c = build_circuit(a.m, a.n, a.s, parse_circuit_family(a.prop),
                              parse_schedule_policy(a.policy));
    if (!a.pauli.empty()) {
        c = attach_observable(c, PauliString::parse(a.pauli));
    }
    if (a.imag) {
        c = imaginary_mode(c);
    }
    const std::string text = export_circuit(c, parse_export_format(a.format));
    if (!a.output.empty()) {
        io::write_file(a.output, text);
    } else if (a.print) {
        out << text;
    }
    out << "depth=" << c.cswap_depth() << " qubits=" << c.width() << "\n";
    return kOk;
}

int cmd_tradeoff(const TradeoffArgs &a, std::ostream &out) {
    if (a.m < 2) {
        throw ParameterError("m must be >= 2 (got " + std::to_string(a.m) + ")");
    }
    const auto policy = parse_schedule_policy(a.policy);
    std::ostringstream csv;
    csv << "s,prop1_depth,prop1_qubits,prop2_depth,prop2_qubits,greedy_depth,layer_restricted_depth\n";
    for (int s = 1; s <= a.m / 2; ++s) {
        const Circuit p1 = build_sequential(a.m, a.n, s, policy);
        const Circuit p2 = build_parallel(a.m, a.n, s, policy);
        csv << s << ',' << p1.cswap_depth() << ',' << p1.width() << ',' << p2.cswap_depth() << ','
            << p2.width() << ',' << schedule(a.m, s, SchedulePolicy::Greedy).depth() << ','
            << schedule(a.m, s, SchedulePolicy::LayerRestricted).depth() << '\n';
    }
    emit(a.output, csv.str(), out);
    return kOk;
}

int cmd_ansatz(const AnsatzArgs &a, std::ostream &out) {
    const auto rho = ansatz_state(to_alpha(a.alpha), a.gamma0);
    const std::string text = io::density_to_json(rho).dump(2) + "\n";
    emit(a.output, text, out);
    if (!a.output.empty()) {
        out << "expectation=" << io::format_number(oracle::expectation(rho, mean_z_observable(2)))
            << "\n";
    }
    return kOk;
}

int cmd_estimate(const EstimateArgs &a, std::ostream &out) {
    if (a.states.empty()) {
        throw ParameterError("--state is required");
    }
    std::vector<DensityMatrix> states;
    for (const auto &path : a.states) {
        states.push_back(io::parse_density(io::read_file(path)));
    }
    if (a.m > 0) {
        if (states.size() != 1) {
            throw ParameterError("--m replicates a single --state");
        }
        states.assign(static_cast<std::size_t>(a.m), states.front());
    }
    CircuitOptions opt;
    opt.s = a.s;
    opt.family = parse_circuit_family(a.prop);
    opt.policy = parse_schedule_policy(a.policy);
    opt.noise.layer_noise = a.gamma;
    if (a.shots > 0) {
        opt.shots_per_part = a.shots;
    }
    const ErrorBudget budget{a.epsilon, a.delta, std::nullopt};
    const auto report = estimate_mt(states, opt, budget, a.seed);
    io::json j = io::report_to_json(report);
    j["m"] = static_cast<int>(states.size());
    j["n"] = states.front().qubits();
    j["s"] = a.s;
    j["proposition"] = static_cast<int>(opt.family);
    j["seed"] = a.seed;
    if (a.oracle) {
        const cplx exact = oracle::mt_exact<double>(states);
        j["oracle"] = io::json::array({exact.real(), exact.imag()});
    }
    emit(a.output, j.dump(2) + "\n", out);
    if (a.oracle && !a.output.empty()) {
        const cplx exact = oracle::mt_exact<double>(states);
        out << "estimate=" << io::format_number(report.value.real()) << ","
            << io::format_number(report.value.imag())
            << " oracle=" << io::format_number(exact.real()) << ","
            << io::format_number(exact.imag())
            << " diff=" << io::format_number(std::abs(report.value - exact)) << "\n";
    }
    return kOk;
}

int cmd_vd(const VdArgs &a, std::ostream &out) {
    EstimationMode mode;
    if (a.mode == "exact") {
        mode = EstimationMode::Exact;
    } else if (a.mode == "shots") {
        mode = EstimationMode::Shots;
    } else {
        throw ParameterError("--mode must be exact or shots");
    }
    std::optional<DensityMatrix> ideal;
    DensityMatrix rho = a.state.empty() ? ansatz_state(to_alpha(a.alpha))
                                        : io::parse_density(io::read_file(a.state));
    if (a.state.empty()) {
        ideal = rho;
    }
    const PauliObservable o = a.observable.empty()
                                  ? mean_z_observable(rho.qubits())
                                  : io::parse_observable(io::read_file(a.observable));
    const CircuitFamily family = parse_circuit_family(a.prop);
    const ErrorBudget budget{a.epsilon, a.delta, std::nullopt};

    std::ostringstream csv;
    csv << io::csv_header() << "\n";
    io::json all = io::json::array();
    std::ostringstream table;
    table << "# <O>_vd^(" << a.m << ") mode=" << a.mode << " gamma0=" << io::format_number(a.gamma0)
          << "\n";
    table << std::left << std::setw(10) << "variant";
    for (double g : a.gammas) {
        table << std::setw(12) << ("gamma=" + io::format_number(g));
    }
    table << "\n";

    double noisy = 0.0;
    for (std::size_t v = 0; v < a.s_values.size(); ++v) {
        const int s = a.s_values[v];
        const int h = a.m >= 2 ? schedule(a.m, s, parse_schedule_policy(a.policy)).depth() : 0;
        const std::string variant = "s=" + std::to_string(s) + ",h=" + std::to_string(h);
        table << std::setw(10) << variant;
        for (std::size_t k = 0; k < a.gammas.size(); ++k) {
            CircuitOptions opt;
            opt.s = s;
            opt.family = family;
            opt.policy = parse_schedule_policy(a.policy);
            opt.noise = {a.gamma0, a.gammas[k]};
            if (a.shots > 0) {
                opt.shots_per_part = a.shots;
            }
            // One seed block per table cell.
            const std::uint64_t seed = a.seed + 1000 * (v * a.gammas.size() + k);
            const auto r = virtual_distillation(rho, a.m, o, opt, budget, mode, seed,
                                                ideal ? &*ideal : nullptr);
            noisy = r.noisy;
            table << std::setw(12) << fixed(r.corrected, 4);
            csv << io::csv_line({variant, a.m, rho.qubits(), s, static_cast<int>(family),
                                 a.gammas[k], a.gamma0, r.total_shots, r.corrected, r.variance,
                                 seed, r.noisy, r.ideal.value_or(std::nan(""))})
                << "\n";
            io::json j = io::vd_to_json(r);
            j["variant"] = variant;
            j["gamma"] = a.gammas[k];
            j["gamma0"] = a.gamma0;
            j["seed"] = seed;
            all.push_back(std::move(j));
        }
        table << "\n";
    }
    if (ideal) {
        table << "ideal=" << fixed(oracle::expectation(*ideal, o), 4) << " ";
    }
    table << "noisy=" << fixed(noisy, 4) << "\n";
    out << rstrip_lines(table.str());
    if (!a.output.empty()) {
        io::write_file(a.output, csv.str());
    }
    if (!a.json_output.empty()) {
        io::write_file(a.json_output, all.dump(2) + "\n");
    }
    return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multivariate trace circuits, simulation and virtual distillation"};
    app.name("umt");
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    try {
        seed = default_seed();
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    BuildArgs build;
    auto *b = app.add_subcommand("build", "Build and export a controlled-shift circuit");
    b->add_option("--m", build.m, "Number of registers")->required();
    b->add_option("--n", build.n, "Qubits per register");
    b->add_option("--s", build.s, "Ancilla parallelism s");
    b->add_option("--prop", build.prop, "Circuit family: 1 (sequential) or 2 (qubit-parallel)");
    b->add_option("--policy", build.policy, "greedy or layer-restricted");
    b->add_option("--format", build.format, "text or qasm");
    b->add_option("--pauli", build.pauli, "Pauli string attached to register 1");
    b->add_flag("--imag", build.imag, "Append the phase gate for the imaginary part");
    b->add_flag("--print", build.print, "Write the circuit to stdout");
    b->add_option("-o,--output", build.output, "Circuit output file");

    TradeoffArgs trade;
    auto *t = app.add_subcommand("tradeoff", "Depth and width table over s = 1..floor(m/2)");
    t->add_option("--m", trade.m, "Number of registers")->required();
    t->add_option("--n", trade.n, "Qubits per register");
    t->add_option("--policy", trade.policy, "Policy used for the prop columns");
    t->add_option("-o,--output", trade.output, "CSV output file");

    AnsatzArgs ans;
    auto *s = app.add_subcommand("ansatz-state", "Two-qubit ansatz state as JSON");
    s->add_option("--alpha", ans.alpha, "Four rotation angles")->expected(4);
    s->add_option("--gamma0", ans.gamma0, "State depolarizing strength");
    s->add_option("-o,--output", ans.output, "State output file");

    EstimateArgs est;
    est.seed = seed;
    auto *e = app.add_subcommand("estimate", "Shot-based multivariate trace estimate");
    e->add_option("--state", est.states, "State JSON file (repeat for rho_1..rho_m)")->required();
    e->add_option("--m", est.m, "Replicate a single state m times");
    e->add_option("--s", est.s, "Ancilla parallelism s");
    e->add_option("--prop", est.prop, "Circuit family: 1 or 2");
    e->add_option("--policy", est.policy, "greedy or layer-restricted");
    e->add_option("--epsilon", est.epsilon, "Additive error target");
    e->add_option("--delta", est.delta, "Failure probability");
    e->add_option("--shots", est.shots, "Shots per basis (overrides the Hoeffding plan)");
    e->add_option("--gamma", est.gamma, "Depolarizing strength per controlled-SWAP round");
    e->add_option("--seed", est.seed, "Seed (default: UMT_SEED or built-in)");
    e->add_flag("--oracle", est.oracle, "Also report the exact value");
    e->add_option("-o,--output", est.output, "Report JSON file");

    VdArgs vd;
    vd.seed = seed;
    auto *v = app.add_subcommand("vd", "Virtual distillation sweep over gamma and circuit variants");
    v->add_option("--m", vd.m, "Number of copies");
    v->add_option("--s", vd.s_values, "Circuit variants by s");
    v->add_option("--prop", vd.prop, "Circuit family: 1 or 2");
    v->add_option("--policy", vd.policy, "greedy or layer-restricted");
    v->add_option("--gamma", vd.gammas, "Per-round depolarizing strengths");
    v->add_option("--gamma0", vd.gamma0, "State depolarizing strength");
    v->add_option("--alpha", vd.alpha, "Ansatz angles")->expected(4);
    v->add_option("--state", vd.state, "State JSON file instead of the ansatz");
    v->add_option("--observable", vd.observable, "Observable JSON file");
    v->add_option("--mode", vd.mode, "exact or shots");
    v->add_option("--epsilon", vd.epsilon, "Additive error target");
    v->add_option("--delta", vd.delta, "Failure probability");
    v->add_option("--shots", vd.shots, "Shots per part (overrides the Hoeffding plan)");
    v->add_option("--seed", vd.seed, "Seed (default: UMT_SEED or built-in)");
    v->add_option("-o,--output", vd.output, "Long-format CSV output file");
    v->add_option("--json", vd.json_output, "JSON output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Error &ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (b->parsed()) {
            return cmd_build(build, out);
        }
        if (t->parsed()) {
            return cmd_tradeoff(trade, out);
        }
        if (s->parsed()) {
            return cmd_ansatz(ans, out);
        }
        if (e->parsed()) {
            return cmd_estimate(est, out);
        }
        if (v->parsed()) {
            return cmd_vd(vd, out);
        }
    } catch (const ParameterError &ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const DataError &ex) {
        err << "error: " << ex.what() << "\n";
        return kData;
    } catch (const NumericError &ex) {
        err << "error: " << ex.what() << "\n";
        return kNumeric;
    }
    return kUsage;
}

} // namespace umt::cli
