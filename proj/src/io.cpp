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


#include "umt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "umt/errors.hpp"

namespace umt::io {

namespace {

[[noreturn]] void schema_error(const std::string &where, const std::string &what) {
    throw DataError("schema error at " + where + ": " + what);
}

const json &member(const json &j, const std::string &key, const std::string &where) {
    if (!j.is_object()) {
        schema_error(where, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        schema_error(where, "missing key \"" + key + "\"");
    }
    return *it;
}

double number(const json &j, const std::string &where) {
    if (!j.is_number()) {
        schema_error(where, "expected a number");
    }
    return j.get<double>();
}

int non_negative_int(const json &j, const std::string &where) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 30) {
        schema_error(where, "expected an integer in 0..30");
    }
    return j.get<int>();
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw DataError(std::string("JSON parse error: ") + e.what());
    }
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

} // namespace

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + path + "'");
    }
    out << content;
}

json density_to_json(const DensityMatrix &rho) {
    json rows = json::array();
    for (Index i = 0; i < rho.dim(); ++i) {
        json row = json::array();
        for (Index j = 0; j < rho.dim(); ++j) {
            row.push_back(cplx_json(rho.matrix()(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return {{"n", rho.qubits()}, {"rows", std::move(rows)}};
}

DensityMatrix density_from_json(const json &j) {
    const int n = non_negative_int(member(j, "n", "$"), "$.n");
    const json &rows = member(j, "rows", "$");
    const Index d = pow2(n);
    if (!rows.is_array() || static_cast<Index>(rows.size()) != d) {
        schema_error("$.rows", "expected an array of " + std::to_string(d) + " rows");
    }
    MatrixXc m(d, d);
    for (Index i = 0; i < d; ++i) {
        const std::string rw = "$.rows[" + std::to_string(i) + "]";
        const json &row = rows[i];
        if (!row.is_array() || static_cast<Index>(row.size()) != d) {
            schema_error(rw, "expected an array of " + std::to_string(d) + " entries");
        }
        for (Index k = 0; k < d; ++k) {
            const std::string ew = rw + "[" + std::to_string(k) + "]";
            const json &e = row[k];
            if (e.is_number()) {
                m(i, k) = number(e, ew);
            } else if (e.is_array() && e.size() == 2) {
                m(i, k) = cplx(number(e[0], ew + "[0]"), number(e[1], ew + "[1]"));
            } else {
                schema_error(ew, "expected [re, im] or a number");
            }
        }
    }
    return make_density(m);
}

DensityMatrix parse_density(const std::string &text) { return density_from_json(parse_json(text)); }

json observable_to_json(const PauliObservable &o) {
    json terms = json::array();
    for (const auto &t : o.terms()) {
        terms.push_back({{"coeff", t.coefficient}, {"letters", t.string.str()}});
    }
    return {{"n", o.qubits()}, {"terms", std::move(terms)}};
}

PauliObservable observable_from_json(const json &j) {
    const int n = non_negative_int(member(j, "n", "$"), "$.n");
    const json &terms = member(j, "terms", "$");
    if (!terms.is_array()) {
        schema_error("$.terms", "expected an array");
    }
    std::vector<PauliTerm> out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string w = "$.terms[" + std::to_string(k) + "]";
        const double c = number(member(terms[k], "coeff", w), w + ".coeff");
        const json &letters = member(terms[k], "letters", w);
        if (!letters.is_string()) {
            schema_error(w + ".letters", "expected a string");
        }
        try {
            out.push_back({c, PauliString::parse(letters.get<std::string>())});
        } catch (const Error &e) {
            schema_error(w + ".letters", e.what());
        }
    }
    try {
        return PauliObservable(n, std::move(out));
    } catch (const Error &e) {
        schema_error("$.terms", e.what());
    }
}

PauliObservable parse_observable(const std::string &text) {
    return observable_from_json(parse_json(text));
}

json budget_to_json(const ErrorBudget &b) {
    json j{{"epsilon", b.epsilon}, {"delta", b.delta}};
    if (b.target_variance) {
        j["target_variance"] = *b.target_variance;
    }
    return j;
}

json report_to_json(const EstimateReport &r) {
    json j{{"value", cplx_json(r.value)},
           {"shots_used", r.shots_used},
           {"copies_used", r.copies_used},
           {"empirical_variance", r.empirical_variance},
           {"budget", budget_to_json(r.budget)}};
    json parts = json::array();
    for (const auto &p : r.parts) {
        parts.push_back({{"basis", p.basis == Basis::X ? "X" : "Y"},
                         {"shots", p.shots},
                         {"mean", p.mean},
                         {"sample_variance", p.sample_variance}});
    }
    json terms = json::array();
    for (const auto &t : r.terms) {
        terms.push_back({{"letters", t.string.str()},
                         {"coeff", t.coefficient},
                         {"epsilon", t.epsilon},
                         {"shots", t.shots},
                         {"mean", t.mean},
                         {"sample_variance", t.sample_variance}});
    }
    j["parts"] = std::move(parts);
    j["terms"] = std::move(terms);
    return j;
}

json vd_to_json(const VDResult &r) {
    json j{{"corrected", r.corrected},
           {"noisy", r.noisy},
           {"variance", r.variance},
           {"total_shots", r.total_shots},
           {"numerator", report_to_json(r.numerator)},
           {"denominator", report_to_json(r.denominator)}};
    j["ideal"] = r.ideal ? json(*r.ideal) : json(nullptr);
    return j;
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string csv_header() {
    return "variant,m,n,s,proposition,gamma,gamma0,shots,value,variance,seed,noisy,ideal";
}

std::string csv_line(const CsvRecord &r) {
    std::ostringstream out;
    out << r.variant << ',' << r.m << ',' << r.n << ',' << r.s << ',' << r.proposition << ','
        << format_number(r.gamma) << ',' << format_number(r.gamma0) << ',' << r.shots << ','
        << format_number(r.value) << ',' << format_number(r.variance) << ',' << r.seed << ','
        << format_number(r.noisy) << ',' << format_number(r.ideal);
    return out.str();
}

} // namespace umt::io
