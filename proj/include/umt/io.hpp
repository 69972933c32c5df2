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


// File formats. States and observables are JSON:
//   density     {"n": 2, "rows": [[[re, im], ...], ...]}
//   observable  {"n": 2, "terms": [{"coeff": 0.5, "letters": "ZI"}, ...]}
// Schema violations raise DataError naming the offending location.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "umt/estimators.hpp"
#include "umt/pauli.hpp"
#include "umt/qstate.hpp"

namespace umt::io {

using nlohmann::json;

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

json density_to_json(const DensityMatrix &rho);
DensityMatrix density_from_json(const json &j);
DensityMatrix parse_density(const std::string &text);

json observable_to_json(const PauliObservable &o);
PauliObservable observable_from_json(const json &j);
PauliObservable parse_observable(const std::string &text);

json budget_to_json(const ErrorBudget &b);
json report_to_json(const EstimateReport &r);
json vd_to_json(const VDResult &r);

/// printf("%.10g").
std::string format_number(double x);

/// One long-format CSV line of a VD or estimate run.
struct CsvRecord {
    std::string variant;
    int m = 0;
    int n = 0;
    int s = 0;
    int proposition = 0;
    double gamma = 0.0;
    double gamma0 = 0.0;
    std::int64_t shots = 0;
    double value = 0.0;
    double variance = 0.0;
    std::uint64_t seed = 0;
    double noisy = 0.0;
    double ideal = 0.0;
};

std::string csv_header();
std::string csv_line(const CsvRecord &r);

} // namespace umt::io
