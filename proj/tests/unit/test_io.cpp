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

#include <random>
#include <string>

#include "umt/errors.hpp"
#include "umt/io.hpp"

using namespace umt;

namespace {

std::string error_of(const std::string &text) {
    try {
        io::parse_density(text);
    } catch (const DataError &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("density JSON round trip") {
    std::mt19937_64 rng(4);
    const auto rho = random_density<double>(2, rng);
    const auto back = io::parse_density(io::density_to_json(rho).dump());
    CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("density accepts plain real entries") {
    const auto rho = io::parse_density(R"({"n":1,"rows":[[0.5,0],[0,[0.5,0]]]})");
    CHECK(rho.purity() == doctest::Approx(0.5));
}

TEST_CASE("density schema errors name the location") {
    CHECK(error_of("not json").find("JSON parse error") != std::string::npos);
    CHECK(error_of(R"({"rows":[]})").find("$: missing key \"n\"") != std::string::npos);
    CHECK(error_of(R"({"n":1,"rows":[[1,0]]})").find("$.rows") != std::string::npos);
    CHECK(error_of(R"({"n":1,"rows":[[1,0],[0]]})").find("$.rows[1]") != std::string::npos);
    CHECK(error_of(R"({"n":1,"rows":[[1,0],[0,"x"]]})").find("$.rows[1][1]") != std::string::npos);
    CHECK(error_of(R"({"n":1,"rows":[[1,0],[0,[1,"x"]]]})").find("$.rows[1][1][1]") !=
          std::string::npos);
    CHECK(error_of(R"({"n":-1,"rows":[]})").find("$.n") != std::string::npos);
    // Well-formed JSON but not a state.
    CHECK_THROWS_AS(io::parse_density(R"({"n":1,"rows":[[1,0],[0,1]]})"), StateError);
}

TEST_CASE("observable JSON") {
    const auto o = mean_z_observable(2);
    const auto back = io::parse_observable(io::observable_to_json(o).dump());
    REQUIRE(back.size() == 2);
    CHECK(back.terms()[1].string.str() == "IZ");
    CHECK(back.terms()[1].coefficient == 0.5);
    CHECK_THROWS_WITH_AS(io::parse_observable(R"({"n":2,"terms":[{"coeff":1,"letters":"ZQ"}]})"),
                         doctest::Contains("$.terms[0].letters"), DataError);
    CHECK_THROWS_WITH_AS(io::parse_observable(R"({"n":2,"terms":[{"letters":"ZI"}]})"),
                         doctest::Contains("$.terms[0]"), DataError);
    CHECK_THROWS_AS(io::parse_observable(R"({"n":2,"terms":[{"coeff":1,"letters":"Z"}]})"),
                    DataError);
}

TEST_CASE("reports serialize") {
    EstimateReport r;
    r.value = {0.25, -0.5};
    r.shots_used = 10;
    r.parts.push_back({Basis::Y, 5, -0.5, 0.75});
    const auto j = io::report_to_json(r);
    CHECK(j["value"][1] == -0.5);
    CHECK(j["parts"][0]["basis"] == "Y");
    CHECK(j["budget"]["epsilon"] == 0.1);
    VDResult v;
    v.corrected = 0.75;
    const auto jv = io::vd_to_json(v);
    CHECK(jv["ideal"].is_null());
    CHECK(jv["corrected"] == 0.75);
}

TEST_CASE("CSV formatting") {
    CHECK(io::format_number(0.1) == "0.1");
    CHECK(io::format_number(1.0 / 3.0) == "0.3333333333");
    CHECK(io::format_number(12345678901.0) == "1.23456789e+10");
    io::CsvRecord rec{"s=2,h=2", 5, 2, 2, 2, 0.2, 0.4, 0, 0.7545682349, 0.0, 7, 0.45, 0.75};
    CHECK(io::csv_line(rec) == "s=2,h=2,5,2,2,2,0.2,0.4,0,0.7545682349,0,7,0.45,0.75");
    CHECK(io::csv_header().rfind("variant,m,n,s,proposition,gamma,gamma0,shots,value,variance,seed", 0) == 0);
}

TEST_CASE("missing files") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/state.json"), DataError);
}
