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

#include <unsupported/Eigen/KroneckerProduct>

#include "umt/errors.hpp"
#include "umt/pauli.hpp"

using namespace umt;

TEST_CASE("single-qubit Pauli algebra") {
    const MatrixXc x = pauli_matrix<double>(Pauli::X);
    const MatrixXc y = pauli_matrix<double>(Pauli::Y);
    const MatrixXc z = pauli_matrix<double>(Pauli::Z);
    const MatrixXc id = MatrixXc::Identity(2, 2);
    CHECK((x * x - id).norm() < 1e-15);
    CHECK((y * y - id).norm() < 1e-15);
    CHECK((z * z - id).norm() < 1e-15);
    // XY = iZ
    CHECK((x * y - cplx(0, 1) * z).norm() < 1e-15);
}

TEST_CASE("string parsing and properties") {
    const auto p = PauliString::parse("XIZY");
    CHECK(p.qubits() == 4);
    CHECK(p.weight() == 3);
    CHECK(p.str() == "XIZY");
    CHECK(p[1] == Pauli::I);
    CHECK(PauliString::identity(3).is_identity());
    CHECK_THROWS_AS(PauliString::parse("XQ"), DataError);
    CHECK(pauli_from_char('Y') == Pauli::Y);
    CHECK_THROWS_AS(pauli_from_char('y'), DataError);
}

TEST_CASE("string matrix is the Kronecker product of letters, first letter most significant") {
    const auto p = PauliString::parse("XZY");
    const MatrixXc ref = Eigen::kroneckerProduct(
        Eigen::kroneckerProduct(pauli_matrix<double>(Pauli::X), pauli_matrix<double>(Pauli::Z)).eval(),
        pauli_matrix<double>(Pauli::Y));
    CHECK((pauli_matrix<double>(p) - ref).norm() == 0.0);
}

TEST_CASE("observable norms and scaling") {
    const auto o = mean_z_observable(2);
    CHECK(o.size() == 2);
    CHECK(o.coefficient_norm() == doctest::Approx(1.0));
    CHECK(o.coefficient_square_sum() == doctest::Approx(0.5));
    const MatrixXc m = o.matrix<double>();
    CHECK(m(0, 0).real() == doctest::Approx(1.0));
    CHECK(m(1, 1).real() == doctest::Approx(0.0));
    CHECK(m(3, 3).real() == doctest::Approx(-1.0));
    const auto scaled = o.scaled(-3.0);
    CHECK(scaled.coefficient_norm() == doctest::Approx(3.0));
    CHECK((scaled.matrix<double>() + 3.0 * m).norm() < 1e-14);
}

TEST_CASE("observable validation") {
    CHECK_THROWS_AS(PauliObservable(2, {{1.0, PauliString::parse("Z")}}), DataError);
    CHECK_THROWS_AS(PauliObservable(0, {}), DataError);
}
