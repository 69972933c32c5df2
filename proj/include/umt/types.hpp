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

#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace umt {

template <typename Real> using Complex = std::complex<Real>;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using cplx = std::complex<double>;
using MatrixXc = CMatrix<double>;
using VectorXc = CVector<double>;
using Index = Eigen::Index;

/// Tolerance for checks that are exact in real arithmetic.
inline constexpr double kExactTol = 1e-10;
/// Tolerance for quantities that went through an eigensolver.
inline constexpr double kEigenTol = 1e-9;

/// 2^n as an Eigen index.
constexpr Index pow2(int n) { return Index{1} << n; }

/// Basis-index bit mask of qubit `q` (0-based) in a `width`-qubit register.
/// Qubit 0 is the most significant tensor factor.
constexpr std::uint64_t qubit_mask(int width, int q) {
    return std::uint64_t{1} << (width - 1 - q);
}

} // namespace umt
