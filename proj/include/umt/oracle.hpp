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

/**
 * @file
 * Brute-force dense ground truth for multivariate traces and virtually
 * distilled expectation values. Nothing here touches the circuit or
 * simulator code; matrix powers are plain repeated products.
 *
 * Convention: the shift S^(m) maps |ψ1⟩⊗|ψ2⟩⊗...⊗|ψm⟩ to
 * |ψm⟩⊗|ψ1⟩⊗...⊗|ψ(m-1)⟩. With that operator
 * Tr[S^(m)(ρ1⊗...⊗ρm)] = Tr(ρm...ρ1), the complex conjugate of Tr(ρ1...ρm).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include "umt/errors.hpp"
#include "umt/pauli.hpp"
#include "umt/qstate.hpp"

namespace umt::oracle {

/// Largest m*n for which the 2^{mn} permutation-matrix path is evaluated.
inline constexpr int kMaxShiftQubits = 12;

template <typename Real>
void check_same_size(std::span<const BasicDensityMatrix<Real>> states) {
    if (states.empty()) {
        throw ParameterError("need at least one state");
    }
    for (const auto &s : states) {
        if (s.qubits() != states.front().qubits()) {
            throw ParameterError("states have different qubit counts");
        }
    }
}

/// Tr(ρ1 ρ2 ... ρm) by ordered matrix products.
template <typename Real>
Complex<Real> mt_product(std::span<const BasicDensityMatrix<Real>> states) {
    check_same_size(states);
    CMatrix<Real> acc = states.front().matrix();
    for (std::size_t k = 1; k < states.size(); ++k) {
        acc = acc * states[k].matrix();
    }
    return acc.trace();
}

/// Index map of S^(m) on m registers of n qubits: S|c⟩ = |result[c]⟩.
inline std::vector<Index> cyclic_shift_permutation(int m, int n) {
    if (m < 1 || n < 1 || m * n > 2 * kMaxShiftQubits) {
        throw ParameterError("cyclic shift: m*n out of range");
    }
    const Index block = pow2(n);
    const Index dim = pow2(m * n);
    std::vector<Index> image(static_cast<std::size_t>(dim));
    std::vector<Index> digits(m);
    for (Index col = 0; col < dim; ++col) {
        // Register 1 is the most significant base-2^n digit.
        Index rest = col;
        for (int r = m - 1; r >= 0; --r) {
            digits[r] = rest % block;
            rest /= block;
        }
        // Output register 1 holds input register m; register r+1 holds r.
        Index row = digits[m - 1];
        for (int r = 0; r < m - 1; ++r) {
            row = row * block + digits[r];
        }
        image[static_cast<std::size_t>(col)] = row;
    }
    return image;
}

/// Dense permutation matrix of S^(m).
template <typename Real> CMatrix<Real> cyclic_shift_matrix(int m, int n) {
    const auto image = cyclic_shift_permutation(m, n);
    const Index dim = static_cast<Index>(image.size());
    CMatrix<Real> s = CMatrix<Real>::Zero(dim, dim);
    for (Index col = 0; col < dim; ++col) {
        s(image[static_cast<std::size_t>(col)], col) = Real(1);
    }
    return s;
}

/// Tr[S^(m)(ρ1 ⊗ ... ⊗ ρm)] (m*n <= 12). With S|c⟩ = |π(c)⟩ and
/// A = ρ1 ⊗ ... ⊗ ρm, Tr(S A) = Σ_c A(c, π(c)); each entry of A factors
/// over registers, so A is never formed.
template <typename Real>
Complex<Real> shift_trace(std::span<const BasicDensityMatrix<Real>> states) {
    check_same_size(states);
    const int m = static_cast<int>(states.size());
    const int n = states.front().qubits();
    if (m * n > kMaxShiftQubits) {
        throw ParameterError("shift_trace: m*n exceeds " + std::to_string(kMaxShiftQubits));
    }
    const auto image = cyclic_shift_permutation(m, n);
    const Index block = pow2(n);
    Complex<Real> total(0);
    for (Index i = 0; i < static_cast<Index>(image.size()); ++i) {
        Index row = i;
        Index col = image[static_cast<std::size_t>(i)];
        Complex<Real> entry(1);
        for (int r = m - 1; r >= 0; --r) {
            entry *= states[r].matrix()(row % block, col % block);
            row /= block;
            col /= block;
        }
        total += entry;
    }
    return total;
}

/// Tr(ρ1...ρm). For m*n <= 12 the permutation path is evaluated as well and
/// conj(shift_trace) must agree with the product to 1e-10.
template <typename Real>
Complex<Real> mt_exact(std::span<const BasicDensityMatrix<Real>> states) {
    const Complex<Real> product = mt_product(states);
    const int mn = static_cast<int>(states.size()) * states.front().qubits();
    if (mn <= kMaxShiftQubits) {
        const Complex<Real> via_shift = std::conj(shift_trace(states));
        if (std::abs(via_shift - product) > static_cast<Real>(kExactTol)) {
            std::ostringstream msg;
            msg << "multivariate trace paths disagree: product " << product << " vs shift "
                << via_shift;
            throw NumericError(msg.str());
        }
    }
    return product;
}

template <typename Real> CMatrix<Real> matrix_power(const CMatrix<Real> &a, int m) {
    if (m < 0) {
        throw ParameterError("negative matrix power");
    }
    CMatrix<Real> out = CMatrix<Real>::Identity(a.rows(), a.cols());
    for (int k = 0; k < m; ++k) {
        out = out * a;
    }
    return out;
}

template <typename Real> struct BasicOracleResult {
    Complex<Real> mt;  ///< Tr(ρ^m)
    Real tr_O_rho_m;   ///< Tr(O ρ^m)
    Real vd;           ///< Tr(O ρ^m) / Tr(ρ^m)
};

template <typename Real>
BasicOracleResult<Real> evaluate(const BasicDensityMatrix<Real> &rho, int m,
                                 const PauliObservable &o) {
    if (m < 1) {
        throw ParameterError("m must be >= 1");
    }
    if (o.qubits() != rho.qubits()) {
        throw ParameterError("observable and state qubit counts differ");
    }
    const CMatrix<Real> power = matrix_power<Real>(rho.matrix(), m);
    const Complex<Real> mt = power.trace();
    const Real num = (o.template matrix<Real>() * power).trace().real();
    if (std::abs(mt) < static_cast<Real>(1e-300)) {
        throw NumericError("Tr(rho^m) vanishes");
    }
    return {mt, num, num / mt.real()};
}

/// Tr(O ρ^m)/Tr(ρ^m).
template <typename Real>
Real vd_exact(const BasicDensityMatrix<Real> &rho, int m, const PauliObservable &o) {
    return evaluate(rho, m, o).vd;
}

/// Tr(O ρ).
template <typename Real>
Real expectation(const BasicDensityMatrix<Real> &rho, const PauliObservable &o) {
    return vd_exact(rho, 1, o);
}

template <typename Real> struct DominantExpectation {
    Real value;           ///< ⟨u0|O|u0⟩, averaged over the top eigenspace when degenerate
    Real top_eigenvalue;  ///< E0
    Real next_eigenvalue; ///< E1 (0 for a 1x1 state)
    bool degenerate;      ///< E0 == E1 within 1e-9
};

template <typename Real>
DominantExpectation<Real> dominant_expectation(const BasicDensityMatrix<Real> &rho,
                                               const PauliObservable &o) {
    Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(rho.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigensolver failed");
    }
    const Index d = rho.dim();
    const auto &ev = solver.eigenvalues();
    const Real top = ev(d - 1);
    const Real tol = static_cast<Real>(kEigenTol);
    const CMatrix<Real> om = o.template matrix<Real>();
    Real sum = 0;
    int count = 0;
    for (Index k = d - 1; k >= 0 && top - ev(k) <= tol; --k) {
        const auto u = solver.eigenvectors().col(k);
        sum += (u.adjoint() * om * u)(0, 0).real();
        ++count;
    }
    const Real next = count < d ? ev(d - 1 - count) : (d > 1 ? top : Real(0));
    return {sum / count, top, count > 1 ? top : next, count > 1};
}

template <typename Real> struct SuppressionPoint {
    int m;
    Real vd;
    Real error; ///< |⟨O⟩_vd^(m) - ⟨u0|O|u0⟩|
};

template <typename Real> struct SuppressionCurve {
    Real reference;
    Real eigenvalue_ratio; ///< E1/E0
    bool degenerate_top;
    std::vector<SuppressionPoint<Real>> points;

    /// error(m+1)/error(m) for consecutive points; empty optional when error(m) is ~0.
    std::vector<std::optional<Real>> ratios() const {
        std::vector<std::optional<Real>> out;
        for (std::size_t k = 1; k < points.size(); ++k) {
            if (points[k - 1].error > static_cast<Real>(1e-14)) {
                out.push_back(points[k].error / points[k - 1].error);
            } else {
                out.push_back(std::nullopt);
            }
        }
        return out;
    }
};

/// |⟨O⟩_vd^(m) - ⟨O⟩_exact| for m in [m_first, m_last].
template <typename Real>
SuppressionCurve<Real> exponential_suppression_curve(const BasicDensityMatrix<Real> &rho,
                                                     int m_first, int m_last,
                                                     const PauliObservable &o) {
    if (m_first < 1 || m_last < m_first) {
        throw ParameterError("invalid m range");
    }
    const auto dom = dominant_expectation(rho, o);
    SuppressionCurve<Real> curve{dom.value,
                                 dom.top_eigenvalue > 0 ? dom.next_eigenvalue / dom.top_eigenvalue
                                                        : Real(0),
                                 dom.degenerate,
                                 {}};
    for (int m = m_first; m <= m_last; ++m) {
        const Real v = vd_exact(rho, m, o);
        curve.points.push_back({m, v, std::abs(v - dom.value)});
    }
    return curve;
}

using OracleResult = BasicOracleResult<double>;

} // namespace umt::oracle
