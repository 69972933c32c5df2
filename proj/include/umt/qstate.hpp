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
 * Validated quantum states: density matrices, their spectral decomposition,
 * and normalized state vectors. Everything is templated on the real scalar;
 * the `double` aliases at the bottom are what the rest of the library uses.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "umt/errors.hpp"
#include "umt/types.hpp"

namespace umt {

/// Number of qubits for a 2^n dimension, or -1 when `dim` is not a power of two.
inline int qubits_for_dimension(Index dim) {
    if (dim < 1 || (dim & (dim - 1)) != 0) {
        return -1;
    }
    int n = 0;
    while ((Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

/// Kronecker product a ⊗ b, with `a` the more significant factor.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                              a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Largest entrywise modulus of m - m†.
template <typename Derived> auto hermitian_defect(const Eigen::MatrixBase<Derived> &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Real> class BasicDensityMatrix;

template <typename Real, typename Derived>
BasicDensityMatrix<Real> make_density(const Eigen::MatrixBase<Derived> &matrix);

/// An n-qubit density matrix: Hermitian, unit trace, positive semidefinite
/// (each to 1e-10). Only constructible through make_density().
template <typename Real> class BasicDensityMatrix {
  public:
    int qubits() const noexcept { return qubits_; }
    Index dim() const noexcept { return data_.rows(); }
    const CMatrix<Real> &matrix() const noexcept { return data_; }

    /// Tr(ρ²).
    Real purity() const { return (data_ * data_).trace().real(); }

  private:
    BasicDensityMatrix(int qubits, CMatrix<Real> data) : qubits_(qubits), data_(std::move(data)) {}

    template <typename R, typename D>
    friend BasicDensityMatrix<R> make_density(const Eigen::MatrixBase<D> &matrix);

    int qubits_;
    CMatrix<Real> data_;
};

/// Validates `matrix` and wraps it as a density matrix. Small anti-Hermitian
/// residue below tolerance is symmetrized away.
template <typename Real, typename Derived>
BasicDensityMatrix<Real> make_density(const Eigen::MatrixBase<Derived> &matrix) {
    const Real tol = static_cast<Real>(kExactTol);
    if (matrix.rows() != matrix.cols()) {
        std::ostringstream msg;
        msg << "matrix is " << matrix.rows() << "x" << matrix.cols() << ", expected square";
        throw StateError(StateErrorKind::BadDimension, msg.str());
    }
    const int n = qubits_for_dimension(matrix.rows());
    if (n < 0) {
        std::ostringstream msg;
        msg << "dimension " << matrix.rows() << " is not a power of two";
        throw StateError(StateErrorKind::BadDimension, msg.str());
    }
    CMatrix<Real> m = matrix.template cast<Complex<Real>>();
    const Real defect = hermitian_defect(m);
    if (!(defect <= tol)) {
        std::ostringstream msg;
        msg << "max |rho - rho^dagger| = " << defect;
        throw StateError(StateErrorKind::NotHermitian, msg.str());
    }
    CMatrix<Real> h = (m + m.adjoint()) / Real(2);
    const Complex<Real> tr = h.trace();
    if (!(std::abs(tr - Complex<Real>(1)) <= tol)) {
        std::ostringstream msg;
        msg << "trace = " << tr.real() << (tr.imag() < 0 ? " - " : " + ")
            << std::abs(tr.imag()) << "i";
        throw StateError(StateErrorKind::NotUnitTrace, msg.str());
    }
    Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigensolver failed while validating density matrix");
    }
    const Real lowest = solver.eigenvalues().minCoeff();
    if (lowest < -tol) {
        std::ostringstream msg;
        msg << "smallest eigenvalue " << lowest;
        throw StateError(StateErrorKind::NotPSD, msg.str());
    }
    return BasicDensityMatrix<Real>(n, std::move(h));
}

/// Eigen-ensemble of a density matrix. Eigenvalues are sorted descending and
/// eigenvectors are the matching columns.
template <typename Real> struct BasicSpectralDecomposition {
    RVector<Real> eigenvalues;
    CMatrix<Real> eigenvectors;

    CMatrix<Real> reconstruct() const {
        return eigenvectors * eigenvalues.template cast<Complex<Real>>().asDiagonal() *
               eigenvectors.adjoint();
    }
};

/// Spectral decomposition of ρ. Tiny negative eigenvalues (>= -1e-10) are
/// clamped to zero and the spectrum renormalized to sum to one.
template <typename Real>
BasicSpectralDecomposition<Real> spectral(const BasicDensityMatrix<Real> &rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(rho.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigensolver failed in spectral()");
    }
    const Index d = rho.dim();
    BasicSpectralDecomposition<Real> out;
    out.eigenvalues.resize(d);
    out.eigenvectors.resize(d, d);
    // Eigen sorts ascending.
    for (Index k = 0; k < d; ++k) {
        out.eigenvalues(k) = std::max(Real(0), solver.eigenvalues()(d - 1 - k));
        out.eigenvectors.col(k) = solver.eigenvectors().col(d - 1 - k);
    }
    out.eigenvalues /= out.eigenvalues.sum();
    return out;
}

/// Unit-norm state vector on N qubits.
template <typename Real> class BasicStateVector {
  public:
    template <typename Derived> explicit BasicStateVector(const Eigen::MatrixBase<Derived> &amps) {
        const int n = qubits_for_dimension(amps.size());
        if (amps.cols() != 1 || n < 0) {
            throw StateError(StateErrorKind::BadDimension,
                             "state vector length must be a power of two");
        }
        const Real norm = amps.norm();
        if (!(std::abs(norm - Real(1)) <= static_cast<Real>(kExactTol))) {
            std::ostringstream msg;
            msg << "state vector norm " << norm << " != 1";
            throw DataError(msg.str());
        }
        qubits_ = n;
        amplitudes_ = amps.template cast<Complex<Real>>();
    }

    int qubits() const noexcept { return qubits_; }
    const CVector<Real> &amplitudes() const noexcept { return amplitudes_; }

    BasicDensityMatrix<Real> density() const {
        return make_density<Real>(amplitudes_ * amplitudes_.adjoint());
    }

  private:
    int qubits_ = 0;
    CVector<Real> amplitudes_;
};

template <typename Real> BasicDensityMatrix<Real> maximally_mixed(int n) {
    const Index d = pow2(n);
    return make_density<Real>(CMatrix<Real>::Identity(d, d) / static_cast<Real>(d));
}

/// |i⟩⟨i| for computational basis index i.
template <typename Real> BasicDensityMatrix<Real> basis_density(int n, Index i) {
    const Index d = pow2(n);
    if (i < 0 || i >= d) {
        throw ParameterError("basis index out of range");
    }
    CMatrix<Real> m = CMatrix<Real>::Zero(d, d);
    m(i, i) = Real(1);
    return make_density<Real>(m);
}

/// Random density matrix of the given rank (Ginibre ensemble). rank <= 0 means full rank.
template <typename Real, typename Rng>
BasicDensityMatrix<Real> random_density(int n, Rng &rng, int rank = 0) {
    const Index d = pow2(n);
    const Index r = rank <= 0 ? d : std::min<Index>(rank, d);
    std::normal_distribution<Real> normal;
    CMatrix<Real> g(d, r);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < r; ++j) {
            const Real re = normal(rng);
            const Real im = normal(rng);
            g(i, j) = Complex<Real>(re, im);
        }
    }
    CMatrix<Real> rho = g * g.adjoint();
    rho /= rho.trace();
    return make_density<Real>(rho);
}

using DensityMatrix = BasicDensityMatrix<double>;
using SpectralDecomposition = BasicSpectralDecomposition<double>;
using StateVector = BasicStateVector<double>;

inline DensityMatrix make_density(const MatrixXc &matrix) { return make_density<double>(matrix); }

} // namespace umt
