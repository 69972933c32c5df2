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

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umt/errors.hpp"
#include "umt/types.hpp"

namespace umt {

enum class Pauli : std::uint8_t { I, X, Y, Z };

inline char to_char(Pauli p) {
    constexpr char letters[] = {'I', 'X', 'Y', 'Z'};
    return letters[static_cast<int>(p)];
}

inline Pauli pauli_from_char(char c) {
    switch (c) {
    case 'I':
        return Pauli::I;
    case 'X':
        return Pauli::X;
    case 'Y':
        return Pauli::Y;
    case 'Z':
        return Pauli::Z;
    default:
        throw DataError(std::string("invalid Pauli letter '") + c + "'");
    }
}

/// Single-qubit Pauli matrix.
template <typename Real> CMatrix<Real> pauli_matrix(Pauli p) {
    using C = Complex<Real>;
    CMatrix<Real> m(2, 2);
    switch (p) {
    case Pauli::I:
        m << C(1), C(0), C(0), C(1);
        break;
    case Pauli::X:
        m << C(0), C(1), C(1), C(0);
        break;
    case Pauli::Y:
        m << C(0), C(0, -1), C(0, 1), C(0);
        break;
    case Pauli::Z:
        m << C(1), C(0), C(0), C(-1);
        break;
    }
    return m;
}

/// σ_{k1} ⊗ ... ⊗ σ_{kn}; letter 0 is qubit 1, the most significant factor.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

    /// Parses e.g. "XIZ". Throws DataError on any other character.
    static PauliString parse(std::string_view text) {
        std::vector<Pauli> letters;
        letters.reserve(text.size());
        for (char c : text) {
            letters.push_back(pauli_from_char(c));
        }
        return PauliString(std::move(letters));
    }

    static PauliString identity(int n) { return PauliString(std::vector<Pauli>(n, Pauli::I)); }

    int qubits() const noexcept { return static_cast<int>(letters_.size()); }
    Pauli operator[](int q) const { return letters_.at(q); }
    const std::vector<Pauli> &letters() const noexcept { return letters_; }

    int weight() const {
        int w = 0;
        for (Pauli p : letters_) {
            w += p != Pauli::I;
        }
        return w;
    }
    bool is_identity() const { return weight() == 0; }

    std::string str() const {
        std::string out;
        for (Pauli p : letters_) {
            out.push_back(to_char(p));
        }
        return out;
    }

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::vector<Pauli> letters_;
};

/// Dense 2^n x 2^n matrix of a Pauli string.
template <typename Real> CMatrix<Real> pauli_matrix(const PauliString &p) {
    CMatrix<Real> out = CMatrix<Real>::Identity(1, 1);
    for (Pauli letter : p.letters()) {
        const CMatrix<Real> f = pauli_matrix<Real>(letter);
        CMatrix<Real> next(out.rows() * 2, out.cols() * 2);
        for (Index i = 0; i < out.rows(); ++i) {
            for (Index j = 0; j < out.cols(); ++j) {
                next.block(2 * i, 2 * j, 2, 2) = out(i, j) * f;
            }
        }
        out = std::move(next);
    }
    return out;
}

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

/// O = Σ_k a_k P_k with real coefficients over n-qubit Pauli strings.
class PauliObservable {
  public:
    PauliObservable() = default;
    PauliObservable(int qubits, std::vector<PauliTerm> terms)
        : qubits_(qubits), terms_(std::move(terms)) {
        if (qubits_ < 1) {
            throw DataError("observable needs at least one qubit");
        }
        for (const auto &t : terms_) {
            if (t.string.qubits() != qubits_) {
                throw DataError("Pauli string '" + t.string.str() + "' has " +
                                std::to_string(t.string.qubits()) + " letters, expected " +
                                std::to_string(qubits_));
            }
            if (!std::isfinite(t.coefficient)) {
                throw DataError("non-finite observable coefficient");
            }
        }
    }

    int qubits() const noexcept { return qubits_; }
    const std::vector<PauliTerm> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// c = Σ |a_k|.
    double coefficient_norm() const {
        double c = 0.0;
        for (const auto &t : terms_) {
            c += std::abs(t.coefficient);
        }
        return c;
    }

    /// Σ |a_k|².
    double coefficient_square_sum() const {
        double c = 0.0;
        for (const auto &t : terms_) {
            c += t.coefficient * t.coefficient;
        }
        return c;
    }

    PauliObservable scaled(double lambda) const {
        std::vector<PauliTerm> out = terms_;
        for (auto &t : out) {
            t.coefficient *= lambda;
        }
        return PauliObservable(qubits_, std::move(out));
    }

    template <typename Real> CMatrix<Real> matrix() const {
        const Index d = pow2(qubits_);
        CMatrix<Real> out = CMatrix<Real>::Zero(d, d);
        for (const auto &t : terms_) {
            out += static_cast<Real>(t.coefficient) * pauli_matrix<Real>(t.string);
        }
        return out;
    }

  private:
    int qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// (σ_z ⊗ I + I ⊗ σ_z)/2 style average magnetization on n qubits.
inline PauliObservable mean_z_observable(int n) {
    std::vector<PauliTerm> terms;
    for (int q = 0; q < n; ++q) {
        std::vector<Pauli> letters(n, Pauli::I);
        letters[q] = Pauli::Z;
        terms.push_back({1.0 / n, PauliString(std::move(letters))});
    }
    return PauliObservable(n, std::move(terms));
}

} // namespace umt
