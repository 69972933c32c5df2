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

#include <stdexcept>
#include <string>

namespace umt {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside its documented range.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Malformed or inconsistent input data (state files, matrices, schemas).
class DataError : public Error {
  public:
    using Error::Error;
};

/// A numerical procedure failed or two independent routes disagreed.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// A ratio estimate whose denominator is too close to zero to divide by.
class DegenerateDenominator : public NumericError {
  public:
    using NumericError::NumericError;
};

enum class StateErrorKind { NotHermitian, NotUnitTrace, NotPSD, BadDimension };

inline const char *to_string(StateErrorKind kind) {
    switch (kind) {
    case StateErrorKind::NotHermitian:
        return "NotHermitian";
    case StateErrorKind::NotUnitTrace:
        return "NotUnitTrace";
    case StateErrorKind::NotPSD:
        return "NotPSD";
    case StateErrorKind::BadDimension:
        return "BadDimension";
    }
    return "Unknown";
}

/// Raised by density-matrix validation; `kind()` names the failed invariant.
class StateError : public DataError {
  public:
    StateError(StateErrorKind kind, const std::string &detail)
        : DataError(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    StateErrorKind kind() const noexcept { return kind_; }

  private:
    StateErrorKind kind_;
};

} // namespace umt
