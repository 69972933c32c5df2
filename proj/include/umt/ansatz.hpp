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

// Two-qubit hardware-efficient ansatz U(α) and the default experiment
// observable built on it.

#pragma once

#include <array>

#include "umt/qstate.hpp"

namespace umt {

using AnsatzParams = std::array<double, 4>;

inline constexpr AnsatzParams kDefaultAlpha{0.8147, 0.1270, 0.2785, 0.5469};

/// U(α)|00⟩: Ry(α1)⊗Ry(α2), CNOT(1→2), Ry(α3)⊗Ry(α4), CNOT(1→2).
/// Ry(θ) = exp(-iθσ_y/2).
StateVector ansatz_vector(const AnsatzParams &alpha);

/// depolarize_state(U(α)|00⟩⟨00|U(α)†, γ₀).
DensityMatrix ansatz_state(const AnsatzParams &alpha, double gamma0 = 0.0);

} // namespace umt
