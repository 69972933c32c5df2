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

// In-place gate kernels on dense amplitude vectors.

#pragma once

#include "umt/circuit.hpp"
#include "umt/types.hpp"

namespace umt {

void apply_gate(Eigen::Ref<VectorXc> amps, int width, const Gate &gate);

/// ρ -> U ρ U† for a single gate.
void apply_gate(MatrixXc &rho, int width, const Gate &gate);

template <typename State> void apply_layer(State &&state, int width, const Layer &layer) {
    for (const Gate &g : layer.gates) {
        apply_gate(state, width, g);
    }
}

} // namespace umt
