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

#include "umt/ansatz.hpp"

#include "umt/circuit.hpp"
#include "umt/kernels.hpp"
#include "umt/simulator.hpp"

namespace umt {

StateVector ansatz_vector(const AnsatzParams &alpha) {
    VectorXc v = VectorXc::Zero(4);
    v[0] = 1.0;
    for (int block = 0; block < 2; ++block) {
        apply_gate(v, 2, Gate::ry(0, alpha[2 * block]));
        apply_gate(v, 2, Gate::ry(1, alpha[2 * block + 1]));
        apply_gate(v, 2, Gate::cnot(0, 1));
    }
    return StateVector(v);
}

DensityMatrix ansatz_state(const AnsatzParams &alpha, double gamma0) {
    return depolarize_state(ansatz_vector(alpha).density(), gamma0);
}

} // namespace umt
