// Copyright 2026 The holochannel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLO_HOLOGRAPHY_CIRCUIT_SIM_H
#define HOLO_HOLOGRAPHY_CIRCUIT_SIM_H

#include "holo/dense/kraus_channel.h"
#include "holo/holography/circuit.h"

namespace holo {

/// Unitary of one gate on its own qubits (local bit 0 is the control).
Mat gate_unitary(const CliffordGate &g);

/// Ancilla state sqrt(1-q)|a0> + sqrt(q)|a1> in the computational basis.
Vec ancilla_state(const AncillaSpec &a);

/// Largest register handled by simulate_circuit_pure.
constexpr size_t kMaxPureQubits = 20;

/// Full-register state-vector simulation: input psi on the system qubits
/// (local bit j is system_qubits[j]), ancillas in their deformed initial
/// states, all gates applied, then every ancilla traced out.
Mat simulate_circuit_pure(const SequentialCircuit &c, const Vec &psi);

/// Gate-by-gate dilation: each gate's ancilla is adjoined in its initial state,
/// the gate unitary applied, and the ancilla traced out at once. Exact because
/// every ancilla meets exactly one gate. Accepts mixed inputs.
Mat simulate_circuit_dilated(const SequentialCircuit &c, const Mat &rho);

}  // namespace holo

#endif
