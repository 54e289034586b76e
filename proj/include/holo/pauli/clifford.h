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

#ifndef HOLO_PAULI_CLIFFORD_H
#define HOLO_PAULI_CLIFFORD_H

#include <string>

#include "holo/pauli/pauli_string.h"
#include "holo/pauli/stabilizer_group.h"

namespace holo {

enum class ControlBasis : unsigned char { Z, X };

/// Either a Hadamard on one site or a controlled Pauli
///   Z basis: |0><0| ⊗ I + |1><1| ⊗ P
///   X basis: |+><+| ⊗ I + |-><-| ⊗ P
/// with P a Hermitian Pauli not touching the control.
struct CliffordGate {
    enum class Kind : unsigned char { Hadamard, ControlledPauli };

    Kind kind = Kind::Hadamard;
    size_t control = 0;
    ControlBasis basis = ControlBasis::Z;
    PauliString target;

    static CliffordGate hadamard(size_t num_qubits, size_t site);
    static CliffordGate controlled_pauli(size_t control, ControlBasis basis, PauliString target);

    size_t num_qubits() const { return target.num_qubits(); }
    /// All qubits the gate acts on (control first, then target support).
    std::vector<size_t> qubits() const;
    std::string str() const;
};

/// U p U† with exact phase.
PauliString conjugate(const CliffordGate &gate, const PauliString &p);

}  // namespace holo

#endif
