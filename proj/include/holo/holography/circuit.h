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

#ifndef HOLO_HOLOGRAPHY_CIRCUIT_H
#define HOLO_HOLOGRAPHY_CIRCUIT_H

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "holo/holography/deformation.h"
#include "holo/holography/lattice.h"
#include "holo/pauli/clifford.h"

namespace holo {

enum class AncillaInit : unsigned char { Zero, Plus };

/// Gates on pairwise disjoint qubits.
struct CircuitSlice {
    std::string tag;
    std::vector<CliffordGate> gates;
};

/// Per-ancilla data. `apply_prob` is the probability with which the ancilla's
/// controlled Pauli ends up acting on the system once the ancilla is traced out.
/// The deformed initial state is sqrt(1-q)|a0> + sqrt(q)|a1> in the control basis.
struct AncillaSpec {
    AncillaInit init = AncillaInit::Zero;
    double apply_prob = 0.5;
    /// Deformation axis for the deformed bulk: 'X' for Zero-initialised, 'Z' for Plus.
    char axis() const { return init == AncillaInit::Zero ? 'X' : 'Z'; }
    DeformationParams deformation() const { return noise_to_deformation(apply_prob); }
};

/// A sequential Clifford circuit over a lattice: system qubits plus fresh ancillas.
struct SequentialCircuit {
    Lattice lattice;
    std::vector<size_t> system_qubits;
    std::map<size_t, AncillaSpec> ancillas;
    std::vector<CircuitSlice> slices;
    /// Stabilizers of the input state, supported on system qubits.
    std::vector<PauliString> input_stabilizers;

    size_t num_qubits() const { return lattice.num_qubits(); }
    bool is_system(size_t q) const;

    /// Checks disjointness within slices, that every ancilla is used by gates of
    /// exactly one slice, and that system/ancilla sets partition the register.
    void validate() const;

    std::string to_text() const;
    static SequentialCircuit from_text(std::string_view text);
};

/// Splits an ordered gate list into slices of disjoint gates. A gate lands one
/// slice after the last slice holding a gate it overlaps, so the product is unchanged.
std::vector<CircuitSlice> pack_gates(const std::string &tag, const std::vector<CliffordGate> &gates);

}  // namespace holo

#endif
