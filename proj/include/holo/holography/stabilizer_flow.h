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

#ifndef HOLO_HOLOGRAPHY_STABILIZER_FLOW_H
#define HOLO_HOLOGRAPHY_STABILIZER_FLOW_H

#include <utility>
#include <vector>

#include "holo/holography/circuit.h"
#include "holo/pauli/stabilizer_group.h"

namespace holo {

/// U p U† for the whole circuit U (slices in order).
PauliString push_through(const SequentialCircuit &c, PauliString p);

/// Z on Zero ancillas, X on Plus ancillas, then the input stabilizers.
std::vector<PauliString> initial_stabilizers(const SequentialCircuit &c);

/// Group of the circuit output at the fixed point (every ancilla probability 1/2).
/// Throws std::domain_error when an ancilla is deformed (the state is then not a stabilizer state).
StabilizerGroup evolve_initial_stabilizers(const SequentialCircuit &c);

struct BoundaryStructure {
    /// Generators of the subgroup with no support on lattice.top.
    std::vector<PauliString> bulk_generators;
    /// Remaining generators; their restrictions to the top are independent.
    std::vector<PauliString> top_boundary_generators;
    /// One open string per requested endpoint pair.
    std::vector<PauliString> string_generators;
};

/// Splits the group into bulk and top-boundary parts and builds, for every
/// endpoint pair (i, j) of top qubits, a group element whose top restriction
/// is Z_i Z_j. Throws std::invalid_argument if a pair is not connectable.
BoundaryStructure extract_boundary_structure(const StabilizerGroup &g,
                                             const Lattice &lattice,
                                             const std::vector<std::pair<size_t, size_t>> &endpoints = {});

/// Group element whose restriction to `region` has the same letters as `target`
/// there, if any. The element is a product of group generators.
std::optional<PauliString> element_with_restriction(const StabilizerGroup &g,
                                                    const std::vector<size_t> &region,
                                                    const PauliString &target);

}  // namespace holo

#endif
