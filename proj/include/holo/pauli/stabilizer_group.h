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

#ifndef HOLO_PAULI_STABILIZER_GROUP_H
#define HOLO_PAULI_STABILIZER_GROUP_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holo/pauli/partition.h"
#include "holo/pauli/pauli_string.h"

namespace holo {

/// Abelian group of Hermitian Paulis not containing -I, described by
/// independent commuting generators. Represents rho ∝ prod_i (1 + g_i).
class StabilizerGroup {
   public:
    StabilizerGroup() = default;
    /// Validates commutation, independence, and real signs; throws std::invalid_argument otherwise.
    StabilizerGroup(size_t num_qubits, std::vector<PauliString> generators);
    /// Builds a group from a possibly redundant commuting list, dropping dependent entries.
    /// Throws if the list is inconsistent (generates -I).
    static StabilizerGroup from_redundant(size_t num_qubits, const std::vector<PauliString> &elements);

    size_t num_qubits() const { return n_; }
    size_t rank() const { return gens_.size(); }
    const std::vector<PauliString> &generators() const { return gens_; }

    /// Group element carrying the same letters as p (with its own phase), if any.
    std::optional<PauliString> element_with_letters(const PauliString &p) const;
    bool contains_up_to_sign(const PauliString &p) const { return element_with_letters(p).has_value(); }
    /// Exact membership including sign.
    bool contains(const PauliString &p) const;

    /// Dimension of the subgroup supported entirely inside `region`.
    size_t subgroup_dim_inside(const std::vector<size_t> &region) const;

    /// Line-oriented text: one generator per line, sign then letters.
    std::string to_text() const;
    static StabilizerGroup from_text(std::string_view text);

   private:
    size_t n_ = 0;
    std::vector<PauliString> gens_;
};

size_t group_rank(const std::vector<PauliString> &generators);

/// S_A = |A| - log2 |G_A| in bits.
double stabilizer_entropy(const StabilizerGroup &g, const std::vector<size_t> &region);
double stabilizer_cmi(const StabilizerGroup &g, const Partition &p);

/// Extends a group to a maximal (pure-state) group by adding single-qubit Z or X generators.
StabilizerGroup complete_to_pure(const StabilizerGroup &g);

}  // namespace holo

#endif
