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

#ifndef HOLO_PAULI_GF2_H
#define HOLO_PAULI_GF2_H

#include <cstddef>
#include <utility>
#include <vector>

#include "holo/pauli/pauli_string.h"

namespace holo {

/// Incremental GF(2) row basis. Each stored row remembers which inserted
/// vectors it is a combination of (the "tags"), so membership queries can
/// also report a witness combination.
class Gf2Basis {
   public:
    Gf2Basis(size_t num_bits, size_t num_tags);

    /// Reduces `row` against the basis; adds it if independent.
    /// Returns true when the row was independent.
    bool insert(const BitVec &row, const BitVec &tags);
    /// Returns {residual, tags}: row = residual + sum of inserted rows flagged in tags.
    std::pair<BitVec, BitVec> reduce(const BitVec &row) const;
    size_t rank() const { return rows_.size(); }

   private:
    size_t num_bits_;
    size_t num_tags_;
    std::vector<BitVec> rows_;
    std::vector<BitVec> tags_;
    std::vector<size_t> pivots_;
};

/// Concatenated symplectic vector (x bits then z bits) of a Pauli.
BitVec symplectic(const PauliString &p);

/// Symplectic vector restricted to a subset of qubits.
BitVec symplectic_restricted(const PauliString &p, const std::vector<size_t> &qubits);

size_t gf2_rank(const std::vector<BitVec> &rows);

/// Basis of {v : row . v = 0 for every row}.
std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t num_cols);

}  // namespace holo

#endif
