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

#ifndef HOLO_DENSE_SECTOR_H
#define HOLO_DENSE_SECTOR_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo/dense/linalg.h"
#include "holo/pauli/pauli_string.h"

namespace holo {

/// A charge diagonal in the computational basis: label per basis index.
struct DiagonalCharge {
    std::string name;
    std::vector<int> label;

    /// Parity of the bits in `mask` (eigenvalue of the Z-string on mask is (-1)^label).
    static DiagonalCharge parity(size_t n, uint64_t mask, std::string name = "Z2");
    /// Number of set bits (total U(1) charge).
    static DiagonalCharge number(size_t n, std::string name = "U1");
};

/// Symmetry data used to block-diagonalize a superoperator. Strong diagonal
/// charges split operator space into (ket charge, bra charge) blocks; an optional
/// weak bit-flip involution Ad(X^mask) splits each invariant block into ± parts.
struct SectorSpec {
    std::vector<DiagonalCharge> charges;
    std::optional<uint64_t> flip_mask;

    bool empty() const { return charges.empty() && !flip_mask; }
    /// Combined charge id per basis index, and the number of distinct ids.
    std::vector<int> combined(size_t dim, int *num_ids) const;
    /// Human-readable label of a combined id.
    std::string describe(int id, size_t dim) const;
};

/// P_λ rho P_λ / Tr for P_λ = (1 + λ S)/2, S a Hermitian Pauli, λ = ±1. Throws on zero norm.
Mat sector_project(const Mat &rho, const PauliString &s, int eigenvalue);
/// P_λ |ψ> normalized.
Vec sector_project(const Vec &psi, const PauliString &s, int eigenvalue);
/// Projection onto the eigenspace of a Hermitian unitary S with eigenvalue λ = ±1.
Mat sector_project(const Mat &rho, const Mat &s, int eigenvalue);
/// Projection onto basis states with a given diagonal charge.
Mat sector_project(const Mat &rho, const DiagonalCharge &q, int value);

}  // namespace holo

#endif
