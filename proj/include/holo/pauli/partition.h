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

#ifndef HOLO_PAULI_PARTITION_H
#define HOLO_PAULI_PARTITION_H

#include <cstddef>
#include <string>
#include <vector>

namespace holo {

enum class Region : unsigned char { A, B, C };

/// Tripartition of a register into A, B, C for conditional mutual information.
struct Partition {
    std::vector<Region> assignment;
    /// Human-readable layout, e.g. "ring A3 B2 C3 B2 @0".
    std::string layout;

    size_t num_qubits() const { return assignment.size(); }
    std::vector<size_t> sites(Region r) const;
    std::vector<size_t> sites(Region r1, Region r2) const;
    std::vector<size_t> all_sites() const;
    /// Throws unless A and C are nonempty.
    void validate() const;
    /// Same partition with the roles of A and C exchanged.
    Partition swapped() const;

    /// Ring of L sites cut into consecutive arcs A(a) B(b1) C(c) B(b2), rotated by `offset`.
    static Partition ring(size_t L, size_t a, size_t b1, size_t c, size_t b2, size_t offset = 0);
    static Partition from_sets(
        size_t n, const std::vector<size_t> &a, const std::vector<size_t> &b, const std::vector<size_t> &c);
};

}  // namespace holo

#endif
