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

#ifndef HOLO_HOLOGRAPHY_OVERLAP_H
#define HOLO_HOLOGRAPHY_OVERLAP_H

#include <cstddef>

namespace holo {

struct OverlapResult {
    /// <Psi|Psi> / prod cosh(2g), i.e. <TC| prod_x (1 + t_z X) prod_y (1 + t_x Z) |TC>.
    double overlap = 1;
    double deviation = 0;
    size_t num_qubits = 0;
};

/// Largest register for the dense overlap.
constexpr size_t kMaxOverlapQubits = 24;

/// Toric code on an Lx (periodic) by Ly (open) cylinder with qubits on links,
/// Lx*Ly x-links and Lx*(Ly-1) y-links, prepared from |0...0> by projecting every
/// star X to +1. x-links carry the e^{g_z X} deformation, y-links e^{g_x Z}.
/// Throws std::length_error above kMaxOverlapQubits.
OverlapResult overlap_check(double g_x, double g_z, size_t Lx, size_t Ly);

}  // namespace holo

#endif
