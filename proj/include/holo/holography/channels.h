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

#ifndef HOLO_HOLOGRAPHY_CHANNELS_H
#define HOLO_HOLOGRAPHY_CHANNELS_H

#include "holo/dense/kraus_channel.h"

namespace holo {

/// Ring of L qubits: every E^x_i, then every E^z_{i,i+1}, with
/// E^x(rho) = (1-p_x) rho + p_x X rho X and E^z likewise for Z_i Z_{i+1}.
KrausChannel ising_channel(size_t L, double p_x, double p_z);

/// Lx x Ly torus: X noise on sites, then ZZ noise on every nearest-neighbour bond.
KrausChannel zero_form_2d_channel(size_t Lx, size_t Ly, double p_x, double p_z);

/// Torus edges (x-links then y-links): X noise on edges, then A_v = Z^4 noise on vertices.
KrausChannel one_form_channel(size_t Lx, size_t Ly, double p_x, double p_v);

/// Lx x Ly torus sites: X noise on sites, then Z^4 noise on plaquette corners.
KrausChannel subsystem_channel(size_t Lx, size_t Ly, double p_x, double p_z);

/// Torus edges: X_l Z_{l'} fires with probability 1-p_l (x-links, then y-links),
/// then A_v fires with probability 1-p_v.
KrausChannel fermionic_channel(size_t Lx, size_t Ly, double p_l, double p_v);

/// Open chain of L Majorana pairs mapped to qubits: bond terms i eta'_i eta_{i+1}
/// become X_i X_{i+1} dephasing with probability p_a; parity terms P_i become
/// Z_i dephasing with probability p_b.
KrausChannel jordan_wigner_channel(size_t L, double p_a, double p_b);

/// Jordan-Wigner images on L qubits: eta_i = (prod_{j<i} Z_j) X_i,
/// eta'_i = (prod_{j<i} Z_j) Y_i, and P_i = -i eta_i eta'_i.
PauliString majorana_eta(size_t L, size_t i);
PauliString majorana_eta_prime(size_t L, size_t i);
PauliString parity_image(size_t L, size_t i);

}  // namespace holo

#endif
