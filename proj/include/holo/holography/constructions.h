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

#ifndef HOLO_HOLOGRAPHY_CONSTRUCTIONS_H
#define HOLO_HOLOGRAPHY_CONSTRUCTIONS_H

#include <array>
#include <vector>

#include "holo/holography/circuit.h"

namespace holo {

/// Which noise layer comes first inside one step of the repeated channel.
/// XFirst realises E = prod E^z prod E^x (the X layer acts first).
enum class LayerOrder : unsigned char { XFirst, ZFirst };

/// 1d ring of L red qubits. Step k: green y-link ancillas g(s|k) in |+> with a
/// Z-controlled X_s, then blue x-link ancillas b(s|k) in |0> with an
/// X-controlled Z_s Z_{s+1}. Input |+...+>.
SequentialCircuit build_1d_channel_circuit(
    size_t L, size_t depth, double p_x, double p_z, LayerOrder order = LayerOrder::XFirst);

/// 2d torus of red sites r(x,y). Green z-links g(x,y|k) in |+> (CNOT onto the
/// site); blue in-plane links bx/by(x,y|k) in |0> (X-controlled ZZ). Input |+>.
SequentialCircuit build_2d_zero_form_circuit(size_t Lx, size_t Ly, size_t depth, double p_x, double p_z);

/// Red qubits on torus edges rx/ry(x,y). Blue bx/by(x,y|k) in |+> with a CNOT
/// onto the matching edge; green g(x,y|k) in |0> with an X-controlled A_v = Z^4.
/// Input |+> on every edge (so B_p = +1).
SequentialCircuit build_one_form_circuit(size_t Lx, size_t Ly, size_t depth, double p_x, double p_v);

/// Red sites r(x,y); green g(x,y|k) in |+> with CNOT; plaquette ancillas
/// q(x,y|k) in |0> with an X-controlled Z on the four corners. Input |+>.
SequentialCircuit build_subsystem_circuit(size_t Lx, size_t Ly, size_t depth, double p_x, double p_z);

/// Red qubits on torus edges. Blue link ancillas in |+> with a Z-controlled
/// X_l Z_{l'} (all x-links, then all y-links); green vertex ancillas in |0>
/// with an X-controlled A_v. The noise terms fire with probability 1-p_l and
/// 1-p_v. The input carries every A_v and B_p.
SequentialCircuit build_fermionic_circuit(size_t Lx, size_t Ly, size_t depth, double p_l, double p_v);

/// Torus geometry shared by the 2d constructions: vertices (x,y), x-links
/// (x,y)->(x+1,y), y-links (x,y)->(x,y+1), plaquettes with lower-left corner (x,y).
struct Torus {
    size_t Lx, Ly;
    size_t vertex(long x, long y) const { return wrap(x, Lx) + Lx * wrap(y, Ly); }
    /// Edge index: x-links 0..V-1, y-links V..2V-1.
    size_t xlink(long x, long y) const { return vertex(x, y); }
    size_t ylink(long x, long y) const { return Lx * Ly + vertex(x, y); }
    size_t num_vertices() const { return Lx * Ly; }
    size_t num_edges() const { return 2 * Lx * Ly; }
    std::array<size_t, 4> star(long x, long y) const;
    std::array<size_t, 4> plaquette_edges(long x, long y) const;
    std::array<size_t, 4> plaquette_corners(long x, long y) const;
    std::array<size_t, 2> endpoints(size_t edge) const;
    /// l' = l + x/2 - y/2 for the fermionic hopping term.
    size_t fermion_partner(size_t edge) const;
    /// Plaquette attached to vertex (x,y) in the fermionic symmetry A_v B_p(v).
    std::array<long, 2> fermion_plaquette(long x, long y) const { return {x, y - 1}; }
};

}  // namespace holo

#endif
