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

#include "holo/holography/channels.h"

#include <stdexcept>

#include "holo/holography/constructions.h"

namespace holo {

namespace {

PauliString on(size_t n, char letter, const std::vector<size_t> &qs) { return PauliString::from_sites(n, letter, qs); }

std::vector<size_t> as_vec(const std::array<size_t, 4> &a) { return {a.begin(), a.end()}; }

void check_torus(size_t Lx, size_t Ly) {
    if (Lx < 2 || Ly < 2) {
        throw std::invalid_argument("torus extents must be at least 2");
    }
}

}  // namespace

KrausChannel ising_channel(size_t L, double p_x, double p_z) {
    if (L < 2) {
        throw std::invalid_argument("ring needs L >= 2");
    }
    KrausChannel c(L, "ising");
    for (size_t i = 0; i < L; i++) {
        c.add_pauli_noise(on(L, 'X', {i}), p_x);
    }
    for (size_t i = 0; i < L; i++) {
        c.add_pauli_noise(on(L, 'Z', {i, (i + 1) % L}), p_z);
    }
    return c;
}

KrausChannel zero_form_2d_channel(size_t Lx, size_t Ly, double p_x, double p_z) {
    check_torus(Lx, Ly);
    Torus t{Lx, Ly};
    size_t n = t.num_vertices();
    KrausChannel c(n, "zero_form_2d");
    for (size_t v = 0; v < n; v++) {
        c.add_pauli_noise(on(n, 'X', {v}), p_x);
    }
    for (size_t e = 0; e < t.num_edges(); e++) {
        auto ends = t.endpoints(e);
        c.add_pauli_noise(on(n, 'Z', {ends[0], ends[1]}), p_z);
    }
    return c;
}

KrausChannel one_form_channel(size_t Lx, size_t Ly, double p_x, double p_v) {
    check_torus(Lx, Ly);
    Torus t{Lx, Ly};
    size_t n = t.num_edges();
    KrausChannel c(n, "one_form");
    for (size_t e = 0; e < n; e++) {
        c.add_pauli_noise(on(n, 'X', {e}), p_x);
    }
    for (size_t v = 0; v < t.num_vertices(); v++) {
        c.add_pauli_noise(on(n, 'Z', as_vec(t.star((long)(v % Lx), (long)(v / Lx)))), p_v);
    }
    return c;
}

KrausChannel subsystem_channel(size_t Lx, size_t Ly, double p_x, double p_z) {
    check_torus(Lx, Ly);
    Torus t{Lx, Ly};
    size_t n = t.num_vertices();
    KrausChannel c(n, "subsystem");
    for (size_t v = 0; v < n; v++) {
        c.add_pauli_noise(on(n, 'X', {v}), p_x);
    }
    for (size_t v = 0; v < n; v++) {
        c.add_pauli_noise(on(n, 'Z', as_vec(t.plaquette_corners((long)(v % Lx), (long)(v / Lx)))), p_z);
    }
    return c;
}

KrausChannel fermionic_channel(size_t Lx, size_t Ly, double p_l, double p_v) {
    check_torus(Lx, Ly);
    Torus t{Lx, Ly};
    size_t n = t.num_edges();
    KrausChannel c(n, "fermionic");
    for (size_t e = 0; e < n; e++) {
        c.add_pauli_noise(on(n, 'X', {e}) * on(n, 'Z', {t.fermion_partner(e)}), 1 - p_l);
    }
    for (size_t v = 0; v < t.num_vertices(); v++) {
        c.add_pauli_noise(on(n, 'Z', as_vec(t.star((long)(v % Lx), (long)(v / Lx)))), 1 - p_v);
    }
    return c;
}

PauliString majorana_eta(size_t L, size_t i) {
    PauliString p(L);
    for (size_t j = 0; j < i; j++) {
        p.set_letter(j, 'Z');
    }
    p.set_letter(i, 'X');
    return p;
}

PauliString majorana_eta_prime(size_t L, size_t i) {
    PauliString p(L);
    for (size_t j = 0; j < i; j++) {
        p.set_letter(j, 'Z');
    }
    p.set_letter(i, 'Y');
    return p;
}

PauliString parity_image(size_t L, size_t i) {
    PauliString p = majorana_eta(L, i) * majorana_eta_prime(L, i);
    p.set_phase((uint8_t)(p.phase() + 3));
    return p;
}

KrausChannel jordan_wigner_channel(size_t L, double p_a, double p_b) {
    if (L < 2) {
        throw std::invalid_argument("chain needs L >= 2");
    }
    KrausChannel c(L, "jordan_wigner");
    for (size_t i = 0; i + 1 < L; i++) {
        PauliString bond = majorana_eta_prime(L, i) * majorana_eta(L, i + 1);
        bond.set_phase((uint8_t)(bond.phase() + 1));
        c.add_pauli_noise(bond, p_a);
    }
    for (size_t i = 0; i < L; i++) {
        c.add_pauli_noise(parity_image(L, i), p_b);
    }
    return c;
}

}  // namespace holo
