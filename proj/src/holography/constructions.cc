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

#include "holo/holography/constructions.h"

#include <stdexcept>

namespace holo {

std::array<size_t, 4> Torus::star(long x, long y) const {
    return {xlink(x, y), xlink(x - 1, y), ylink(x, y), ylink(x, y - 1)};
}

std::array<size_t, 4> Torus::plaquette_edges(long x, long y) const {
    return {xlink(x, y), xlink(x, y + 1), ylink(x, y), ylink(x + 1, y)};
}

std::array<size_t, 4> Torus::plaquette_corners(long x, long y) const {
    return {vertex(x, y), vertex(x + 1, y), vertex(x, y + 1), vertex(x + 1, y + 1)};
}

std::array<size_t, 2> Torus::endpoints(size_t edge) const {
    size_t v = edge % (Lx * Ly);
    long x = (long)(v % Lx), y = (long)(v / Lx);
    if (edge < Lx * Ly) {
        return {vertex(x, y), vertex(x + 1, y)};
    }
    return {vertex(x, y), vertex(x, y + 1)};
}

size_t Torus::fermion_partner(size_t edge) const {
    size_t v = edge % (Lx * Ly);
    long x = (long)(v % Lx), y = (long)(v / Lx);
    if (edge < Lx * Ly) {
        return ylink(x + 1, y - 1);
    }
    return xlink(x, y);
}

namespace {

void check_sizes(size_t a, size_t b, const char *what) {
    if (a < 2 || b < 2) {
        throw std::invalid_argument(std::string(what) + ": lattice extents must be at least 2");
    }
}

std::string vertex_label(const std::string &name, const Torus &t, size_t v, long time = -1) {
    return site_label(name, {(long)(v % t.Lx), (long)(v / t.Lx)}, time);
}

std::string edge_label(const std::string &name, const Torus &t, size_t e, long time = -1) {
    size_t v = e % t.num_vertices();
    return vertex_label(name + (e < t.num_vertices() ? "x" : "y"), t, v, time);
}

PauliString letters_on(size_t n, char letter, const std::vector<size_t> &qs) {
    return PauliString::from_sites(n, letter, qs);
}

void add_ancilla(SequentialCircuit &c, const std::string &label, AncillaInit init, double prob) {
    size_t q = c.lattice.add(label);
    c.ancillas[q] = AncillaSpec{init, prob};
}

void check_prob(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("noise probability outside [0, 1]");
    }
}

void append_step(SequentialCircuit &c, const std::string &tag, const std::vector<CliffordGate> &gates) {
    for (auto &s : pack_gates(tag, gates)) {
        c.slices.push_back(std::move(s));
    }
}

}  // namespace

SequentialCircuit build_1d_channel_circuit(size_t L, size_t depth, double p_x, double p_z, LayerOrder order) {
    if (L < 2) {
        throw std::invalid_argument("ring needs L >= 2");
    }
    check_prob(p_x);
    check_prob(p_z);
    SequentialCircuit c;
    c.lattice = Lattice(Lattice::Kind::SquareCylinder, L, depth, 0);
    for (size_t s = 0; s < L; s++) {
        c.system_qubits.push_back(c.lattice.add(site_label("r", {(long)s})));
    }
    for (size_t k = 1; k <= depth; k++) {
        for (size_t s = 0; s < L; s++) {
            add_ancilla(c, site_label("g", {(long)s}, (long)k), AncillaInit::Plus, p_x);
        }
        for (size_t s = 0; s < L; s++) {
            add_ancilla(c, site_label("b", {(long)s}, (long)k), AncillaInit::Zero, p_z);
        }
    }
    size_t n = c.lattice.num_qubits();
    for (size_t k = 1; k <= depth; k++) {
        std::vector<CliffordGate> xs, zs;
        for (size_t s = 0; s < L; s++) {
            size_t g = c.lattice.id(site_label("g", {(long)s}, (long)k));
            xs.push_back(CliffordGate::controlled_pauli(g, ControlBasis::Z, letters_on(n, 'X', {c.system_qubits[s]})));
        }
        for (size_t s = 0; s < L; s++) {
            size_t b = c.lattice.id(site_label("b", {(long)s}, (long)k));
            zs.push_back(CliffordGate::controlled_pauli(
                b, ControlBasis::X, letters_on(n, 'Z', {c.system_qubits[s], c.system_qubits[(s + 1) % L]})));
        }
        std::string t = std::to_string(k);
        if (order == LayerOrder::XFirst) {
            append_step(c, "x@" + t, xs);
            append_step(c, "zz@" + t, zs);
        } else {
            append_step(c, "zz@" + t, zs);
            append_step(c, "x@" + t, xs);
        }
    }
    c.lattice.top = c.system_qubits;
    c.lattice.bottom = c.system_qubits;
    for (size_t q : c.system_qubits) {
        c.input_stabilizers.push_back(letters_on(n, 'X', {q}));
    }
    c.validate();
    return c;
}

SequentialCircuit build_2d_zero_form_circuit(size_t Lx, size_t Ly, size_t depth, double p_x, double p_z) {
    check_sizes(Lx, Ly, "2d 0-form circuit");
    check_prob(p_x);
    check_prob(p_z);
    Torus t{Lx, Ly};
    SequentialCircuit c;
    c.lattice = Lattice(Lattice::Kind::CubicSlab, Lx, Ly, depth);
    for (size_t v = 0; v < t.num_vertices(); v++) {
        c.system_qubits.push_back(c.lattice.add(vertex_label("r", t, v)));
    }
    for (size_t k = 1; k <= depth; k++) {
        for (size_t v = 0; v < t.num_vertices(); v++) {
            add_ancilla(c, vertex_label("g", t, v, (long)k), AncillaInit::Plus, p_x);
        }
        for (size_t e = 0; e < t.num_edges(); e++) {
            add_ancilla(c, edge_label("b", t, e, (long)k), AncillaInit::Zero, p_z);
        }
    }
    size_t n = c.lattice.num_qubits();
    for (size_t k = 1; k <= depth; k++) {
        std::vector<CliffordGate> xs, zs;
        for (size_t v = 0; v < t.num_vertices(); v++) {
            size_t g = c.lattice.id(vertex_label("g", t, v, (long)k));
            xs.push_back(CliffordGate::controlled_pauli(g, ControlBasis::Z, letters_on(n, 'X', {c.system_qubits[v]})));
        }
        for (size_t e = 0; e < t.num_edges(); e++) {
            size_t b = c.lattice.id(edge_label("b", t, e, (long)k));
            auto ends = t.endpoints(e);
            zs.push_back(CliffordGate::controlled_pauli(
                b, ControlBasis::X, letters_on(n, 'Z', {c.system_qubits[ends[0]], c.system_qubits[ends[1]]})));
        }
        append_step(c, "x@" + std::to_string(k), xs);
        append_step(c, "zz@" + std::to_string(k), zs);
    }
    c.lattice.top = c.system_qubits;
    c.lattice.bottom = c.system_qubits;
    for (size_t q : c.system_qubits) {
        c.input_stabilizers.push_back(letters_on(n, 'X', {q}));
    }
    c.validate();
    return c;
}

SequentialCircuit build_one_form_circuit(size_t Lx, size_t Ly, size_t depth, double p_x, double p_v) {
    check_sizes(Lx, Ly, "1-form circuit");
    check_prob(p_x);
    check_prob(p_v);
    Torus t{Lx, Ly};
    SequentialCircuit c;
    c.lattice = Lattice(Lattice::Kind::CubicSlab, Lx, Ly, depth);
    for (size_t e = 0; e < t.num_edges(); e++) {
        c.system_qubits.push_back(c.lattice.add(edge_label("r", t, e)));
    }
    for (size_t k = 1; k <= depth; k++) {
        for (size_t e = 0; e < t.num_edges(); e++) {
            add_ancilla(c, edge_label("b", t, e, (long)k), AncillaInit::Plus, p_x);
        }
        for (size_t v = 0; v < t.num_vertices(); v++) {
            add_ancilla(c, vertex_label("g", t, v, (long)k), AncillaInit::Zero, p_v);
        }
    }
    size_t n = c.lattice.num_qubits();
    auto red = [&](auto edges) {
        std::vector<size_t> qs;
        for (size_t e : edges) {
            qs.push_back(c.system_qubits[e]);
        }
        return qs;
    };
    for (size_t k = 1; k <= depth; k++) {
        std::vector<CliffordGate> xs, zs;
        for (size_t e = 0; e < t.num_edges(); e++) {
            size_t b = c.lattice.id(edge_label("b", t, e, (long)k));
            xs.push_back(CliffordGate::controlled_pauli(b, ControlBasis::Z, letters_on(n, 'X', {c.system_qubits[e]})));
        }
        for (size_t v = 0; v < t.num_vertices(); v++) {
            size_t g = c.lattice.id(vertex_label("g", t, v, (long)k));
            long x = (long)(v % Lx), y = (long)(v / Lx);
            zs.push_back(CliffordGate::controlled_pauli(g, ControlBasis::X, letters_on(n, 'Z', red(t.star(x, y)))));
        }
        append_step(c, "x@" + std::to_string(k), xs);
        append_step(c, "av@" + std::to_string(k), zs);
    }
    c.lattice.top = c.system_qubits;
    c.lattice.bottom = c.system_qubits;
    for (size_t q : c.system_qubits) {
        c.input_stabilizers.push_back(letters_on(n, 'X', {q}));
    }
    c.validate();
    return c;
}

SequentialCircuit build_subsystem_circuit(size_t Lx, size_t Ly, size_t depth, double p_x, double p_z) {
    check_sizes(Lx, Ly, "subsystem circuit");
    check_prob(p_x);
    check_prob(p_z);
    Torus t{Lx, Ly};
    SequentialCircuit c;
    c.lattice = Lattice(Lattice::Kind::CubicSlab, Lx, Ly, depth);
    for (size_t v = 0; v < t.num_vertices(); v++) {
        c.system_qubits.push_back(c.lattice.add(vertex_label("r", t, v)));
    }
    for (size_t k = 1; k <= depth; k++) {
        for (size_t v = 0; v < t.num_vertices(); v++) {
            add_ancilla(c, vertex_label("g", t, v, (long)k), AncillaInit::Plus, p_x);
        }
        for (size_t v = 0; v < t.num_vertices(); v++) {
            add_ancilla(c, vertex_label("q", t, v, (long)k), AncillaInit::Zero, p_z);
        }
    }
    size_t n = c.lattice.num_qubits();
    for (size_t k = 1; k <= depth; k++) {
        std::vector<CliffordGate> xs, zs;
        for (size_t v = 0; v < t.num_vertices(); v++) {
            size_t g = c.lattice.id(vertex_label("g", t, v, (long)k));
            xs.push_back(CliffordGate::controlled_pauli(g, ControlBasis::Z, letters_on(n, 'X', {c.system_qubits[v]})));
        }
        for (size_t v = 0; v < t.num_vertices(); v++) {
            size_t q = c.lattice.id(vertex_label("q", t, v, (long)k));
            std::vector<size_t> corners;
            for (size_t u : t.plaquette_corners((long)(v % Lx), (long)(v / Lx))) {
                corners.push_back(c.system_qubits[u]);
            }
            zs.push_back(CliffordGate::controlled_pauli(q, ControlBasis::X, letters_on(n, 'Z', corners)));
        }
        append_step(c, "x@" + std::to_string(k), xs);
        append_step(c, "zp@" + std::to_string(k), zs);
    }
    c.lattice.top = c.system_qubits;
    c.lattice.bottom = c.system_qubits;
    for (size_t q : c.system_qubits) {
        c.input_stabilizers.push_back(letters_on(n, 'X', {q}));
    }
    c.validate();
    return c;
}

SequentialCircuit build_fermionic_circuit(size_t Lx, size_t Ly, size_t depth, double p_l, double p_v) {
    check_sizes(Lx, Ly, "fermionic circuit");
    check_prob(p_l);
    check_prob(p_v);
    Torus t{Lx, Ly};
    SequentialCircuit c;
    c.lattice = Lattice(Lattice::Kind::CubicSlab, Lx, Ly, depth);
    for (size_t e = 0; e < t.num_edges(); e++) {
        c.system_qubits.push_back(c.lattice.add(edge_label("r", t, e)));
    }
    for (size_t k = 1; k <= depth; k++) {
        for (size_t e = 0; e < t.num_edges(); e++) {
            add_ancilla(c, edge_label("b", t, e, (long)k), AncillaInit::Plus, 1 - p_l);
        }
        for (size_t v = 0; v < t.num_vertices(); v++) {
            add_ancilla(c, vertex_label("g", t, v, (long)k), AncillaInit::Zero, 1 - p_v);
        }
    }
    size_t n = c.lattice.num_qubits();
    auto red = [&](auto edges) {
        std::vector<size_t> qs;
        for (size_t e : edges) {
            qs.push_back(c.system_qubits[e]);
        }
        return qs;
    };
    for (size_t k = 1; k <= depth; k++) {
        std::vector<CliffordGate> xs, ys, zs;
        for (size_t e = 0; e < t.num_edges(); e++) {
            size_t b = c.lattice.id(edge_label("b", t, e, (long)k));
            PauliString target = letters_on(n, 'X', {c.system_qubits[e]});
            target *= letters_on(n, 'Z', {c.system_qubits[t.fermion_partner(e)]});
            (e < t.num_vertices() ? xs : ys).push_back(CliffordGate::controlled_pauli(b, ControlBasis::Z, target));
        }
        for (size_t v = 0; v < t.num_vertices(); v++) {
            size_t g = c.lattice.id(vertex_label("g", t, v, (long)k));
            long x = (long)(v % Lx), y = (long)(v / Lx);
            zs.push_back(CliffordGate::controlled_pauli(g, ControlBasis::X, letters_on(n, 'Z', red(t.star(x, y)))));
        }
        append_step(c, "ux@" + std::to_string(k), xs);
        append_step(c, "uy@" + std::to_string(k), ys);
        append_step(c, "av@" + std::to_string(k), zs);
    }
    c.lattice.top = c.system_qubits;
    c.lattice.bottom = c.system_qubits;
    for (size_t v = 0; v < t.num_vertices(); v++) {
        long x = (long)(v % Lx), y = (long)(v / Lx);
        c.input_stabilizers.push_back(letters_on(n, 'Z', red(t.star(x, y))));
        c.input_stabilizers.push_back(letters_on(n, 'X', red(t.plaquette_edges(x, y))));
    }
    std::vector<size_t> row, col;
    for (size_t x = 0; x < Lx; x++) {
        row.push_back(c.system_qubits[t.ylink((long)x, 0)]);
    }
    for (size_t y = 0; y < Ly; y++) {
        col.push_back(c.system_qubits[t.xlink(0, (long)y)]);
    }
    c.input_stabilizers.push_back(letters_on(n, 'Z', row));
    c.input_stabilizers.push_back(letters_on(n, 'Z', col));
    c.validate();
    return c;
}

}  // namespace holo
