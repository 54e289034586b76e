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

#include "holo/holography/stabilizer_flow.h"

#include <stdexcept>

#include "holo/pauli/gf2.h"

namespace holo {

PauliString push_through(const SequentialCircuit &c, PauliString p) {
    for (const auto &s : c.slices) {
        for (const auto &g : s.gates) {
            p = conjugate(g, p);
        }
    }
    return p;
}

std::vector<PauliString> initial_stabilizers(const SequentialCircuit &c) {
    size_t n = c.num_qubits();
    std::vector<PauliString> out;
    for (const auto &[q, spec] : c.ancillas) {
        out.push_back(PauliString::from_sites(n, spec.init == AncillaInit::Zero ? 'Z' : 'X', {q}));
    }
    for (const auto &p : c.input_stabilizers) {
        out.push_back(p);
    }
    return out;
}

StabilizerGroup evolve_initial_stabilizers(const SequentialCircuit &c) {
    for (const auto &[q, spec] : c.ancillas) {
        if (spec.apply_prob != 0.5) {
            throw std::domain_error("ancilla " + c.lattice.label(q) + " is deformed; output is not a stabilizer state");
        }
    }
    size_t n = c.num_qubits();
    StabilizerGroup start = StabilizerGroup::from_redundant(n, initial_stabilizers(c));
    std::vector<PauliString> gens;
    for (const auto &p : start.generators()) {
        gens.push_back(push_through(c, p));
    }
    return StabilizerGroup(n, std::move(gens));
}

namespace {

BitVec unit_tags(size_t count, size_t k) {
    BitVec t(count);
    t.set(k, true);
    return t;
}

PauliString product_of(const std::vector<PauliString> &gens, const BitVec &tags, size_t n) {
    PauliString p(n);
    for (size_t k = 0; k < gens.size(); k++) {
        if (tags.get(k)) {
            p *= gens[k];
        }
    }
    return p;
}

}  // namespace

std::optional<PauliString> element_with_restriction(const StabilizerGroup &g,
                                                    const std::vector<size_t> &region,
                                                    const PauliString &target) {
    const auto &gens = g.generators();
    Gf2Basis basis(2 * region.size(), gens.size());
    for (size_t k = 0; k < gens.size(); k++) {
        basis.insert(symplectic_restricted(gens[k], region), unit_tags(gens.size(), k));
    }
    auto [residual, tags] = basis.reduce(symplectic_restricted(target, region));
    if (residual.any()) {
        return std::nullopt;
    }
    return product_of(gens, tags, g.num_qubits());
}

BoundaryStructure extract_boundary_structure(const StabilizerGroup &g,
                                             const Lattice &lattice,
                                             const std::vector<std::pair<size_t, size_t>> &endpoints) {
    const auto &gens = g.generators();
    size_t n = g.num_qubits();
    const auto &top = lattice.top;
    BoundaryStructure out;
    Gf2Basis basis(2 * top.size(), gens.size());
    for (size_t k = 0; k < gens.size(); k++) {
        BitVec row = symplectic_restricted(gens[k], top);
        auto [residual, tags] = basis.reduce(row);
        if (residual.any()) {
            basis.insert(row, unit_tags(gens.size(), k));
            out.top_boundary_generators.push_back(gens[k]);
        } else {
            out.bulk_generators.push_back(gens[k] * product_of(gens, tags, n));
        }
    }
    for (auto [i, j] : endpoints) {
        PauliString target = PauliString::from_sites(n, 'Z', {i, j});
        auto s = element_with_restriction(g, top, target);
        if (!s) {
            throw std::invalid_argument("no string in the group ends on " + lattice.label(i) + " and " +
                                        lattice.label(j));
        }
        out.string_generators.push_back(*s);
    }
    return out;
}

}  // namespace holo
