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

#include <gtest/gtest.h>

#include <cmath>

#include "holo/holography/appendix.h"
#include "holo/holography/circuit.h"
#include "holo/holography/constructions.h"
#include "holo/holography/deformation.h"
#include "holo/holography/lattice.h"
#include "holo/holography/stabilizer_flow.h"
#include "holo/pauli/stabilizer_group.h"

using namespace holo;

TEST(holography, lattice_labels) {
    Lattice lat(Lattice::Kind::SquareCylinder, 2, 2, 1);
    EXPECT_EQ(lat.add(site_label("r", {0, 1})), 0u);
    EXPECT_EQ(lat.add(site_label("g", {1, 0}, 3)), 1u);
    EXPECT_EQ(lat.label(1), "g(1,0|3)");
    EXPECT_THROW(lat.add("r(0,1)"), std::invalid_argument);
    EXPECT_THROW(lat.id("nope"), std::out_of_range);
    EXPECT_EQ(lat.select("g("), std::vector<size_t>{1});
    EXPECT_EQ(Lattice::kind_from_name(lat.kind_name()), Lattice::Kind::SquareCylinder);
    EXPECT_EQ(wrap(-1, 4), 3u);
    EXPECT_EQ(wrap(9, 4), 1u);
}

TEST(holography, noise_to_deformation) {
    EXPECT_NEAR(noise_to_deformation(0.2).g, 0.693147, 1e-6);
    EXPECT_NEAR(noise_to_deformation(0.5).g, 0, 1e-15);
    EXPECT_TRUE(std::isinf(noise_to_deformation(0).g));
    EXPECT_GT(noise_to_deformation(0).g, 0);
    EXPECT_LT(noise_to_deformation(1).g, 0);
    EXPECT_THROW(noise_to_deformation(1.5), std::domain_error);
    for (double p : {0.05, 0.2, 0.35, 0.5, 0.8}) {
        // e^{2g} = r = (1-p)/p, so tanh(2g) = (r^2 - 1) / (r^2 + 1).
        double r = (1 - p) / p;
        EXPECT_NEAR(loop_weight(noise_to_deformation(p)), (r * r - 1) / (r * r + 1), 1e-14);
    }
}

TEST(holography, torus_geometry) {
    Torus t{3, 3};
    EXPECT_EQ(t.num_edges(), 18u);
    auto s = t.star(0, 0);
    EXPECT_EQ(s[1], t.xlink(2, 0));
    EXPECT_EQ(s[3], t.ylink(0, 2));
    // Every edge lies in exactly two stars and two plaquettes.
    std::vector<int> in_star(18), in_plaq(18);
    for (long x = 0; x < 3; x++) {
        for (long y = 0; y < 3; y++) {
            for (size_t e : t.star(x, y)) {
                in_star[e]++;
            }
            for (size_t e : t.plaquette_edges(x, y)) {
                in_plaq[e]++;
            }
        }
    }
    for (size_t e = 0; e < 18; e++) {
        EXPECT_EQ(in_star[e], 2);
        EXPECT_EQ(in_plaq[e], 2);
        auto ends = t.endpoints(e);
        EXPECT_NE(ends[0], ends[1]);
    }
}

TEST(holography, circuit_text_round_trip) {
    SequentialCircuit c = build_1d_channel_circuit(3, 2, 0.3, 0.2);
    c.validate();
    SequentialCircuit d = SequentialCircuit::from_text(c.to_text());
    EXPECT_EQ(d.to_text(), c.to_text());
    EXPECT_EQ(d.num_qubits(), c.num_qubits());
    EXPECT_EQ(d.slices.size(), c.slices.size());
    EXPECT_DOUBLE_EQ(d.ancillas.at(d.lattice.id("g(0|1)")).apply_prob, 0.3);
    EXPECT_THROW(SequentialCircuit::from_text("holochannel-circuit 9\n"), std::invalid_argument);
}

TEST(holography, validation_catches_reused_ancilla) {
    SequentialCircuit c = build_1d_channel_circuit(3, 1, 0.5, 0.5);
    c.slices.push_back(c.slices.front());
    EXPECT_THROW(c.validate(), std::logic_error);
}

TEST(holography, pack_gates_preserves_the_product) {
    size_t n = 5;
    std::vector<CliffordGate> gates = {
        CliffordGate::controlled_pauli(0, ControlBasis::Z, PauliString::from_str("IXIII")),
        CliffordGate::controlled_pauli(2, ControlBasis::X, PauliString::from_str("IZIZI")),
        CliffordGate::hadamard(n, 4),
        CliffordGate::controlled_pauli(4, ControlBasis::Z, PauliString::from_str("YIIII")),
    };
    auto slices = pack_gates("t", gates);
    EXPECT_EQ(slices.size(), 2u);
    for (const char *s : {"XIIII", "IZIII", "ZZZZZ", "IIYIX"}) {
        PauliString a = PauliString::from_str(s), b = a;
        for (const auto &g : gates) {
            a = conjugate(g, a);
        }
        for (const auto &sl : slices) {
            for (const auto &g : sl.gates) {
                b = conjugate(g, b);
            }
        }
        EXPECT_EQ(a, b) << s;
    }
}

TEST(holography, ring_boundary_is_cat_mixture) {
    size_t L = 4;
    SequentialCircuit c = build_1d_channel_circuit(L, 4, 0.5, 0.5);
    StabilizerGroup g = evolve_initial_stabilizers(c);
    EXPECT_EQ(g.rank(), c.num_qubits());
    const auto &top = c.lattice.top;
    // Only prod X survives on the top row: S(top) = L - 1.
    EXPECT_EQ(g.subgroup_dim_inside(top), 1u);
    EXPECT_DOUBLE_EQ(stabilizer_entropy(g, top), (double)L - 1);
    EXPECT_TRUE(g.contains(PauliString::from_sites(c.num_qubits(), 'X', top)));
}

TEST(holography, deformed_circuit_is_not_stabilizer) {
    SequentialCircuit c = build_1d_channel_circuit(3, 1, 0.3, 0.5);
    EXPECT_THROW(evolve_initial_stabilizers(c), std::domain_error);
}

TEST(holography, boundary_strings) {
    SequentialCircuit c = build_1d_channel_circuit(4, 3, 0.5, 0.5);
    StabilizerGroup g = evolve_initial_stabilizers(c);
    const auto &top = c.lattice.top;
    BoundaryStructure b = extract_boundary_structure(g, c.lattice, {{top[0], top[2]}});
    ASSERT_EQ(b.string_generators.size(), 1u);
    PauliString r = b.string_generators[0].restricted(top);
    EXPECT_EQ(r.str(), "+ZIZI");
    EXPECT_TRUE(g.contains_up_to_sign(b.string_generators[0]));
}

TEST(holography, all_constructions_verify) {
    for (const auto &rep : verify_constructions("all")) {
        EXPECT_TRUE(rep.all_passed()) << rep.transcript();
        EXPECT_GT(rep.checks.size(), 10u) << rep.construction;
    }
    EXPECT_THROW(verify_constructions("hexagonal"), std::invalid_argument);
}
