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

#include "holo/holography/circuit_sim.h"

#include <gtest/gtest.h>

#include <random>

#include "holo/dense/dense_operator.h"
#include "holo/holography/channels.h"
#include "holo/holography/constructions.h"

using namespace holo;

namespace {

Mat dephase(const Mat &rho, const std::string &letters, double p) {
    Mat m = pauli_matrix(PauliString::from_str(letters));
    return (1 - p) * rho + p * m * rho * m.adjoint();
}

std::string on(size_t n, std::initializer_list<std::pair<size_t, char>> sites) {
    std::string s(n, 'I');
    for (auto [q, c] : sites) {
        s[q] = c;
    }
    return s;
}

// One step of the ring channel written out term by term: X layer, then ZZ layer.
Mat ring_step(const Mat &rho, size_t L, double px, double pz) {
    Mat r = rho;
    for (size_t s = 0; s < L; s++) {
        r = dephase(r, on(L, {{s, 'X'}}), px);
    }
    for (size_t s = 0; s < L; s++) {
        r = dephase(r, on(L, {{s, 'Z'}, {(s + 1) % L, 'Z'}}), pz);
    }
    return r;
}

Vec random_state(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> nd;
    Vec v((Eigen::Index)1 << n);
    for (Eigen::Index i = 0; i < v.size(); i++) {
        v(i) = cd(nd(rng), nd(rng));
    }
    return v.normalized();
}

}  // namespace

TEST(circuit_sim, gate_unitaries) {
    CliffordGate cx = CliffordGate::controlled_pauli(0, ControlBasis::Z, PauliString::from_str("IX"));
    Mat u = gate_unitary(cx);
    Mat want = Mat::Zero(4, 4);
    // Local bit 0 is the control: |c t> index c + 2t.
    want(0, 0) = want(2, 2) = 1;
    want(3, 1) = want(1, 3) = 1;
    EXPECT_LT((u - want).cwiseAbs().maxCoeff(), 1e-15);
    Mat h = gate_unitary(CliffordGate::hadamard(1, 0));
    EXPECT_NEAR(h(1, 1).real(), -std::sqrt(0.5), 1e-15);
}

TEST(circuit_sim, ancilla_states) {
    Vec z = ancilla_state(AncillaSpec{AncillaInit::Plus, 0.2});
    EXPECT_NEAR(z(0).real(), std::sqrt(0.8), 1e-15);
    EXPECT_NEAR(z(1).real(), std::sqrt(0.2), 1e-15);
    Vec x = ancilla_state(AncillaSpec{AncillaInit::Zero, 0.2});
    // sqrt(0.8)|+> + sqrt(0.2)|->
    EXPECT_NEAR(x(0).real(), (std::sqrt(0.8) + std::sqrt(0.2)) / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(x(1).real(), (std::sqrt(0.8) - std::sqrt(0.2)) / std::sqrt(2.0), 1e-15);
}

TEST(circuit_sim, zero_depth_is_identity) {
    std::mt19937_64 rng(1);
    SequentialCircuit c = build_1d_channel_circuit(3, 0, 0.3, 0.3);
    Vec psi = random_state(3, rng);
    Mat rho = pure_density(psi);
    EXPECT_LT((simulate_circuit_pure(c, psi) - rho).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((simulate_circuit_dilated(c, rho) - rho).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(circuit_sim, ring_circuit_reproduces_channel) {
    std::mt19937_64 rng(2);
    size_t L = 3;
    double px = 0.2, pz = 0.35;
    SequentialCircuit c = build_1d_channel_circuit(L, 2, px, pz);
    Vec psi = random_state(L, rng);
    Mat want = ring_step(ring_step(pure_density(psi), L, px, pz), L, px, pz);
    EXPECT_LT((simulate_circuit_pure(c, psi) - want).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((simulate_circuit_dilated(c, pure_density(psi)) - want).cwiseAbs().maxCoeff(), 1e-13);
    KrausChannel ch = ising_channel(L, px, pz);
    EXPECT_LT((apply_channel(ch, apply_channel(ch, pure_density(psi))) - want).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(circuit_sim, zero_form_circuit_reproduces_channel) {
    std::mt19937_64 rng(4);
    double px = 0.15, pz = 0.4;
    SequentialCircuit c = build_2d_zero_form_circuit(2, 2, 1, px, pz);
    Vec psi = random_state(4, rng);
    Mat want = apply_channel(zero_form_2d_channel(2, 2, px, pz), pure_density(psi));
    EXPECT_LT((simulate_circuit_dilated(c, pure_density(psi)) - want).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(circuit_sim, one_form_and_subsystem_circuits_reproduce_channels) {
    std::mt19937_64 rng(6);
    {
        SequentialCircuit c = build_one_form_circuit(2, 2, 1, 0.3, 0.1);
        Mat rho = pure_density(random_state(8, rng));
        Mat want = apply_channel(one_form_channel(2, 2, 0.3, 0.1), rho);
        EXPECT_LT((simulate_circuit_dilated(c, rho) - want).cwiseAbs().maxCoeff(), 1e-13);
    }
    {
        SequentialCircuit c = build_subsystem_circuit(2, 2, 1, 0.25, 0.45);
        Mat rho = pure_density(random_state(4, rng));
        Mat want = apply_channel(subsystem_channel(2, 2, 0.25, 0.45), rho);
        EXPECT_LT((simulate_circuit_dilated(c, rho) - want).cwiseAbs().maxCoeff(), 1e-13);
    }
    {
        SequentialCircuit c = build_fermionic_circuit(2, 2, 1, 0.3, 0.2);
        Mat rho = pure_density(random_state(8, rng));
        Mat want = apply_channel(fermionic_channel(2, 2, 0.3, 0.2), rho);
        EXPECT_LT((simulate_circuit_dilated(c, rho) - want).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(circuit_sim, register_limit) {
    SequentialCircuit c = build_1d_channel_circuit(4, 3, 0.5, 0.5);
    EXPECT_GT(c.num_qubits(), kMaxPureQubits);
    EXPECT_THROW(simulate_circuit_pure(c, product_state("++++")), std::length_error);
}
