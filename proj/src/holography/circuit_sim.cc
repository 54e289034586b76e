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

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "holo/dense/dense_operator.h"

namespace holo {

namespace {

Mat control_projector(ControlBasis basis, int value) {
    Mat p(2, 2);
    if (basis == ControlBasis::Z) {
        p << (value == 0 ? 1 : 0), 0, 0, (value == 0 ? 0 : 1);
    } else {
        double s = value == 0 ? 0.5 : -0.5;
        p << 0.5, s, s, 0.5;
    }
    return p;
}

std::vector<size_t> system_positions(const SequentialCircuit &c) {
    std::vector<size_t> pos(c.num_qubits(), SIZE_MAX);
    for (size_t j = 0; j < c.system_qubits.size(); j++) {
        pos[c.system_qubits[j]] = j;
    }
    return pos;
}

}  // namespace

Mat gate_unitary(const CliffordGate &g) {
    if (g.kind == CliffordGate::Kind::Hadamard) {
        Mat h(2, 2);
        h << 1, 1, 1, -1;
        return h / std::sqrt(2.0);
    }
    auto support = g.target.support();
    PauliString local = g.target.restricted(support);
    Mat p = pauli_matrix(local) * (double)g.target.sign();
    Mat id = Mat::Identity(p.rows(), p.cols());
    return Eigen::kroneckerProduct(id, control_projector(g.basis, 0)).eval() +
           Eigen::kroneckerProduct(p, control_projector(g.basis, 1)).eval();
}

Vec ancilla_state(const AncillaSpec &a) {
    double c0 = std::sqrt(1 - a.apply_prob), c1 = std::sqrt(a.apply_prob);
    Vec v(2);
    if (a.init == AncillaInit::Plus) {
        v << c0, c1;
    } else {
        double r = 1 / std::sqrt(2.0);
        v << r * (c0 + c1), r * (c0 - c1);
    }
    return v;
}

Mat simulate_circuit_pure(const SequentialCircuit &c, const Vec &psi) {
    size_t n = c.num_qubits();
    size_t ns = c.system_qubits.size();
    if (n > kMaxPureQubits) {
        throw std::length_error("register too large for state-vector simulation");
    }
    if ((size_t)psi.size() != ((size_t)1 << ns)) {
        throw std::invalid_argument("input state dimension mismatch");
    }
    auto pos = system_positions(c);
    std::vector<Vec> amp(n);
    for (const auto &[q, spec] : c.ancillas) {
        amp[q] = ancilla_state(spec);
    }
    size_t dim = (size_t)1 << n;
    Vec full(dim);
    for (size_t b = 0; b < dim; b++) {
        size_t sb = 0;
        cd a = 1;
        for (size_t q = 0; q < n; q++) {
            int bit = (b >> q) & 1;
            if (pos[q] != SIZE_MAX) {
                sb |= (size_t)bit << pos[q];
            } else {
                a *= amp[q][bit];
            }
        }
        full[b] = a * psi[sb];
    }
    for (const auto &s : c.slices) {
        for (const auto &g : s.gates) {
            full = local_apply(gate_unitary(g), g.qubits(), full);
        }
    }
    std::vector<size_t> anc;
    for (size_t q = 0; q < n; q++) {
        if (pos[q] == SIZE_MAX) {
            anc.push_back(q);
        }
    }
    Mat m = Mat::Zero((Eigen::Index)1 << ns, (Eigen::Index)1 << anc.size());
    for (size_t b = 0; b < dim; b++) {
        size_t sb = 0, ab = 0;
        for (size_t j = 0; j < ns; j++) {
            sb |= ((b >> c.system_qubits[j]) & 1) << j;
        }
        for (size_t j = 0; j < anc.size(); j++) {
            ab |= ((b >> anc[j]) & 1) << j;
        }
        m(sb, ab) = full[b];
    }
    return m * m.adjoint();
}

Mat simulate_circuit_dilated(const SequentialCircuit &c, const Mat &rho) {
    size_t ns = c.system_qubits.size();
    if ((size_t)rho.rows() != ((size_t)1 << ns) || rho.rows() != rho.cols()) {
        throw std::invalid_argument("input density matrix dimension mismatch");
    }
    c.validate();
    auto pos = system_positions(c);
    Mat out = rho;
    for (const auto &s : c.slices) {
        for (const auto &g : s.gates) {
            auto it = c.ancillas.find(g.control);
            if (g.kind != CliffordGate::Kind::ControlledPauli || it == c.ancillas.end()) {
                throw std::invalid_argument("gate-by-gate dilation needs ancilla-controlled gates");
            }
            std::vector<size_t> sites;
            for (size_t q : g.target.support()) {
                if (pos[q] == SIZE_MAX) {
                    throw std::invalid_argument("gate target touches an ancilla");
                }
                sites.push_back(pos[q]);
            }
            Mat u = gate_unitary(g);
            Vec a = ancilla_state(it->second);
            Eigen::Index dt = u.rows() / 2;
            Mat next = Mat::Zero(out.rows(), out.cols());
            for (int b = 0; b < 2; b++) {
                Mat k = Mat::Zero(dt, dt);
                for (Eigen::Index t = 0; t < dt; t++) {
                    for (Eigen::Index t2 = 0; t2 < dt; t2++) {
                        k(t, t2) = u(b + 2 * t, 0 + 2 * t2) * a[0] + u(b + 2 * t, 1 + 2 * t2) * a[1];
                    }
                }
                next += local_right_adjoint(k, sites, local_left(k, sites, out));
            }
            out = std::move(next);
        }
    }
    return out;
}

}  // namespace holo
