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

#include "holo/pauli/clifford.h"

#include <stdexcept>

namespace holo {

namespace {

PauliString hadamard_conjugate(size_t site, const PauliString &p) {
    PauliString r = p;
    bool x = p.x(site), z = p.z(site);
    if (x && z) {
        // H Y H = -Y
        r.set_phase((uint8_t)(p.phase() + 2));
    } else if (x) {
        r.set_letter(site, 'Z');
    } else if (z) {
        r.set_letter(site, 'X');
    }
    return r;
}

/// Z-basis controlled P. Uses that conjugation is a homomorphism:
/// X_c -> X_c P, Y_c -> Y_c P, Z_c -> Z_c, and Q on the rest picks up Z_c when it anticommutes with P.
PauliString z_controlled_conjugate(size_t c, const PauliString &target, const PauliString &p) {
    size_t n = p.num_qubits();
    PauliString rest = p;
    rest.set_letter(c, 'I');
    rest.set_phase(0);
    char lc = p.letter(c);

    PauliString out(n);
    out.set_phase(p.phase());
    if (lc != 'I') {
        PauliString on_control(n);
        on_control.set_letter(c, lc);
        out *= on_control;
        if (lc == 'X' || lc == 'Y') {
            out *= target;
        }
    }
    if (!rest.commutes(target)) {
        out *= PauliString::from_sites(n, 'Z', {c});
    }
    out *= rest;
    return out;
}

}  // namespace

CliffordGate CliffordGate::hadamard(size_t num_qubits, size_t site) {
    if (site >= num_qubits) {
        throw std::out_of_range("hadamard site out of range");
    }
    CliffordGate g;
    g.kind = Kind::Hadamard;
    g.control = site;
    g.target = PauliString(num_qubits);
    return g;
}

CliffordGate CliffordGate::controlled_pauli(size_t control, ControlBasis basis, PauliString target) {
    if (control >= target.num_qubits()) {
        throw std::out_of_range("control out of range");
    }
    if (!target.is_hermitian()) {
        throw std::invalid_argument("controlled Pauli target must be Hermitian");
    }
    if (target.x(control) || target.z(control)) {
        throw std::invalid_argument("controlled Pauli target overlaps the control");
    }
    CliffordGate g;
    g.kind = Kind::ControlledPauli;
    g.control = control;
    g.basis = basis;
    g.target = std::move(target);
    return g;
}

std::vector<size_t> CliffordGate::qubits() const {
    std::vector<size_t> out{control};
    if (kind == Kind::ControlledPauli) {
        for (size_t q : target.support()) {
            out.push_back(q);
        }
    }
    return out;
}

std::string CliffordGate::str() const {
    if (kind == Kind::Hadamard) {
        return "H " + std::to_string(control);
    }
    std::string s = std::string("CP ") + std::to_string(control) + (basis == ControlBasis::Z ? " Z " : " X ");
    s += target.sign() > 0 ? "+" : "-";
    bool first = true;
    for (size_t q : target.support()) {
        if (!first) {
            s += ",";
        }
        first = false;
        s += target.letter(q);
        s += std::to_string(q);
    }
    return s;
}

PauliString conjugate(const CliffordGate &gate, const PauliString &p) {
    if (p.num_qubits() != gate.num_qubits()) {
        throw std::invalid_argument("gate and Pauli sizes differ");
    }
    if (gate.kind == CliffordGate::Kind::Hadamard) {
        return hadamard_conjugate(gate.control, p);
    }
    if (gate.basis == ControlBasis::Z) {
        return z_controlled_conjugate(gate.control, gate.target, p);
    }
    PauliString q = hadamard_conjugate(gate.control, p);
    q = z_controlled_conjugate(gate.control, gate.target, q);
    return hadamard_conjugate(gate.control, q);
}

}  // namespace holo
