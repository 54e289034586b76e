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

#include "holo/pauli/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace holo {

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.n != n) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    for (size_t k = 0; k < words.size(); k++) {
        words[k] ^= other.words[k];
    }
    return *this;
}

bool BitVec::any() const {
    for (uint64_t w : words) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t c = 0;
    for (uint64_t w : words) {
        c += std::popcount(w);
    }
    return c;
}

PauliString::PauliString(size_t num_qubits) : n_(num_qubits), xs_(num_qubits), zs_(num_qubits) {}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            phase = 2;
        }
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase = (phase + 1) & 3;
        k++;
    }
    PauliString p(text.size() - k);
    for (size_t q = 0; k < text.size(); k++, q++) {
        p.set_letter(q, text[k]);
    }
    p.phase_ = phase;
    return p;
}

PauliString PauliString::from_sites(size_t num_qubits, char letter, const std::vector<size_t> &sites) {
    PauliString p(num_qubits);
    for (size_t q : sites) {
        if (q >= num_qubits) {
            throw std::out_of_range("Pauli site out of range");
        }
        // Repeated sites multiply, so repeated letters cancel.
        PauliString single(num_qubits);
        single.set_letter(q, letter);
        p *= single;
    }
    return p;
}

char PauliString::letter(size_t q) const {
    static const char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(size_t)xs_.get(q) | ((size_t)zs_.get(q) << 1)];
}

void PauliString::set_letter(size_t q, char letter) {
    if (q >= n_) {
        throw std::out_of_range("Pauli site out of range");
    }
    switch (letter) {
        case 'I':
        case '_':
            xs_.set(q, false);
            zs_.set(q, false);
            break;
        case 'X':
            xs_.set(q, true);
            zs_.set(q, false);
            break;
        case 'Y':
            xs_.set(q, true);
            zs_.set(q, true);
            break;
        case 'Z':
            xs_.set(q, false);
            zs_.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("bad Pauli letter '") + letter + "'");
    }
}

int PauliString::sign() const {
    if (phase_ & 1) {
        throw std::logic_error("non-Hermitian Pauli has no real sign");
    }
    return phase_ == 0 ? +1 : -1;
}

std::string PauliString::str() const {
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase_];
    s.reserve(n_ + 2);
    for (size_t q = 0; q < n_; q++) {
        s.push_back(letter(q));
    }
    return s;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.words.size(); k++) {
        w += std::popcount(xs_.words[k] | zs_.words[k]);
    }
    return w;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < n_; q++) {
        if (xs_.get(q) || zs_.get(q)) {
            out.push_back(q);
        }
    }
    return out;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    int acc = phase_ + other.phase_;
    for (size_t k = 0; k < xs_.words.size(); k++) {
        uint64_t x1 = xs_.words[k], z1 = zs_.words[k];
        uint64_t x2 = other.xs_.words[k], z2 = other.zs_.words[k];
        uint64_t X1 = x1 & ~z1, Y1 = x1 & z1, Z1 = ~x1 & z1;
        uint64_t X2 = x2 & ~z2, Y2 = x2 & z2, Z2 = ~x2 & z2;
        uint64_t plus = (X1 & Y2) | (Y1 & Z2) | (Z1 & X2);
        uint64_t minus = (X1 & Z2) | (Y1 & X2) | (Z1 & Y2);
        acc += std::popcount(plus);
        acc -= std::popcount(minus);
        xs_.words[k] = x1 ^ x2;
        zs_.words[k] = z1 ^ z2;
    }
    phase_ = (uint8_t)(((acc % 4) + 4) % 4);
    return *this;
}

PauliString PauliString::operator*(const PauliString &other) const {
    PauliString r = *this;
    r *= other;
    return r;
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    size_t c = 0;
    for (size_t k = 0; k < xs_.words.size(); k++) {
        c += std::popcount((xs_.words[k] & other.zs_.words[k]) ^ (zs_.words[k] & other.xs_.words[k]));
    }
    return (c & 1) == 0;
}

PauliString PauliString::restricted(const std::vector<size_t> &qubits) const {
    PauliString r(qubits.size());
    for (size_t k = 0; k < qubits.size(); k++) {
        r.xs_.set(k, xs_.get(qubits[k]));
        r.zs_.set(k, zs_.get(qubits[k]));
    }
    return r;
}

PauliString PauliString::embedded(size_t num_qubits, const std::vector<size_t> &map) const {
    if (map.size() != n_) {
        throw std::invalid_argument("embedding map size mismatch");
    }
    PauliString r(num_qubits);
    for (size_t k = 0; k < n_; k++) {
        r.xs_.set(map[k], xs_.get(k));
        r.zs_.set(map[k], zs_.get(k));
    }
    r.phase_ = phase_;
    return r;
}

uint64_t PauliString::x_mask() const {
    if (n_ > 64) {
        throw std::length_error("mask requires at most 64 qubits");
    }
    return n_ ? xs_.words[0] : 0;
}

uint64_t PauliString::z_mask() const {
    if (n_ > 64) {
        throw std::length_error("mask requires at most 64 qubits");
    }
    return n_ ? zs_.words[0] : 0;
}

PauliString multiply(const PauliString &p, const PauliString &q) { return p * q; }

bool commutes(const PauliString &p, const PauliString &q) { return p.commutes(q); }

}  // namespace holo
