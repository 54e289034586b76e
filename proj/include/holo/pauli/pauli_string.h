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

#ifndef HOLO_PAULI_PAULI_STRING_H
#define HOLO_PAULI_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace holo {

/// Bit vector stored in 64-bit words. Bit q lives in word q/64.
struct BitVec {
    size_t n = 0;
    std::vector<uint64_t> words;

    BitVec() = default;
    explicit BitVec(size_t num_bits) : n(num_bits), words((num_bits + 63) / 64, 0) {}

    bool get(size_t k) const { return (words[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool v) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (v) {
            words[k >> 6] |= m;
        } else {
            words[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) { words[k >> 6] ^= uint64_t{1} << (k & 63); }
    BitVec &operator^=(const BitVec &other);
    bool operator==(const BitVec &other) const { return n == other.n && words == other.words; }
    bool any() const;
    size_t popcount() const;
};

/// A Pauli operator i^phase * P_0 ⊗ P_1 ⊗ ... with P_q determined by (x_q, z_q):
/// (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z.
///
/// Phase convention: X·Z = -iY on a single site.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses "+XYZ", "-IXZ", "+iXX", "-iZ". A missing sign means "+".
    static PauliString from_str(std::string_view text);
    /// Single-site or multi-site constructor: letters placed on the listed qubits.
    static PauliString from_sites(size_t num_qubits, char letter, const std::vector<size_t> &sites);

    size_t num_qubits() const { return n_; }
    bool x(size_t q) const { return xs_.get(q); }
    bool z(size_t q) const { return zs_.get(q); }
    char letter(size_t q) const;
    void set_letter(size_t q, char letter);

    /// Phase exponent k in i^k, k in {0,1,2,3}.
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t k) { phase_ = k & 3; }
    /// +1 or -1 for Hermitian operators; throws otherwise.
    int sign() const;
    bool is_hermitian() const { return (phase_ & 1) == 0; }

    const BitVec &xs() const { return xs_; }
    const BitVec &zs() const { return zs_; }

    std::string str() const;
    size_t weight() const;
    bool is_identity() const { return !xs_.any() && !zs_.any(); }
    std::vector<size_t> support() const;

    /// Product this * other with exact phase tracking.
    PauliString operator*(const PauliString &other) const;
    PauliString &operator*=(const PauliString &other);
    bool operator==(const PauliString &other) const {
        return n_ == other.n_ && phase_ == other.phase_ && xs_ == other.xs_ && zs_ == other.zs_;
    }
    bool operator!=(const PauliString &other) const { return !(*this == other); }
    /// Equality ignoring the phase.
    bool same_letters(const PauliString &other) const { return xs_ == other.xs_ && zs_ == other.zs_; }

    bool commutes(const PauliString &other) const;

    /// Restriction of the letters to a subset of qubits, re-indexed in the given order. Phase dropped.
    PauliString restricted(const std::vector<size_t> &qubits) const;
    /// Embed into a larger register: qubit k of this goes to qubit map[k].
    PauliString embedded(size_t num_qubits, const std::vector<size_t> &map) const;

    /// Action on a computational basis state |b> (bit q of b is qubit q):
    /// P|b> = coeff * |b ^ xmask>. Only valid for num_qubits <= 64.
    uint64_t x_mask() const;
    uint64_t z_mask() const;

   private:
    size_t n_ = 0;
    BitVec xs_;
    BitVec zs_;
    uint8_t phase_ = 0;
};

PauliString multiply(const PauliString &p, const PauliString &q);
bool commutes(const PauliString &p, const PauliString &q);

}  // namespace holo

#endif
