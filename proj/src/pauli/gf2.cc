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

#include "holo/pauli/gf2.h"

#include <bit>
#include <stdexcept>

namespace holo {

namespace {

size_t first_set_bit(const BitVec &v) {
    for (size_t k = 0; k < v.words.size(); k++) {
        if (v.words[k]) {
            return k * 64 + (size_t)std::countr_zero(v.words[k]);
        }
    }
    return v.n;
}

}  // namespace

Gf2Basis::Gf2Basis(size_t num_bits, size_t num_tags) : num_bits_(num_bits), num_tags_(num_tags) {}

std::pair<BitVec, BitVec> Gf2Basis::reduce(const BitVec &row) const {
    if (row.n != num_bits_) {
        throw std::invalid_argument("GF(2) row width mismatch");
    }
    BitVec r = row;
    BitVec t(num_tags_);
    for (size_t k = 0; k < rows_.size(); k++) {
        if (r.get(pivots_[k])) {
            r ^= rows_[k];
            t ^= tags_[k];
        }
    }
    return {r, t};
}

bool Gf2Basis::insert(const BitVec &row, const BitVec &tags) {
    auto [r, t] = reduce(row);
    size_t p = first_set_bit(r);
    if (p == r.n) {
        return false;
    }
    t ^= tags;
    rows_.push_back(std::move(r));
    tags_.push_back(std::move(t));
    pivots_.push_back(p);
    return true;
}

BitVec symplectic(const PauliString &p) {
    size_t n = p.num_qubits();
    BitVec v(2 * n);
    for (size_t q = 0; q < n; q++) {
        if (p.x(q)) {
            v.set(q, true);
        }
        if (p.z(q)) {
            v.set(n + q, true);
        }
    }
    return v;
}

BitVec symplectic_restricted(const PauliString &p, const std::vector<size_t> &qubits) {
    size_t m = qubits.size();
    BitVec v(2 * m);
    for (size_t k = 0; k < m; k++) {
        if (p.x(qubits[k])) {
            v.set(k, true);
        }
        if (p.z(qubits[k])) {
            v.set(m + k, true);
        }
    }
    return v;
}

size_t gf2_rank(const std::vector<BitVec> &rows) {
    if (rows.empty()) {
        return 0;
    }
    Gf2Basis basis(rows[0].n, 0);
    BitVec none(0);
    for (const auto &r : rows) {
        basis.insert(r, none);
    }
    return basis.rank();
}

std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t num_cols) {
    std::vector<BitVec> m = rows;
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < num_cols && r < m.size(); c++) {
        size_t sel = r;
        while (sel < m.size() && !m[sel].get(c)) {
            sel++;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[r], m[sel]);
        for (size_t k = 0; k < m.size(); k++) {
            if (k != r && m[k].get(c)) {
                m[k] ^= m[r];
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    std::vector<char> is_pivot(num_cols, 0);
    for (size_t c : pivot_cols) {
        is_pivot[c] = 1;
    }
    std::vector<BitVec> out;
    for (size_t f = 0; f < num_cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(num_cols);
        v.set(f, true);
        for (size_t k = 0; k < pivot_cols.size(); k++) {
            if (m[k].get(f)) {
                v.set(pivot_cols[k], true);
            }
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace holo
