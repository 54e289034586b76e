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

#include "holo/pauli/stabilizer_group.h"

#include <sstream>
#include <stdexcept>

#include "holo/pauli/gf2.h"

namespace holo {

namespace {

std::vector<size_t> complement(size_t n, const std::vector<size_t> &region) {
    std::vector<char> in(n, 0);
    for (size_t q : region) {
        if (q >= n) {
            throw std::out_of_range("region site out of range");
        }
        in[q] = 1;
    }
    std::vector<size_t> out;
    for (size_t q = 0; q < n; q++) {
        if (!in[q]) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace

StabilizerGroup::StabilizerGroup(size_t num_qubits, std::vector<PauliString> generators)
    : n_(num_qubits), gens_(std::move(generators)) {
    for (const auto &g : gens_) {
        if (g.num_qubits() != n_) {
            throw std::invalid_argument("generator size mismatch");
        }
        if (!g.is_hermitian()) {
            throw std::invalid_argument("generator with imaginary phase: " + g.str());
        }
    }
    for (size_t a = 0; a < gens_.size(); a++) {
        for (size_t b = a + 1; b < gens_.size(); b++) {
            if (!gens_[a].commutes(gens_[b])) {
                throw std::invalid_argument("generators do not commute: " + gens_[a].str() + " " + gens_[b].str());
            }
        }
    }
    if (group_rank(gens_) != gens_.size()) {
        throw std::invalid_argument("generators are not independent");
    }
}

StabilizerGroup StabilizerGroup::from_redundant(size_t num_qubits, const std::vector<PauliString> &elements) {
    std::vector<PauliString> kept;
    Gf2Basis basis(2 * num_qubits, elements.size());
    for (size_t k = 0; k < elements.size(); k++) {
        BitVec tag(elements.size());
        tag.set(k, true);
        if (basis.insert(symplectic(elements[k]), tag)) {
            kept.push_back(elements[k]);
        }
    }
    StabilizerGroup g(num_qubits, kept);
    for (const auto &e : elements) {
        if (!g.contains(e)) {
            throw std::invalid_argument("inconsistent stabilizer list (contains -I): " + e.str());
        }
    }
    return g;
}

std::optional<PauliString> StabilizerGroup::element_with_letters(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    Gf2Basis basis(2 * n_, gens_.size());
    for (size_t k = 0; k < gens_.size(); k++) {
        BitVec tag(gens_.size());
        tag.set(k, true);
        basis.insert(symplectic(gens_[k]), tag);
    }
    auto [res, tags] = basis.reduce(symplectic(p));
    if (res.any()) {
        return std::nullopt;
    }
    PauliString acc(n_);
    for (size_t k = 0; k < gens_.size(); k++) {
        if (tags.get(k)) {
            acc *= gens_[k];
        }
    }
    return acc;
}

bool StabilizerGroup::contains(const PauliString &p) const {
    auto e = element_with_letters(p);
    return e.has_value() && e->phase() == p.phase();
}

size_t StabilizerGroup::subgroup_dim_inside(const std::vector<size_t> &region) const {
    std::vector<size_t> outside = complement(n_, region);
    std::vector<BitVec> rows;
    rows.reserve(gens_.size());
    for (const auto &g : gens_) {
        rows.push_back(symplectic_restricted(g, outside));
    }
    return gens_.size() - gf2_rank(rows);
}

std::string StabilizerGroup::to_text() const {
    std::string out;
    for (const auto &g : gens_) {
        std::string s = g.str();
        out += s;
        out += '\n';
    }
    return out;
}

StabilizerGroup StabilizerGroup::from_text(std::string_view text) {
    std::vector<PauliString> gens;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t n = 0;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line[0] != '+' && line[0] != '-') {
            throw std::invalid_argument("generator line must start with a sign: " + line);
        }
        PauliString p = PauliString::from_str(line);
        if (first) {
            n = p.num_qubits();
            first = false;
        } else if (p.num_qubits() != n) {
            throw std::invalid_argument("inconsistent generator length");
        }
        gens.push_back(std::move(p));
    }
    return StabilizerGroup(n, std::move(gens));
}

size_t group_rank(const std::vector<PauliString> &generators) {
    std::vector<BitVec> rows;
    rows.reserve(generators.size());
    for (const auto &g : generators) {
        rows.push_back(symplectic(g));
    }
    return gf2_rank(rows);
}

double stabilizer_entropy(const StabilizerGroup &g, const std::vector<size_t> &region) {
    return (double)region.size() - (double)g.subgroup_dim_inside(region);
}

double stabilizer_cmi(const StabilizerGroup &g, const Partition &p) {
    if (p.num_qubits() != g.num_qubits()) {
        throw std::invalid_argument("partition does not cover the register");
    }
    auto ab = p.sites(Region::A, Region::B);
    auto bc = p.sites(Region::B, Region::C);
    auto b = p.sites(Region::B);
    auto abc = p.all_sites();
    return stabilizer_entropy(g, ab) + stabilizer_entropy(g, bc) - stabilizer_entropy(g, b) -
           stabilizer_entropy(g, abc);
}

StabilizerGroup complete_to_pure(const StabilizerGroup &g) {
    size_t n = g.num_qubits();
    std::vector<PauliString> gens = g.generators();
    // Prefer single-qubit Z then X completions; they keep the result readable.
    for (char letter : {'Z', 'X'}) {
        for (size_t q = 0; q < n && gens.size() < n; q++) {
            PauliString cand = PauliString::from_sites(n, letter, {q});
            bool ok = true;
            for (const auto &h : gens) {
                if (!h.commutes(cand)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gens.push_back(cand);
                if (group_rank(gens) != gens.size()) {
                    gens.pop_back();
                }
            }
        }
    }
    while (gens.size() < n) {
        // Any vector of the symplectic complement outside the span extends the group.
        std::vector<BitVec> rows;
        for (const auto &h : gens) {
            BitVec v(2 * n);
            for (size_t q = 0; q < n; q++) {
                v.set(q, h.z(q));
                v.set(n + q, h.x(q));
            }
            rows.push_back(v);
        }
        bool added = false;
        for (const BitVec &v : gf2_nullspace(rows, 2 * n)) {
            PauliString cand(n);
            for (size_t q = 0; q < n; q++) {
                bool x = v.get(q), z = v.get(n + q);
                cand.set_letter(q, x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
            }
            gens.push_back(cand);
            if (group_rank(gens) == gens.size()) {
                added = true;
                break;
            }
            gens.pop_back();
        }
        if (!added) {
            throw std::logic_error("could not complete stabilizer group");
        }
    }
    return StabilizerGroup(n, gens);
}

}  // namespace holo
