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

#include "holo/pauli/partition.h"

#include <stdexcept>

namespace holo {

std::vector<size_t> Partition::sites(Region r) const {
    std::vector<size_t> out;
    for (size_t q = 0; q < assignment.size(); q++) {
        if (assignment[q] == r) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<size_t> Partition::sites(Region r1, Region r2) const {
    std::vector<size_t> out;
    for (size_t q = 0; q < assignment.size(); q++) {
        if (assignment[q] == r1 || assignment[q] == r2) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<size_t> Partition::all_sites() const {
    std::vector<size_t> out(assignment.size());
    for (size_t q = 0; q < out.size(); q++) {
        out[q] = q;
    }
    return out;
}

void Partition::validate() const {
    if (sites(Region::A).empty() || sites(Region::C).empty()) {
        throw std::invalid_argument("partition needs nonempty A and C");
    }
}

Partition Partition::swapped() const {
    Partition p = *this;
    for (auto &r : p.assignment) {
        if (r == Region::A) {
            r = Region::C;
        } else if (r == Region::C) {
            r = Region::A;
        }
    }
    return p;
}

Partition Partition::ring(size_t L, size_t a, size_t b1, size_t c, size_t b2, size_t offset) {
    if (a + b1 + c + b2 != L) {
        throw std::invalid_argument("ring arcs must add up to L");
    }
    if (a == 0 || c == 0) {
        throw std::invalid_argument("ring partition needs nonempty A and C");
    }
    Partition p;
    p.assignment.assign(L, Region::B);
    for (size_t k = 0; k < L; k++) {
        size_t site = (k + offset) % L;
        if (k < a) {
            p.assignment[site] = Region::A;
        } else if (k < a + b1) {
            p.assignment[site] = Region::B;
        } else if (k < a + b1 + c) {
            p.assignment[site] = Region::C;
        }
    }
    p.layout = "ring A" + std::to_string(a) + " B" + std::to_string(b1) + " C" + std::to_string(c) + " B" +
               std::to_string(b2) + " @" + std::to_string(offset);
    return p;
}

Partition Partition::from_sets(
    size_t n, const std::vector<size_t> &a, const std::vector<size_t> &b, const std::vector<size_t> &c) {
    Partition p;
    std::vector<int> seen(n, 0);
    p.assignment.assign(n, Region::B);
    auto put = [&](const std::vector<size_t> &s, Region r) {
        for (size_t q : s) {
            if (q >= n || seen[q]++) {
                throw std::invalid_argument("partition sets must be disjoint and in range");
            }
            p.assignment[q] = r;
        }
    };
    put(a, Region::A);
    put(b, Region::B);
    put(c, Region::C);
    for (size_t q = 0; q < n; q++) {
        if (!seen[q]) {
            throw std::invalid_argument("partition must cover every qubit");
        }
    }
    p.layout = "sets";
    return p;
}

}  // namespace holo
