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

#include "holo/holography/lattice.h"

#include <stdexcept>

namespace holo {

Lattice::Lattice(Kind kind, size_t lx, size_t ly, size_t lz) : kind_(kind), lx_(lx), ly_(ly), lz_(lz) {}

std::string Lattice::kind_name() const {
    switch (kind_) {
        case Kind::Ring1d:
            return "ring_1d";
        case Kind::SquareCylinder:
            return "square_cylinder";
        default:
            return "cubic_slab";
    }
}

Lattice::Kind Lattice::kind_from_name(const std::string &name) {
    if (name == "ring_1d") {
        return Kind::Ring1d;
    }
    if (name == "square_cylinder") {
        return Kind::SquareCylinder;
    }
    if (name == "cubic_slab") {
        return Kind::CubicSlab;
    }
    throw std::invalid_argument("unknown lattice kind '" + name + "'");
}

size_t Lattice::add(const std::string &label) {
    if (index_.count(label)) {
        throw std::invalid_argument("duplicate qubit label '" + label + "'");
    }
    size_t q = labels_.size();
    labels_.push_back(label);
    index_[label] = q;
    return q;
}

size_t Lattice::id(const std::string &label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        throw std::out_of_range("no qubit labelled '" + label + "'");
    }
    return it->second;
}

std::vector<size_t> Lattice::select(const std::string &prefix) const {
    std::vector<size_t> out;
    for (size_t q = 0; q < labels_.size(); q++) {
        if (labels_[q].rfind(prefix, 0) == 0) {
            out.push_back(q);
        }
    }
    return out;
}

void Lattice::validate() const {
    if (index_.size() != labels_.size()) {
        throw std::logic_error("lattice index is not a bijection");
    }
    for (size_t q = 0; q < labels_.size(); q++) {
        auto it = index_.find(labels_[q]);
        if (it == index_.end() || it->second != q) {
            throw std::logic_error("lattice index is not a bijection at " + labels_[q]);
        }
    }
    for (size_t q : top) {
        if (q >= labels_.size()) {
            throw std::logic_error("top selector out of range");
        }
    }
    for (size_t q : bottom) {
        if (q >= labels_.size()) {
            throw std::logic_error("bottom selector out of range");
        }
    }
}

size_t wrap(long v, size_t n) {
    long m = (long)n;
    return (size_t)(((v % m) + m) % m);
}

std::string site_label(const std::string &name, std::initializer_list<long> coords, long time) {
    std::string s = name + "(";
    bool first = true;
    for (long c : coords) {
        if (!first) {
            s += ",";
        }
        s += std::to_string(c);
        first = false;
    }
    if (time >= 0) {
        s += "|" + std::to_string(time);
    }
    return s + ")";
}

}  // namespace holo
