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

#include "holo/dense/sector.h"

#include <bit>
#include <map>
#include <stdexcept>

#include "holo/dense/dense_operator.h"

namespace holo {

DiagonalCharge DiagonalCharge::parity(size_t n, uint64_t mask, std::string name) {
    DiagonalCharge q;
    q.name = std::move(name);
    q.label.resize((size_t)1 << n);
    for (uint64_t b = 0; b < q.label.size(); b++) {
        q.label[b] = std::popcount(b & mask) & 1;
    }
    return q;
}

DiagonalCharge DiagonalCharge::number(size_t n, std::string name) {
    DiagonalCharge q;
    q.name = std::move(name);
    q.label.resize((size_t)1 << n);
    for (uint64_t b = 0; b < q.label.size(); b++) {
        q.label[b] = std::popcount(b);
    }
    return q;
}

std::vector<int> SectorSpec::combined(size_t dim, int *num_ids) const {
    for (const auto &q : charges) {
        if (q.label.size() != dim) {
            throw std::invalid_argument("charge '" + q.name + "' has the wrong dimension");
        }
    }
    std::vector<std::vector<int>> keys(dim);
    std::map<std::vector<int>, int> ids;
    for (size_t b = 0; b < dim; b++) {
        for (const auto &q : charges) {
            keys[b].push_back(q.label[b]);
        }
        ids.emplace(keys[b], 0);
    }
    int k = 0;
    for (auto &kv : ids) {
        kv.second = k++;
    }
    std::vector<int> out(dim);
    for (size_t b = 0; b < dim; b++) {
        out[b] = ids[keys[b]];
    }
    *num_ids = k;
    return out;
}

std::string SectorSpec::describe(int id, size_t dim) const {
    int num = 0;
    auto ids = combined(dim, &num);
    for (size_t b = 0; b < dim; b++) {
        if (ids[b] == id) {
            std::string s;
            for (const auto &q : charges) {
                if (!s.empty()) {
                    s += ",";
                }
                s += q.name + "=" + std::to_string(q.label[b]);
            }
            return s.empty() ? "all" : s;
        }
    }
    return "?";
}

namespace {

Mat normalize_projected(Mat r) {
    cd tr = r.trace();
    if (std::abs(tr) < 1e-14) {
        throw std::domain_error("sector projection has zero norm");
    }
    return r / tr;
}

}  // namespace

Mat sector_project(const Mat &rho, const PauliString &s, int eigenvalue) {
    if (!s.is_hermitian() || (eigenvalue != 1 && eigenvalue != -1)) {
        throw std::invalid_argument("sector_project needs a Hermitian Pauli and eigenvalue ±1");
    }
    Mat pr = rho + (double)eigenvalue * pauli_left(s, rho);
    Mat prp = pr + (double)eigenvalue * pauli_left(s, pr.adjoint()).adjoint();
    return normalize_projected(prp * 0.25);
}

Vec sector_project(const Vec &psi, const PauliString &s, int eigenvalue) {
    if (!s.is_hermitian() || (eigenvalue != 1 && eigenvalue != -1)) {
        throw std::invalid_argument("sector_project needs a Hermitian Pauli and eigenvalue ±1");
    }
    Vec v = (psi + (double)eigenvalue * pauli_apply(s, psi)) * 0.5;
    double nrm = v.norm();
    if (nrm < 1e-14) {
        throw std::domain_error("sector projection has zero norm");
    }
    return v / nrm;
}

Mat sector_project(const Mat &rho, const Mat &s, int eigenvalue) {
    size_t d = (size_t)s.rows();
    if ((s - s.adjoint()).cwiseAbs().maxCoeff() > 1e-12 ||
        (s * s - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("sector_project needs a Hermitian unitary");
    }
    Mat p = (Mat::Identity(d, d) + (double)eigenvalue * s) * 0.5;
    return normalize_projected(p * rho * p);
}

Mat sector_project(const Mat &rho, const DiagonalCharge &q, int value) {
    Mat out = rho;
    for (Eigen::Index c = 0; c < out.cols(); c++) {
        for (Eigen::Index r = 0; r < out.rows(); r++) {
            if (q.label[r] != value || q.label[c] != value) {
                out(r, c) = 0;
            }
        }
    }
    return normalize_projected(out);
}

}  // namespace holo
