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

#include "holo/diagnostics/entropy.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "holo/dense/dense_operator.h"

namespace holo {

double von_neumann_entropy(const Mat &rho) {
    if (rho.rows() == 1) {
        return 0;
    }
    Eigen::VectorXd ev = hermitian_eigenvalues((rho + rho.adjoint()) * 0.5);
    double s = 0;
    for (Eigen::Index i = 0; i < ev.size(); i++) {
        double l = ev[i];
        if (l < -1e-8) {
            throw std::domain_error("state has eigenvalue " + std::to_string(l));
        }
        if (l > kEntropyClip) {
            s -= l * std::log2(l);
        }
    }
    return s;
}

double von_neumann_entropy(const Mat &rho, size_t n, const std::vector<size_t> &region) {
    if (region.empty()) {
        return 0;
    }
    if (region.size() == n) {
        return von_neumann_entropy(rho);
    }
    return von_neumann_entropy(partial_trace(rho, n, region));
}

double cmi(const Mat &rho, const Partition &p) {
    p.validate();
    size_t n = p.num_qubits();
    if ((size_t)rho.rows() != ((size_t)1 << n)) {
        throw std::invalid_argument("cmi: partition does not cover the state");
    }
    double sab = von_neumann_entropy(rho, n, p.sites(Region::A, Region::B));
    double sbc = von_neumann_entropy(rho, n, p.sites(Region::B, Region::C));
    double sb = von_neumann_entropy(rho, n, p.sites(Region::B));
    double sabc = von_neumann_entropy(rho, n, p.all_sites());
    double v = sab + sbc - sb - sabc;
    if (v < -1e-8) {
        throw std::domain_error("strong subadditivity violated: cmi = " + std::to_string(v));
    }
    return v;
}

}  // namespace holo
