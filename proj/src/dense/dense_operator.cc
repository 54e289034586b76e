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

#include "holo/dense/dense_operator.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace holo {

namespace {

const cd kIPow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};

void check_square(const Mat &m, size_t n) {
    size_t d = (size_t)1 << n;
    if ((size_t)m.rows() != d || (size_t)m.cols() != d) {
        throw std::invalid_argument("matrix dimension is not 2^n");
    }
}

size_t num_qubits_of(const Mat &m) {
    size_t d = (size_t)m.rows();
    if (d == 0 || (d & (d - 1)) != 0 || m.cols() != m.rows()) {
        throw std::invalid_argument("matrix dimension is not a power of two");
    }
    return (size_t)std::countr_zero(d);
}

/// Coefficient c(b) with P|b> = c(b)|b ^ x>.
struct PauliAction {
    uint64_t x;
    uint64_t z;
    cd base;
    cd coeff(uint64_t b) const { return (std::popcount(z & b) & 1) ? -base : base; }
};

PauliAction pauli_action(const PauliString &p) {
    PauliAction a;
    a.x = p.x_mask();
    a.z = p.z_mask();
    int ys = std::popcount(a.x & a.z);
    a.base = kIPow[(p.phase() + ys) & 3];
    return a;
}

std::vector<size_t> spread_offsets(const std::vector<size_t> &sites) {
    size_t k = sites.size();
    std::vector<size_t> off((size_t)1 << k, 0);
    for (size_t j = 0; j < off.size(); j++) {
        size_t o = 0;
        for (size_t t = 0; t < k; t++) {
            if ((j >> t) & 1) {
                o |= (size_t)1 << sites[t];
            }
        }
        off[j] = o;
    }
    return off;
}

}  // namespace

DenseOperator::DenseOperator(size_t n, Mat m) : n_qubits(n), data(std::move(m)) { check_square(data, n); }

DensityMatrix::DensityMatrix(size_t n, Mat m) : DenseOperator(n, std::move(m)) {}

void DensityMatrix::validate(double herm_tol, double trace_tol, double neg_tol) const {
    double herm = (data - data.adjoint()).cwiseAbs().maxCoeff();
    if (herm > herm_tol) {
        throw std::domain_error("density matrix not Hermitian: " + std::to_string(herm));
    }
    double tr_err = std::abs(data.trace() - cd(1, 0));
    if (tr_err > trace_tol) {
        throw std::domain_error("density matrix trace differs from one by " + std::to_string(tr_err));
    }
    double lo = hermitian_eigenvalues((data + data.adjoint()) * 0.5).minCoeff();
    if (lo < -neg_tol) {
        throw std::domain_error("density matrix has negative eigenvalue " + std::to_string(lo));
    }
}

Mat pauli_matrix(const PauliString &p) {
    size_t d = (size_t)1 << p.num_qubits();
    PauliAction a = pauli_action(p);
    Mat m = Mat::Zero(d, d);
    for (uint64_t b = 0; b < d; b++) {
        m(b ^ a.x, b) = a.coeff(b);
    }
    return m;
}

Mat pauli_left(const PauliString &p, const Mat &m) {
    PauliAction a = pauli_action(p);
    Mat out(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        for (uint64_t r = 0; r < (uint64_t)m.rows(); r++) {
            out(r ^ a.x, c) = a.coeff(r) * m(r, c);
        }
    }
    return out;
}

Mat pauli_conjugate(const PauliString &p, const Mat &rho) {
    PauliAction a = pauli_action(p);
    size_t d = (size_t)rho.rows();
    Mat out(d, d);
    for (uint64_t c = 0; c < d; c++) {
        cd cc = std::conj(a.coeff(c));
        for (uint64_t r = 0; r < d; r++) {
            out(r ^ a.x, c ^ a.x) = a.coeff(r) * rho(r, c) * cc;
        }
    }
    return out;
}

Vec pauli_apply(const PauliString &p, const Vec &psi) {
    PauliAction a = pauli_action(p);
    Vec out(psi.size());
    for (uint64_t b = 0; b < (uint64_t)psi.size(); b++) {
        out[b ^ a.x] = a.coeff(b) * psi[b];
    }
    return out;
}

void apply_local_bits(const Mat &s, const std::vector<size_t> &bits, size_t num_bits, const cd *in, cd *out) {
    size_t dl = (size_t)1 << bits.size();
    if ((size_t)s.rows() != dl || (size_t)s.cols() != dl) {
        throw std::invalid_argument("local matrix size does not match its bit list");
    }
    uint64_t mask = 0;
    for (size_t b : bits) {
        if (b >= num_bits || (mask >> b) & 1) {
            throw std::invalid_argument("bad local bit list");
        }
        mask |= uint64_t{1} << b;
    }
    std::vector<uint64_t> off(dl, 0);
    for (size_t j = 0; j < dl; j++) {
        for (size_t t = 0; t < bits.size(); t++) {
            if ((j >> t) & 1) {
                off[j] |= uint64_t{1} << bits[t];
            }
        }
    }
    std::vector<double> sr(dl * dl), si(dl * dl);
    for (size_t j = 0; j < dl; j++) {
        for (size_t i = 0; i < dl; i++) {
            sr[i * dl + j] = s(i, j).real();
            si[i * dl + j] = s(i, j).imag();
        }
    }
    std::vector<double> vr(dl), vi(dl);
    uint64_t full = num_bits >= 64 ? ~uint64_t{0} : ((uint64_t{1} << num_bits) - 1);
    uint64_t comp = full & ~mask;
    uint64_t base = 0;
    do {
        for (size_t j = 0; j < dl; j++) {
            cd x = in[base | off[j]];
            vr[j] = x.real();
            vi[j] = x.imag();
        }
        for (size_t i = 0; i < dl; i++) {
            const double *ar = &sr[i * dl];
            const double *ai = &si[i * dl];
            double re = 0, im = 0;
            for (size_t j = 0; j < dl; j++) {
                re += ar[j] * vr[j] - ai[j] * vi[j];
                im += ar[j] * vi[j] + ai[j] * vr[j];
            }
            out[base | off[i]] = cd(re, im);
        }
        base = ((base | ~comp) + 1) & comp;
    } while (base != 0);
}

Mat local_left(const Mat &k, const std::vector<size_t> &sites, const Mat &m) {
    size_t n = num_qubits_of(m);
    Mat out(m.rows(), m.cols());
    apply_local_bits(k, sites, 2 * n, m.data(), out.data());
    return out;
}

Mat local_right_adjoint(const Mat &k, const std::vector<size_t> &sites, const Mat &m) {
    size_t n = num_qubits_of(m);
    std::vector<size_t> cols;
    for (size_t q : sites) {
        cols.push_back(n + q);
    }
    Mat out(m.rows(), m.cols());
    apply_local_bits(k.conjugate(), cols, 2 * n, m.data(), out.data());
    return out;
}

Vec local_apply(const Mat &k, const std::vector<size_t> &sites, const Vec &psi) {
    size_t d = (size_t)psi.size();
    if (d == 0 || (d & (d - 1)) != 0) {
        throw std::invalid_argument("state dimension is not a power of two");
    }
    Vec out(psi.size());
    apply_local_bits(k, sites, (size_t)std::countr_zero(d), psi.data(), out.data());
    return out;
}

Vec product_state(const std::string &letters) {
    size_t n = letters.size();
    Vec psi = Vec::Zero((Eigen::Index)1 << n);
    double amp = 1.0;
    for (char c : letters) {
        if (c == '+' || c == '-') {
            amp /= std::sqrt(2.0);
        } else if (c != '0' && c != '1') {
            throw std::invalid_argument("product_state letters must be 0, 1, + or -");
        }
    }
    for (uint64_t b = 0; b < (uint64_t)psi.size(); b++) {
        double s = amp;
        bool ok = true;
        for (size_t q = 0; q < n; q++) {
            bool bit = (b >> q) & 1;
            char c = letters[q];
            if ((c == '0' && bit) || (c == '1' && !bit)) {
                ok = false;
                break;
            }
            if (c == '-' && bit) {
                s = -s;
            }
        }
        if (ok) {
            psi[b] = s;
        }
    }
    return psi;
}

Mat pure_density(const Vec &psi) { return psi * psi.adjoint(); }

Mat partial_trace(const Mat &rho, size_t n, const std::vector<size_t> &keep) {
    check_square(rho, n);
    std::vector<char> kept(n, 0);
    for (size_t q : keep) {
        if (q >= n || kept[q]) {
            throw std::invalid_argument("partial_trace: bad keep list");
        }
        kept[q] = 1;
    }
    std::vector<size_t> traced;
    for (size_t q = 0; q < n; q++) {
        if (!kept[q]) {
            traced.push_back(q);
        }
    }
    auto off_keep = spread_offsets(keep);
    auto off_tr = spread_offsets(traced);
    size_t dk = off_keep.size();
    Mat out = Mat::Zero(dk, dk);
    for (size_t t : off_tr) {
        for (size_t j = 0; j < dk; j++) {
            for (size_t i = 0; i < dk; i++) {
                out(i, j) += rho(off_keep[i] | t, off_keep[j] | t);
            }
        }
    }
    return out;
}

Mat stabilizer_density(const StabilizerGroup &g) {
    size_t n = g.num_qubits();
    size_t d = (size_t)1 << n;
    Mat rho = Mat::Identity(d, d) / (double)d;
    for (const auto &s : g.generators()) {
        rho = (rho + pauli_left(s, rho)).eval();
    }
    return rho;
}

double trace_distance(const Mat &a, const Mat &b) { return 0.5 * hermitian_trace_norm(a - b); }

Mat pauli_projector(const PauliString &p, int eigenvalue) {
    size_t d = (size_t)1 << p.num_qubits();
    return (Mat::Identity(d, d) + (double)eigenvalue * pauli_matrix(p)) * 0.5;
}

}  // namespace holo
